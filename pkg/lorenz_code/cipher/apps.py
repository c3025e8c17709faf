from django.apps import AppConfig


class CipherConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "lorenz_code.cipher"
    verbose_name = "Lorenz Code Cipher"
