from django.apps import AppConfig


class RandQualityConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "lorenz_code.randquality"
    verbose_name = "Randomness quality"
