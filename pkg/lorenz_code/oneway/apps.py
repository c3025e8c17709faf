from django.apps import AppConfig


class OneWayConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "lorenz_code.oneway"
    verbose_name = "One-Way Hash"
