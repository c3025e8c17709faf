from django.apps import AppConfig


class DynamicsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "lorenz_code.dynamics"
    verbose_name = "Lorenz Dynamics"
