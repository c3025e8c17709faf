# Loaded with Django so that @shared_task in cup and randquality binds to this app.
from .celery_app import app as celery_app

__all__ = ("celery_app",)
