from .base import *  # noqa: F403
from .base import LOGGING
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#debug
DEBUG = True
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="kq3VJvA0Zt9mXh2cR7LwY5nEoPbd8Gs1uTfKiMjN4lHxWzy6QeCrgUaDSBIOp",
)

# LOGGING
# ------------------------------------------------------------------------------
# Quieter default for interactive use; LORENZ_CODE_LOG_LEVEL still applies to our loggers.
LOGGING["formatters"]["verbose"]["format"] = "%(levelname)s %(name)s: %(message)s"

# Celery
# ------------------------------------------------------------------------------
# https://docs.celeryq.dev/en/stable/userguide/configuration.html#task-eager-propagates
CELERY_TASK_EAGER_PROPAGATES = True
