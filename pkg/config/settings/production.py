from .base import *  # noqa: F403
from .base import DATABASES
from .base import LOGGING
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env("DJANGO_SECRET_KEY")

# DATABASES
# ------------------------------------------------------------------------------
DATABASES["default"] = env.db("DATABASE_URL")
DATABASES["default"]["CONN_MAX_AGE"] = env.int("CONN_MAX_AGE", default=60)

# lorenz_code
# ------------------------------------------------------------------------------
# Workers share the load of grid experiments and scans.
LORENZ_CODE_PARALLEL = env.bool("LORENZ_CODE_PARALLEL", default=True)

# LOGGING
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#logging
LOGGING["loggers"]["celery"] = {
    "level": env("CELERY_LOG_LEVEL", default="WARNING"),
    "handlers": ["console"],
    "propagate": False,
}
