# ruff: noqa: PTH100
"""Sphinx configuration; autodoc imports the apps, so Django is set up first."""

import os
import sys

import django

sys.path.insert(0, os.path.abspath(".."))
if os.getenv("READTHEDOCS", default="False") == "True":
    os.environ["DJANGO_READ_DOT_ENV_FILE"] = "True"
os.environ.setdefault("DATABASE_URL", "sqlite:///:memory:")
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")
django.setup()

project = "lorenz-code"
copyright = """2026, lorenz-code developers"""  # noqa: A001
author = "lorenz-code developers"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

html_theme = "alabaster"
