#!/usr/bin/env python
"""Administrative entry point: migrations for experiment records and every
lorenz-code subcommand under its module name (``fit_error_law``, ...)."""

import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")

    try:
        from django.core.management import execute_from_command_line  # noqa: PLC0415
    except ImportError as exc:
        msg = "Django is not importable; install the project with 'uv sync' first."
        raise ImportError(msg) from exc

    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
