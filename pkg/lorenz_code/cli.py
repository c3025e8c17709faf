"""The ``lorenz-code`` console script.

Every subcommand is a management command; hyphenated names such as
``fit-error-law`` are accepted for the underscore module names.
"""

import os
import sys

import django
from django.core.management import ManagementUtility

SUBCOMMANDS = (
    "integrate",
    "mect",
    "fit_error_law",
    "extrapolate",
    "sensitivity",
    "hash",
    "keystream",
    "encrypt",
    "decrypt",
    "randtest",
    "collide",
    "avalanche",
)

USAGE = "usage: lorenz-code <subcommand> [options]\n\nsubcommands: {}\n".format(
    ", ".join(name.replace("_", "-") for name in SUBCOMMANDS),
)


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in {"-h", "--help", "help"}:
        sys.stdout.write(USAGE)
        return 0
    name = argv[0].replace("-", "_")
    if name not in SUBCOMMANDS:
        sys.stderr.write(f"unknown subcommand {argv[0]!r}\n{USAGE}")
        return 1

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")

    django.setup()
    try:
        ManagementUtility(["lorenz-code", name, *argv[1:]]).execute()
    except SystemExit as exc:
        if exc.code is None:
            return 0
        if isinstance(exc.code, int):
            return exc.code
        sys.stderr.write(f"{exc.code}\n")
        return 1
    return 0
