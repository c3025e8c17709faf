"""Shared base for the lorenz_code management commands."""

import logging
import sys

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand
from django.core.management.base import CommandError
from django.core.management.base import CommandParser

from lorenz_code.core.exceptions import EXIT_DOMAIN
from lorenz_code.core.exceptions import EXIT_FORMAT
from lorenz_code.core.exceptions import LorenzCodeError
from lorenz_code.oneway.config import load_base_config
from lorenz_code.oneway.hashing import KeyBlock

logger = logging.getLogger(__name__)

BASE_PARAMETER_FLAGS = {
    "gamma": "gamma",
    "sigma": "sigma",
    "beta": "beta",
    "x0": "x0",
    "y0": "y0",
    "z0": "z0",
    "h": "h",
    "prec": "p",
    "t": "t",
    "h_perturb_scale": "h_perturb_scale",
}


class LorenzCommandParser(CommandParser):
    """Usage errors exit with the validation status instead of argparse's 2."""

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")
        raise CommandError(f"Error: {message}", returncode=EXIT_DOMAIN)


class LorenzCommand(BaseCommand):
    """Runs ``self.run(**options)`` and turns domain errors into exit codes.

    Results go to ``self.stdout``; logs and errors go to stderr.
    """

    requires_system_checks = []
    requires_migrations_checks = False

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # BaseCommand has no hook for the parser class
        parser.__class__ = LorenzCommandParser
        return parser

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except LorenzCodeError as exc:
            logger.debug("Command failed", exc_info=True)
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        except ValidationError as exc:
            raise CommandError("; ".join(exc.messages), returncode=EXIT_DOMAIN) from exc
        except OSError as exc:
            raise CommandError(str(exc), returncode=EXIT_FORMAT) from exc

    def run(self, **options):
        raise NotImplementedError

    def base_config(self, options, *, strict: bool):
        return load_base_config(
            options.get("config"),
            base_overrides(options),
            strict=strict,
        )


def add_base_config_arguments(parser):
    parser.add_argument(
        "--config",
        help="Base parameter file of 'name = value' lines (default: $LORENZ_CODE_CONFIG)",
    )
    group = parser.add_argument_group("base parameters")
    group.add_argument("--sigma", help="Prandtl number (default: 10)")
    group.add_argument("--gamma", help="Rayleigh number, at least 28 for hashing (default: 28)")
    group.add_argument("--beta", help="Geometric factor (default: 8/3)")
    group.add_argument("--x0", help="Initial x (default: 5)")
    group.add_argument("--y0", help="Initial y (default: 5)")
    group.add_argument("--z0", help="Initial z (default: 10)")
    group.add_argument("--h", help="Step size in nondimensional time (default: 0.01)")
    group.add_argument("--prec", type=int, help="Precision in bits (default: 256)")
    group.add_argument("--t", help="End time in nondimensional time (default: 200)")
    group.add_argument(
        "--h-perturb-scale",
        help="Step perturbation per unit of the 7th key byte (default: 0.00001)",
    )
    group.add_argument(
        "--literal-h-perturb",
        action="store_true",
        default=None,
        help="Perturb the step by m7/1000",
    )


def add_key_arguments(parser, *, required=True):
    parser.add_argument(
        "--key",
        required=required,
        help="8-byte key as 16 hex characters or 8 ASCII characters",
    )
    parser.add_argument(
        "--key-format",
        choices=["hex", "ascii"],
        help="How to read --key (default: guessed from its length)",
    )


def base_overrides(options) -> dict[str, object]:
    overrides: dict[str, object] = {
        name: options.get(flag) for flag, name in BASE_PARAMETER_FLAGS.items()
    }
    overrides["literal_h_perturb"] = options.get("literal_h_perturb")
    return overrides


def key_from_options(options):
    return KeyBlock.parse(options["key"], options.get("key_format"))
