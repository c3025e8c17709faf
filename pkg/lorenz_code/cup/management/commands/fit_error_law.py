"""
Fit the total error law E(h) = A * h**m + B * h**-0.5 and report the optimal step.

Errors are measured at a fixed time against a high-precision, tiny-step
reference orbit, or read from a CSV file of h,error rows with --samples.
Output is CSV: h,error,fitA,fitB,hstar.
"""

import csv
import logging
from pathlib import Path

from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.core.exceptions import ConfigError
from lorenz_code.core.exceptions import NoInteriorMinimumError
from lorenz_code.cup.analysis import DEFAULT_ORDER
from lorenz_code.cup.analysis import ERROR_REFERENCE_PRECISION
from lorenz_code.cup.analysis import error_samples
from lorenz_code.cup.analysis import fit_error_law
from lorenz_code.cup.analysis import optimal_step
from lorenz_code.mp import parse_exact

logger = logging.getLogger(__name__)

DEFAULT_STEPS = ["0.1", "0.05", "0.02", "0.01", "0.005", "0.002", "0.001", "0.0005"]


def read_samples(path):
    samples = []
    with Path(path).open(encoding="utf-8", newline="") as handle:
        for row in csv.DictReader(handle):
            try:
                samples.append((float(row["h"]), float(row["error"])))
            except (KeyError, TypeError, ValueError) as exc:
                msg = f"{path}: expected numeric 'h' and 'error' columns"
                raise ConfigError(msg) from exc
    return samples


class Command(LorenzCommand):
    help = "Fit the error law of RK4 at a fixed time and print the optimal step"

    def add_arguments(self, parser):
        add_base_config_arguments(parser)
        # errors are measured well inside the MECT
        parser.set_defaults(t="5", prec=24)
        parser.add_argument(
            "--steps",
            nargs="+",
            default=DEFAULT_STEPS,
            help="Step sizes to measure (at least 4, spanning a decade)",
        )
        parser.add_argument(
            "--order",
            type=int,
            default=DEFAULT_ORDER,
            help=f"Order m of the method (default: {DEFAULT_ORDER})",
        )
        parser.add_argument(
            "--reference-precision",
            type=int,
            default=ERROR_REFERENCE_PRECISION,
            help=f"Precision of the reference orbit (default: {ERROR_REFERENCE_PRECISION})",
        )
        parser.add_argument(
            "--reference-h",
            help="Step of the reference orbit (default: smallest step / 4)",
        )
        parser.add_argument(
            "--samples",
            help="Fit h,error rows from this CSV file instead of measuring",
        )

    def run(self, **options):
        if options["samples"]:
            samples = read_samples(options["samples"])
            t_fixed = None
        else:
            base = self.base_config(options, strict=False)
            spec = base.integration_spec()
            reference_h = options["reference_h"]
            samples = error_samples(
                spec.params,
                spec.initial,
                base.t,
                base.precision,
                [parse_exact(h) for h in options["steps"]],
                reference_precision=options["reference_precision"],
                reference_h=parse_exact(reference_h) if reference_h else None,
            )
            t_fixed = spec.t

        fit = fit_error_law(samples, options["order"], t_fixed=t_fixed)
        try:
            hstar = optimal_step(fit)
        except NoInteriorMinimumError as exc:
            logger.warning("%s", exc)
            hstar = ""

        writer = csv.writer(self.stdout, lineterminator="\n")
        writer.writerow(["h", "error", "fitA", "fitB", "hstar"])
        for h, error in samples:
            writer.writerow([h, error, fit.amp_trunc, fit.amp_round, hstar])
