"""
Measure the maximum effective computation time (MECT) at one or more precisions.

Each precision is integrated in lockstep with a reference run at
max(2p, p + 64) bits; the MECT is the first step time where the two x values
differ by more than --delta. Output is CSV: p,h,delta,T.
"""

import csv
import logging

from django.conf import settings

from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.cup.analysis import DEFAULT_DELTA
from lorenz_code.cup.models import MectMeasurement
from lorenz_code.cup.tasks import mect_grid
from lorenz_code.mp import parse_exact

logger = logging.getLogger(__name__)


class Command(LorenzCommand):
    help = "Measure the MECT of the Lorenz system at the given precisions"

    def add_arguments(self, parser):
        add_base_config_arguments(parser)
        parser.add_argument(
            "--precisions",
            type=int,
            nargs="+",
            help="Precisions in bits to measure (default: --prec)",
        )
        parser.add_argument(
            "--delta",
            type=float,
            default=DEFAULT_DELTA,
            help=f"Divergence threshold on |x_p - x_ref| (default: {DEFAULT_DELTA})",
        )
        parser.add_argument(
            "--t-max",
            help="Horizon in nondimensional time (default: LORENZ_CODE_MECT_T_MAX)",
        )
        parser.add_argument(
            "--parallel",
            action="store_true",
            default=None,
            help="Measure the precisions as a Celery group",
        )
        parser.add_argument(
            "--record",
            action="store_true",
            help="Store every measurement in the database",
        )

    def run(self, **options):
        base = self.base_config(options, strict=False)
        precisions = options["precisions"] or [base.precision]
        t_max = options["t_max"] or str(settings.LORENZ_CODE_MECT_T_MAX)
        spec = base.integration_spec(precision=max(precisions))

        estimates = mect_grid(
            spec.params,
            spec.initial,
            precisions,
            base.h,
            options["delta"],
            t_max=t_max,
            parallel=options["parallel"],
        )

        writer = csv.writer(self.stdout, lineterminator="\n")
        writer.writerow(["p", "h", "delta", "T"])
        for estimate in estimates:
            writer.writerow(
                [estimate.precision_bits, estimate.h_used, estimate.delta, estimate.mect],
            )
            if options["record"]:
                MectMeasurement.objects.record(
                    estimate,
                    t_max=float(parse_exact(t_max)),
                    parameters=base.as_strings(),
                )
        if options["record"]:
            logger.info("Recorded %d MECT measurements", len(estimates))
