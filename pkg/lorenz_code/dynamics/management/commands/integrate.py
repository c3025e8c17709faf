"""
Integrate the Lorenz system with fixed-step RK4 at a chosen precision.

Prints ``t,x,y,z`` rows: the final state only, or a sampled trajectory with
``--every``. ``--csv`` writes the rows to a file instead of standard output.
"""

import logging
from pathlib import Path

from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.dynamics.lorenz import integrate
from lorenz_code.dynamics.lorenz import step_plan
from lorenz_code.dynamics.lorenz import trajectory
from lorenz_code.dynamics.lorenz import write_trajectory_csv
from lorenz_code.mp import hex_dump

logger = logging.getLogger(__name__)


class Command(LorenzCommand):
    help = "Integrate the Lorenz system and print t,x,y,z as CSV"

    def add_arguments(self, parser):
        add_base_config_arguments(parser)
        parser.add_argument(
            "--every",
            type=int,
            help="Emit a row every N steps instead of the final state only",
        )
        parser.add_argument("--csv", help="Write the rows to this file")
        parser.add_argument(
            "--hex",
            action="store_true",
            help="Print the final state as sign:exponent:significand hex dumps",
        )

    def run(self, **options):
        spec = self.base_config(options, strict=False).integration_spec()
        n, partial = step_plan(spec)
        logger.info(
            "Integrating to t=%s with h=%s at p=%d (%d steps%s)",
            spec.t,
            spec.h,
            spec.precision,
            n,
            " plus a partial step" if partial is not None else "",
        )

        if options["hex"]:
            final = integrate(spec)
            for name, value in zip("xyz", (final.x, final.y, final.z), strict=True):
                self.stdout.write(f"{name} {hex_dump(value)}")
            return

        if options["every"]:
            rows = trajectory(spec, every=options["every"])
        else:
            rows = [(spec.t, integrate(spec))]

        if options["csv"]:
            with Path(options["csv"]).open("w", encoding="utf-8", newline="") as handle:
                count = write_trajectory_csv(rows, handle, spec.precision)
            logger.info("Wrote %d rows to %s", count, options["csv"])
        else:
            write_trajectory_csv(rows, self.stdout, spec.precision)
