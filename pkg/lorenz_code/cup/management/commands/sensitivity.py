"""
Show the sensitivity of a long integration to tiny step or precision changes.

Integrates twice, changing h by --dh or p by --dp, and prints the relative
difference |x_a - x_b| / max(|x_a|, |x_b|) of the final x values.
"""

import csv

from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.cup.analysis import relative_divergence
from lorenz_code.mp import parse_exact


class Command(LorenzCommand):
    help = "Compare two integrations that differ slightly in step or precision"

    def add_arguments(self, parser):
        add_base_config_arguments(parser)
        parser.set_defaults(t="250")
        parser.add_argument(
            "--kind",
            choices=["step", "precision"],
            default="step",
            help="Vary the step size or the precision (default: step)",
        )
        parser.add_argument(
            "--dh",
            default="0.000001",
            help="Step change for --kind step (default: 0.000001)",
        )
        parser.add_argument(
            "--dp",
            type=int,
            default=4,
            help="Precision change in bits for --kind precision (default: 4)",
        )

    def run(self, **options):
        base = self.base_config(options, strict=False)
        spec_a = base.integration_spec()
        if options["kind"] == "step":
            h_b = base.h + parse_exact(options["dh"])
            spec_b = base.integration_spec(h=h_b)
            labels = (f"h={float(base.h)}", f"h={float(h_b)}")
        else:
            p_b = base.precision + options["dp"]
            spec_b = base.integration_spec(precision=p_b)
            labels = (f"p={base.precision}", f"p={p_b}")

        writer = csv.writer(self.stdout, lineterminator="\n")
        writer.writerow(["a", "b", "relative_divergence"])
        writer.writerow([*labels, relative_divergence(spec_a, spec_b)])
