"""
Hash N distinct pseudorandom keys and look for digest collisions.
"""

import csv
from pathlib import Path

from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.randquality.models import ScanReport
from lorenz_code.randquality.scans import collision_scan


class Command(LorenzCommand):
    help = "Scan the keyed hash for collisions among N distinct keys"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, default=1000, help="Distinct keys (default: 1000)")
        parser.add_argument("--seed", type=int, default=0, help="SplitMix64 seed (default: 0)")
        parser.add_argument(
            "--parallel",
            action="store_true",
            default=None,
            help="Hash the keys as a Celery group",
        )
        parser.add_argument("--csv", help="Write the colliding pairs as CSV to this file")
        parser.add_argument("--record", action="store_true", help="Store the outcome")
        add_base_config_arguments(parser)

    def run(self, **options):
        base = self.base_config(options, strict=True)
        report = collision_scan(base, options["n"], options["seed"], parallel=options["parallel"])

        self.stdout.write(f"distinct inputs: {report.distinct_inputs}")
        self.stdout.write(f"collisions: {report.collisions}")
        for key_a, key_b in report.pairs:
            self.stdout.write(f"  {key_a} {key_b}")
        if options["csv"]:
            with Path(options["csv"]).open("w", encoding="utf-8", newline="") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(["key_a", "key_b"])
                writer.writerows(report.pairs)

        if options["record"]:
            ScanReport.objects.create(
                kind=ScanReport.Kind.COLLISION,
                seed=options["seed"],
                count=report.distinct_inputs,
                passed=report.passed,
                summary=report.summary(),
            )
