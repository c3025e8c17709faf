"""
Measure the avalanche effect: digest bits changed by flipping one key bit.
"""

import csv
from pathlib import Path

from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.randquality.models import ScanReport
from lorenz_code.randquality.scans import avalanche_scan


class Command(LorenzCommand):
    help = "Flip one random key bit per trial and report the digest Hamming distances"

    def add_arguments(self, parser):
        parser.add_argument(
            "--trials",
            type=int,
            default=1000,
            help="Number of trials, at least 100 (default: 1000)",
        )
        parser.add_argument("--seed", type=int, default=0, help="SplitMix64 seed (default: 0)")
        parser.add_argument(
            "--parallel",
            action="store_true",
            default=None,
            help="Hash the keys as a Celery group",
        )
        parser.add_argument("--csv", help="Write bit,frequency rows to this file")
        parser.add_argument("--record", action="store_true", help="Store the outcome")
        add_base_config_arguments(parser)

    def run(self, **options):
        base = self.base_config(options, strict=True)
        report = avalanche_scan(
            base,
            options["trials"],
            options["seed"],
            parallel=options["parallel"],
        )

        self.stdout.write(f"trials: {report.trials}")
        self.stdout.write(f"mean distance: {report.mean_distance:.3f} of 256")
        self.stdout.write(f"distance range: {report.min_distance}..{report.max_distance}")
        self.stdout.write(
            f"bit flip frequency range: {min(report.bit_frequencies):.3f}.."
            f"{max(report.bit_frequencies):.3f}",
        )
        if options["csv"]:
            with Path(options["csv"]).open("w", encoding="utf-8", newline="") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(["bit", "frequency"])
                writer.writerows(enumerate(report.bit_frequencies))

        if options["record"]:
            ScanReport.objects.create(
                kind=ScanReport.Kind.AVALANCHE,
                seed=options["seed"],
                count=report.trials,
                passed=report.passed,
                summary=report.summary(),
            )
