"""
Run the four-test statistical battery on a byte stream.

The stream is either a file (--in) or the keystream of a key
(--keystream-key), which is generated block by block with the chaotic hash.
"""

import csv
import logging
from pathlib import Path

from lorenz_code.cipher.stream import CipherKey
from lorenz_code.cipher.stream import keystream
from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.core.exceptions import ConfigError
from lorenz_code.oneway.hashing import KeyBlock
from lorenz_code.randquality.battery import ALPHA
from lorenz_code.randquality.battery import MIN_BYTES
from lorenz_code.randquality.battery import run_battery
from lorenz_code.randquality.models import ScanReport

logger = logging.getLogger(__name__)

DEFAULT_BLOCKS = MIN_BYTES // 32


class Command(LorenzCommand):
    help = "Run the monobit, runs, chi-square and serial correlation tests"

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--in", dest="input", help="Test the bytes of this file")
        source.add_argument(
            "--keystream-key",
            help="Test the keystream of this 8-byte key (16 hex or 8 ASCII characters)",
        )
        parser.add_argument("--key-format", choices=["hex", "ascii"])
        parser.add_argument(
            "--blocks",
            type=int,
            default=DEFAULT_BLOCKS,
            help=f"Keystream blocks of 32 bytes to test (default: {DEFAULT_BLOCKS})",
        )
        parser.add_argument(
            "--alpha",
            type=float,
            default=ALPHA,
            help=f"Significance level (default: {ALPHA})",
        )
        parser.add_argument("--csv", help="Also write the reports as CSV to this file")
        parser.add_argument("--record", action="store_true", help="Store the outcome")
        add_base_config_arguments(parser)

    def run(self, **options):
        if not 0 < options["alpha"] < 1:
            msg = f"alpha must lie strictly between 0 and 1, got {options['alpha']}"
            raise ConfigError(msg)
        if options["input"]:
            data = Path(options["input"]).read_bytes()
        else:
            key = KeyBlock.parse(options["keystream_key"], options["key_format"])
            cipher_key = CipherKey(key, self.base_config(options, strict=True))
            logger.info("Generating %d keystream blocks", options["blocks"])
            data = b"".join(keystream(cipher_key, options["blocks"]))

        reports = run_battery(data, options["alpha"])

        self.stdout.write(f"{'test':<20}{'statistic':>16}{'p-value':>12}  result")
        for report in reports:
            self.stdout.write(
                f"{report.test_name:<20}{report.statistic:>16.6g}{report.p_value:>12.6f}  "
                f"{'pass' if report.passed else 'FAIL'}",
            )
        if options["csv"]:
            with Path(options["csv"]).open("w", encoding="utf-8", newline="") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(["test", "statistic", "p_value", "passed", "sample_bits"])
                for r in reports:
                    writer.writerow([r.test_name, r.statistic, r.p_value, r.passed, r.sample_bits])

        if options["record"]:
            ScanReport.objects.create(
                kind=ScanReport.Kind.BATTERY,
                count=len(data),
                passed=all(r.passed for r in reports),
                summary={r.test_name: r.p_value for r in reports},
            )
