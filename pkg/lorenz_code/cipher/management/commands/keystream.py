from pathlib import Path

from lorenz_code.cipher.stream import keystream

from ._cipher import CipherCommand


class Command(CipherCommand):
    help = "Emit N keystream blocks of 32 bytes, as one hex line or raw bytes"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--blocks",
            type=int,
            required=True,
            help="Number of 32-byte blocks",
        )
        parser.add_argument("--out", dest="output", help="Write raw bytes to this file")

    def run(self, **options):
        key = self.cipher_key(options)
        blocks = keystream(key, options["blocks"])
        if options["output"]:
            with Path(options["output"]).open("wb") as handle:
                for block in blocks:
                    handle.write(block)
        else:
            self.stdout.write("".join(block.hex() for block in blocks))
