from pathlib import Path

from lorenz_code.cipher.container import CipherContainer
from lorenz_code.cipher.stream import decrypt

from ._cipher import CipherCommand


class Command(CipherCommand):
    help = "Decrypt an LZC1 container"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--in", dest="input", required=True, help="Container file")
        parser.add_argument("--out", dest="output", required=True, help="Plaintext file to write")

    def run(self, **options):
        container = CipherContainer.from_bytes(Path(options["input"]).read_bytes())
        key = self.cipher_key(options)
        Path(options["output"]).write_bytes(decrypt(key, container))
