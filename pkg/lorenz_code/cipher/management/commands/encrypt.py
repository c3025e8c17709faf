from pathlib import Path

from lorenz_code.cipher.stream import encrypt

from ._cipher import CipherCommand


class Command(CipherCommand):
    help = "Encrypt a file into an LZC1 container (research cipher, not for production security)"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--in", dest="input", required=True, help="Plaintext file")
        parser.add_argument("--out", dest="output", required=True, help="Container file to write")

    def run(self, **options):
        key = self.cipher_key(options)
        plaintext = Path(options["input"]).read_bytes()
        container = encrypt(key, plaintext)
        Path(options["output"]).write_bytes(container.to_bytes())
