from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.core.commands import add_key_arguments
from lorenz_code.core.commands import key_from_options
from lorenz_code.oneway.hashing import hash8


class Command(LorenzCommand):
    help = "Hash one 8-byte key through the Lorenz one-way mapping (64 hex characters)"

    def add_arguments(self, parser):
        add_key_arguments(parser)
        add_base_config_arguments(parser)

    def run(self, **options):
        key = key_from_options(options)
        base = self.base_config(options, strict=True)
        self.stdout.write(hash8(base, key).hex())
