from lorenz_code.cipher.stream import CipherKey
from lorenz_code.core.commands import LorenzCommand
from lorenz_code.core.commands import add_base_config_arguments
from lorenz_code.core.commands import add_key_arguments
from lorenz_code.core.commands import key_from_options


class CipherCommand(LorenzCommand):
    """Common arguments of the cipher commands."""

    def add_arguments(self, parser):
        add_key_arguments(parser)
        add_base_config_arguments(parser)

    def cipher_key(self, options) -> CipherKey:
        return CipherKey(key_from_options(options), self.base_config(options, strict=True))
