from celery import shared_task

from lorenz_code.oneway.hashing import BaseConfig
from lorenz_code.oneway.hashing import KeyBlock
from lorenz_code.oneway.hashing import hash8


@shared_task()
def hash_keys_task(base, keys):
    """Hex digests of a chunk of hex keys under a base given by ``as_strings``."""
    config = BaseConfig.from_strings(base)
    return [hash8(config, KeyBlock.from_hex(key)).hex() for key in keys]
