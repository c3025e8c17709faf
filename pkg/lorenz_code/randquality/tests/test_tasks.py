import pytest
from celery.result import EagerResult

from lorenz_code.oneway.hashing import BaseConfig
from lorenz_code.oneway.hashing import KeyBlock
from lorenz_code.randquality.tasks import hash_keys_task


@pytest.mark.usefixtures("fast_hash")
def test_hash_keys_task(settings, fast_hash):
    settings.CELERY_TASK_ALWAYS_EAGER = True
    base = BaseConfig()
    keys = ["0000000000000000", "6c6f72656e7a2121"]
    task_result = hash_keys_task.delay(base.as_strings(), keys)
    assert isinstance(task_result, EagerResult)
    assert task_result.result == [fast_hash(base, KeyBlock.from_hex(k)).hex() for k in keys]


def test_base_survives_the_string_round_trip():
    base = BaseConfig(beta="8/3", h="0.005", literal_h_perturb=True, precision=320)
    assert BaseConfig.from_strings(base.as_strings()) == base
