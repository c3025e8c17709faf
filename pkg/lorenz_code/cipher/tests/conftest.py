import pytest

from lorenz_code.cipher.stream import CipherKey
from lorenz_code.cipher.tests.stand_ins import stand_in_hash8
from lorenz_code.oneway.hashing import BaseConfig
from lorenz_code.oneway.hashing import KeyBlock


@pytest.fixture
def fast_hash(monkeypatch):
    monkeypatch.setattr("lorenz_code.cipher.stream.hash8", stand_in_hash8)
    return stand_in_hash8


@pytest.fixture
def cipher_key() -> CipherKey:
    return CipherKey(KeyBlock.from_ascii("lorenz!!"), BaseConfig())
