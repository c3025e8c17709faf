"""The Lorenz Code feedback stream cipher.

Plaintext is cut into 32-byte groups. Group i is XORed with the digest
K_i = hash8(base, chain_i), and the chain advances as
chain_{i+1} = chain_i ^ fold(M_i) ^ fold(C_i), starting from the key itself.
Since C_i = M_i ^ K_i the chain never depends on the plaintext, so decryption
regenerates the same keystream before it sees any plaintext.

This is a research cipher. It has no authentication and no nonce.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from lorenz_code.core.exceptions import EncryptionError
from lorenz_code.core.exceptions import LorenzCodeError
from lorenz_code.oneway.hashing import KEY_BYTES
from lorenz_code.oneway.hashing import BaseConfig
from lorenz_code.oneway.hashing import KeyBlock
from lorenz_code.oneway.hashing import hash8

from .container import GROUP_BYTES
from .container import CipherContainer
from .container import group_count

if TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)

ZERO_GROUP = bytes(GROUP_BYTES)


@dataclass(frozen=True, slots=True)
class CipherKey:
    """Secret key block plus the public base parameters."""

    k: KeyBlock
    base: BaseConfig

    def __post_init__(self):
        self.base.check_one_way()


def _xor(a: bytes, b: bytes) -> bytes:
    return bytes(x ^ y for x, y in zip(a, b, strict=True))


def _check_group(name: str, group: bytes) -> None:
    if len(group) != GROUP_BYTES:
        msg = f"{name} must be exactly {GROUP_BYTES} bytes, got {len(group)}"
        raise ValueError(msg)


def keystream_block(key: CipherKey, chain: KeyBlock) -> bytes:
    return hash8(key.base, chain).data


def fold32to8(block: bytes) -> bytes:
    """XOR the four 8-byte quarters of a 32-byte block."""
    _check_group("block", block)
    return bytes(
        block[j] ^ block[j + 8] ^ block[j + 16] ^ block[j + 24] for j in range(KEY_BYTES)
    )


def next_chain(chain: KeyBlock, m: bytes, c: bytes) -> KeyBlock:
    _check_group("plaintext group", m)
    _check_group("ciphertext group", c)
    return KeyBlock(_xor(_xor(chain.data, fold32to8(m)), fold32to8(c)))


def _run_chain(
    key: CipherKey,
    groups: list[bytes],
    *,
    decrypting: bool,
    trace: list[KeyBlock] | None,
) -> list[bytes]:
    chain = key.k
    out = []
    for index, group in enumerate(groups):
        if trace is not None:
            trace.append(chain)
        try:
            k_i = keystream_block(key, chain)
        except LorenzCodeError as exc:
            raise EncryptionError(index, exc) from exc
        result = _xor(group, k_i)
        m, c = (result, group) if decrypting else (group, result)
        chain = next_chain(chain, m, c)
        out.append(result)
        logger.debug("group %d done, next chain %s", index, chain.hex())
    return out


def encrypt(
    key: CipherKey,
    plaintext: bytes,
    trace: list[KeyBlock] | None = None,
) -> CipherContainer:
    """Zero-pad to whole groups and encrypt; ``trace`` collects each group's chain."""
    n = group_count(len(plaintext))
    padded = bytes(plaintext).ljust(n * GROUP_BYTES, b"\0")
    groups = [padded[i : i + GROUP_BYTES] for i in range(0, len(padded), GROUP_BYTES)]
    body = b"".join(_run_chain(key, groups, decrypting=False, trace=trace))
    logger.info("Encrypted %d bytes in %d groups", len(plaintext), n)
    return CipherContainer(original_length=len(plaintext), body=body)


def decrypt(
    key: CipherKey,
    container: CipherContainer,
    trace: list[KeyBlock] | None = None,
) -> bytes:
    plain = b"".join(_run_chain(key, container.groups, decrypting=True, trace=trace))
    logger.info("Decrypted %d bytes", container.original_length)
    return plain[: container.original_length]


def keystream(key: CipherKey, blocks: int) -> Iterator[bytes]:
    """The keystream an all-zero plaintext would be encrypted with."""
    chain = key.k
    for index in range(blocks):
        try:
            k_i = keystream_block(key, chain)
        except LorenzCodeError as exc:
            raise EncryptionError(index, exc) from exc
        yield k_i
        chain = next_chain(chain, ZERO_GROUP, k_i)
