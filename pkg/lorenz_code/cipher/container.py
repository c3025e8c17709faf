"""Binary container for ciphertext.

Layout, all integers big-endian::

    magic            4 bytes   b"LZC1"
    version          1 byte    0x01
    original_length  8 bytes   unsigned plaintext length
    body             N * 32    ciphertext groups, N = ceil(original_length / 32)
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from lorenz_code.core.exceptions import BadMagicError
from lorenz_code.core.exceptions import CorruptContainerError
from lorenz_code.core.exceptions import UnsupportedVersionError

MAGIC = b"LZC1"
VERSION = 1
GROUP_BYTES = 32
HEADER = struct.Struct(">4sBQ")


def group_count(length: int) -> int:
    return -(-length // GROUP_BYTES)


@dataclass(frozen=True, slots=True)
class CipherContainer:
    original_length: int
    body: bytes
    version: int = VERSION

    def __post_init__(self):
        if self.original_length < 0:
            msg = f"negative original length {self.original_length}"
            raise CorruptContainerError(msg)
        expected = group_count(self.original_length) * GROUP_BYTES
        if len(self.body) != expected:
            msg = (
                f"body holds {len(self.body)} bytes, expected {expected} "
                f"for an original length of {self.original_length}"
            )
            raise CorruptContainerError(msg)

    @property
    def groups(self) -> list[bytes]:
        return [self.body[i : i + GROUP_BYTES] for i in range(0, len(self.body), GROUP_BYTES)]

    def to_bytes(self) -> bytes:
        return HEADER.pack(MAGIC, self.version, self.original_length) + self.body

    @classmethod
    def from_bytes(cls, data: bytes) -> CipherContainer:
        if len(data) < len(MAGIC) or data[: len(MAGIC)] != MAGIC:
            msg = "bad magic"
            raise BadMagicError(msg)
        if len(data) < HEADER.size:
            msg = f"truncated header: {len(data)} of {HEADER.size} bytes"
            raise CorruptContainerError(msg)
        _magic, version, original_length = HEADER.unpack_from(data)
        if version != VERSION:
            msg = f"unsupported container version {version}"
            raise UnsupportedVersionError(msg)
        return cls(original_length=original_length, body=bytes(data[HEADER.size :]))
