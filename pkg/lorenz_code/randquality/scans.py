"""Collision and avalanche scans of the keyed hash.

Keys and flipped bit positions come from a seeded SplitMix64 stream, so every
report is reproducible from (base, count, seed).
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from dataclasses import field
from itertools import batched

import numpy as np
from django.conf import settings

from lorenz_code.core.exceptions import ConfigError
from lorenz_code.core.grid import run_cells
from lorenz_code.oneway.hashing import DIGEST_BITS
from lorenz_code.oneway.hashing import KEY_BYTES
from lorenz_code.oneway.hashing import BaseConfig
from lorenz_code.oneway.hashing import Digest256
from lorenz_code.oneway.hashing import KeyBlock

from .tasks import hash_keys_task

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
MIN_AVALANCHE_TRIALS = 100
AVALANCHE_MEAN_RANGE = (112, 144)
BIT_FREQUENCY_RANGE = (0.4, 0.6)


class SplitMix64:
    """Steele, Lea and Flood's 64-bit mixing generator.

    Seed 0 yields 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.
    """

    GOLDEN_GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + self.GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) for bound a power of two."""
        return self.next() % bound

    def key_block(self) -> KeyBlock:
        return KeyBlock(self.next().to_bytes(KEY_BYTES, "big"))


def hamming_distance(a: bytes, b: bytes) -> int:
    if len(a) != len(b):
        msg = f"cannot compare {len(a)} bytes with {len(b)} bytes"
        raise ValueError(msg)
    return (int.from_bytes(a, "big") ^ int.from_bytes(b, "big")).bit_count()


def hash_many(base: BaseConfig, keys, *, parallel=None) -> list[Digest256]:
    """Digests of ``keys`` in order, in chunks of ``LORENZ_CODE_SCAN_CHUNK`` keys."""
    base_strings = base.as_strings()
    cells = [
        {"base": base_strings, "keys": [k.hex() for k in chunk]}
        for chunk in batched(keys, settings.LORENZ_CODE_SCAN_CHUNK)
    ]
    digests = []
    for chunk in run_cells(hash_keys_task, cells, parallel=parallel):
        digests.extend(Digest256(bytes.fromhex(text)) for text in chunk)
    return digests


@dataclass(frozen=True)
class CollisionReport:
    distinct_inputs: int
    collisions: int
    pairs: list[tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.collisions == 0

    def summary(self) -> dict:
        return {
            "distinct_inputs": self.distinct_inputs,
            "collisions": self.collisions,
            "pairs": [list(pair) for pair in self.pairs],
        }


def distinct_keys(rng: SplitMix64, n: int) -> list[KeyBlock]:
    seen: dict[KeyBlock, None] = {}
    while len(seen) < n:
        seen.setdefault(rng.key_block())
    return list(seen)


def collision_scan(
    base: BaseConfig,
    n: int,
    seed: int,
    keys=None,
    *,
    parallel=None,
) -> CollisionReport:
    """Hash ``n`` distinct keys and report every pair with equal digests.

    Explicit ``keys`` replace the generated ones; duplicates among them are
    hashed once.
    """
    if keys is None:
        if n < 1:
            msg = f"a collision scan needs at least one key, got n={n}"
            raise ConfigError(msg)
        keys = distinct_keys(SplitMix64(seed), n)
    else:
        keys = list(dict.fromkeys(keys))
    base.check_one_way()

    logger.info("Hashing %d distinct keys for the collision scan", len(keys))
    by_digest: dict[Digest256, list[KeyBlock]] = defaultdict(list)
    for key, digest in zip(keys, hash_many(base, keys, parallel=parallel), strict=True):
        by_digest[digest].append(key)

    pairs = []
    for group in by_digest.values():
        pairs.extend(
            (group[i].hex(), group[j].hex())
            for i in range(len(group))
            for j in range(i + 1, len(group))
        )
    if pairs:
        logger.warning("Found %d colliding pairs", len(pairs))
    return CollisionReport(distinct_inputs=len(keys), collisions=len(pairs), pairs=pairs)


@dataclass(frozen=True)
class AvalancheReport:
    trials: int
    mean_distance: float
    min_distance: int
    max_distance: int
    bit_frequencies: list[float]

    @property
    def passed(self) -> bool:
        """Mean distance near half the digest and every bit flipping about half the time."""
        low, high = AVALANCHE_MEAN_RANGE
        f_low, f_high = BIT_FREQUENCY_RANGE
        return low <= self.mean_distance <= high and all(
            f_low <= f <= f_high for f in self.bit_frequencies
        )

    def summary(self) -> dict:
        return {
            "trials": self.trials,
            "mean_distance": self.mean_distance,
            "min_distance": self.min_distance,
            "max_distance": self.max_distance,
            "min_bit_frequency": min(self.bit_frequencies),
            "max_bit_frequency": max(self.bit_frequencies),
        }


def avalanche_scan(
    base: BaseConfig,
    trials: int,
    seed: int,
    *,
    parallel=None,
) -> AvalancheReport:
    """Flip one random key bit per trial and measure how many digest bits change."""
    if trials < MIN_AVALANCHE_TRIALS:
        msg = f"an avalanche scan needs at least {MIN_AVALANCHE_TRIALS} trials, got {trials}"
        raise ConfigError(msg)
    base.check_one_way()

    rng = SplitMix64(seed)
    keys = []
    for _ in range(trials):
        key = rng.key_block()
        keys.extend((key, key.flip_bit(rng.below(8 * KEY_BYTES))))

    logger.info("Hashing %d keys for %d avalanche trials", len(keys), trials)
    digests = hash_many(base, keys, parallel=parallel)
    originals = np.frombuffer(b"".join(d.data for d in digests[0::2]), dtype=np.uint8)
    flipped = np.frombuffer(b"".join(d.data for d in digests[1::2]), dtype=np.uint8)
    changed = np.unpackbits(originals ^ flipped).reshape(trials, DIGEST_BITS)
    distances = changed.sum(axis=1)
    return AvalancheReport(
        trials=trials,
        mean_distance=float(distances.mean()),
        min_distance=int(distances.min()),
        max_distance=int(distances.max()),
        bit_frequencies=changed.mean(axis=0).tolist(),
    )
