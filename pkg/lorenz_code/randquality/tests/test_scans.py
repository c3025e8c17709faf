import pytest

from lorenz_code.cipher.stream import CipherKey
from lorenz_code.cipher.stream import keystream
from lorenz_code.core.exceptions import ConfigError
from lorenz_code.oneway.hashing import BaseConfig
from lorenz_code.oneway.hashing import Digest256
from lorenz_code.oneway.hashing import KeyBlock
from lorenz_code.randquality.battery import run_battery
from lorenz_code.randquality.scans import SplitMix64
from lorenz_code.randquality.scans import avalanche_scan
from lorenz_code.randquality.scans import collision_scan
from lorenz_code.randquality.scans import distinct_keys
from lorenz_code.randquality.scans import hamming_distance
from lorenz_code.randquality.scans import hash_many


def first_byte_hash(base, k):
    return Digest256(bytes([k.data[0]]) * 32)


class TestSplitMix64:
    def test_reference_vectors(self):
        rng = SplitMix64(0)
        assert [rng.next() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_seeds_are_reproducible(self):
        a, b = SplitMix64(42), SplitMix64(42)
        assert [a.next() for _ in range(10)] == [b.next() for _ in range(10)]

    def test_key_blocks_use_big_endian_output(self):
        assert SplitMix64(0).key_block() == KeyBlock(bytes.fromhex("e220a8397b1dcdaf"))

    def test_below(self):
        rng = SplitMix64(1)
        assert all(0 <= rng.below(64) < 64 for _ in range(1000))

    def test_distinct_keys(self):
        keys = distinct_keys(SplitMix64(3), 500)
        assert len(set(keys)) == 500


class TestHammingDistance:
    def test_identical_inputs(self):
        digest = bytes(range(32))
        assert hamming_distance(digest, digest) == 0

    def test_all_bits_differ(self):
        assert hamming_distance(bytes(32), b"\xff" * 32) == 256

    def test_lengths_must_match(self):
        with pytest.raises(ValueError, match="cannot compare"):
            hamming_distance(b"\x00", b"\x00\x00")


@pytest.mark.usefixtures("fast_hash")
class TestHashMany:
    def test_chunks_keep_key_order(self, settings, fast_hash):
        settings.LORENZ_CODE_SCAN_CHUNK = 3
        base = BaseConfig()
        keys = distinct_keys(SplitMix64(9), 10)
        assert hash_many(base, keys, parallel=False) == [fast_hash(base, k) for k in keys]

    def test_parallel_matches_in_process(self, settings):
        settings.CELERY_TASK_ALWAYS_EAGER = True
        settings.LORENZ_CODE_SCAN_CHUNK = 4
        keys = distinct_keys(SplitMix64(9), 10)
        base = BaseConfig()
        assert hash_many(base, keys, parallel=True) == hash_many(base, keys, parallel=False)


@pytest.mark.usefixtures("fast_hash")
class TestCollisionScan:
    def test_single_key(self):
        report = collision_scan(BaseConfig(), 1, seed=0)
        assert report.distinct_inputs == 1
        assert report.collisions == 0
        assert report.passed

    def test_duplicate_inputs_are_not_collisions(self):
        key = KeyBlock.from_ascii("lorenz!!")
        report = collision_scan(BaseConfig(), 2, seed=0, keys=[key, key])
        assert report.distinct_inputs == 1
        assert report.collisions == 0

    def test_detects_colliding_pairs(self, monkeypatch):
        monkeypatch.setattr("lorenz_code.randquality.tasks.hash8", first_byte_hash)
        keys = [KeyBlock.from_ascii(text) for text in ("aaaaaaaa", "abcdefgh", "bbbbbbbb", "azzzzzzz")]
        report = collision_scan(BaseConfig(), len(keys), seed=0, keys=keys)
        assert report.collisions == 3
        assert ("6161616161616161", "6162636465666768") in report.pairs
        assert not report.passed

    def test_deterministic_given_seed(self):
        first = collision_scan(BaseConfig(), 200, seed=5)
        assert collision_scan(BaseConfig(), 200, seed=5) == first

    def test_ten_thousand_keys(self):
        assert collision_scan(BaseConfig(), 10_000, seed=1).collisions == 0

    def test_requires_one_way_base(self):
        with pytest.raises(ConfigError, match="gamma"):
            collision_scan(BaseConfig(gamma=10), 5, seed=0)

    def test_requires_a_key(self):
        with pytest.raises(ConfigError):
            collision_scan(BaseConfig(), 0, seed=0)


@pytest.mark.usefixtures("fast_hash")
class TestAvalancheScan:
    def test_well_mixed_digest(self):
        report = avalanche_scan(BaseConfig(), 1000, seed=0)
        assert 112 <= report.mean_distance <= 144
        assert len(report.bit_frequencies) == 256
        assert all(0.4 <= f <= 0.6 for f in report.bit_frequencies)
        assert report.passed

    def test_deterministic_given_seed(self):
        assert avalanche_scan(BaseConfig(), 100, seed=4) == avalanche_scan(BaseConfig(), 100, seed=4)

    def test_constant_digest_never_flips(self, monkeypatch):
        monkeypatch.setattr("lorenz_code.randquality.tasks.hash8", lambda base, k: Digest256(bytes(32)))
        report = avalanche_scan(BaseConfig(), 100, seed=0)
        assert report.mean_distance == 0.0
        assert report.max_distance == 0
        assert not report.passed

    def test_needs_one_hundred_trials(self):
        with pytest.raises(ConfigError, match="at least 100 trials"):
            avalanche_scan(BaseConfig(), 99, seed=0)


@pytest.mark.slow
def test_real_hash_avalanche():
    report = avalanche_scan(BaseConfig(), 1000, seed=0)
    assert 112 <= report.mean_distance <= 144
    assert all(0.4 <= f <= 0.6 for f in report.bit_frequencies)


@pytest.mark.slow
def test_real_hash_collision_scan():
    assert collision_scan(BaseConfig(), 10_000, seed=0).collisions == 0


@pytest.mark.slow
def test_real_keystream_passes_the_battery():
    key = CipherKey(KeyBlock.from_hex("0000000000000000"), BaseConfig())
    data = b"".join(keystream(key, 128))
    assert all(r.passed for r in run_battery(data))
