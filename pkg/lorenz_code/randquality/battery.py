"""A four-test statistical battery for byte streams.

Monobit and runs follow the frequency and runs tests of NIST SP 800-22; the
byte chi-square and the lag-1 serial correlation of the bit stream complete
the battery. Every p-value is two-sided and a test passes when p >= alpha.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc
from scipy.stats import chi2

from lorenz_code.core.exceptions import SampleTooSmallError

logger = logging.getLogger(__name__)

ALPHA = 0.01
MIN_BITS = 2048
MIN_BYTES = 4096
BYTE_CATEGORIES = 256


@dataclass(frozen=True, slots=True)
class TestReport:
    __test__ = False

    test_name: str
    statistic: float
    p_value: float
    passed: bool
    sample_bits: int
    alpha: float = ALPHA

    @classmethod
    def judge(cls, test_name, statistic, p_value, sample_bits, alpha=ALPHA) -> TestReport:
        p_value = min(max(float(p_value), 0.0), 1.0)
        return cls(
            test_name=test_name,
            statistic=float(statistic),
            p_value=p_value,
            passed=p_value >= alpha,
            sample_bits=int(sample_bits),
            alpha=alpha,
        )


def as_bits(data: bytes) -> np.ndarray:
    """Unpack bytes into a 0/1 uint8 array, most significant bit first."""
    return np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))


def _as_byte_array(data) -> np.ndarray:
    return np.frombuffer(bytes(data), dtype=np.uint8)


def _need(test_name: str, got: int, minimum: int, unit: str) -> None:
    if got < minimum:
        raise SampleTooSmallError(test_name, minimum, unit, got)


def monobit(bits, alpha: float = ALPHA) -> TestReport:
    """Frequency test: the normalized excess of ones over zeros."""
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.size
    _need("monobit", n, MIN_BITS, "bits")
    s = 2 * int(np.count_nonzero(bits)) - n
    s_obs = abs(s) / math.sqrt(n)
    return TestReport.judge("monobit", s_obs, erfc(s_obs / math.sqrt(2)), n, alpha)


def runs_test(bits, alpha: float = ALPHA) -> TestReport:
    """Total number of runs of identical bits.

    The test is not applicable, and fails with p = 0, when the proportion of
    ones is already further than 2/sqrt(n) from one half.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.size
    _need("runs", n, MIN_BITS, "bits")
    pi = np.count_nonzero(bits) / n
    runs = int(np.count_nonzero(np.diff(bits))) + 1
    if abs(pi - 0.5) >= 2 / math.sqrt(n):
        return TestReport.judge("runs", runs, 0.0, n, alpha)
    spread = 2 * math.sqrt(2 * n) * pi * (1 - pi)
    p_value = erfc(abs(runs - 2 * n * pi * (1 - pi)) / spread)
    return TestReport.judge("runs", runs, p_value, n, alpha)


def chi_square_bytes(data, alpha: float = ALPHA) -> TestReport:
    """Pearson chi-square of the byte histogram against uniform, 255 degrees of freedom.

    Two-sided: a histogram that is too even fails as well as one too uneven.
    """
    values = _as_byte_array(data)
    n = values.size
    _need("chi-square", n, MIN_BYTES, "bytes")
    counts = np.bincount(values, minlength=BYTE_CATEGORIES)
    expected = n / BYTE_CATEGORIES
    statistic = float(np.sum((counts - expected) ** 2) / expected)
    dof = BYTE_CATEGORIES - 1
    p_value = 2 * min(chi2.sf(statistic, dof), chi2.cdf(statistic, dof))
    return TestReport.judge("chi-square", statistic, p_value, 8 * n, alpha)


def serial_correlation(data, alpha: float = ALPHA) -> TestReport:
    """Knuth's circular lag-1 serial correlation coefficient of the bit stream.

    Compared with its null mean -1/(n-1) and standard deviation
    sqrt(n(n-3)/(n+1))/(n-1). A constant stream counts as fully correlated.
    """
    values = _as_byte_array(data)
    _need("serial-correlation", values.size, MIN_BYTES, "bytes")
    u = as_bits(values.tobytes()).astype(np.float64)
    n = u.size
    total = u.sum()
    numerator = n * np.dot(u, np.roll(u, -1)) - total**2
    denominator = n * np.dot(u, u) - total**2
    if denominator == 0:
        return TestReport.judge("serial-correlation", 1.0, 0.0, n, alpha)
    coefficient = numerator / denominator
    mean = -1 / (n - 1)
    sd = math.sqrt(n * (n - 3) / (n + 1)) / (n - 1)
    z = (coefficient - mean) / sd
    return TestReport.judge("serial-correlation", coefficient, erfc(abs(z) / math.sqrt(2)), n, alpha)


def run_battery(data, alpha: float = ALPHA) -> list[TestReport]:
    """All four tests on one byte stream."""
    bits = as_bits(data)
    reports = [
        monobit(bits, alpha),
        runs_test(bits, alpha),
        chi_square_bytes(data, alpha),
        serial_correlation(data, alpha),
    ]
    logger.info(
        "Battery on %d bytes: %d of %d tests passed",
        len(data),
        sum(r.passed for r in reports),
        len(reports),
    )
    return reports
