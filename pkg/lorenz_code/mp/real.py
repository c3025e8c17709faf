"""Deterministic multiple-precision binary floating point.

Values are immutable and carry their own precision. Every operation rounds the
exact real result to nearest, ties to even, at that precision; there is no
global rounding state. Arithmetic is delegated to the raw-tuple layer of
``mpmath.libmp`` (sign, odd mantissa, exponent, bitcount), which is correctly
rounded and uses gmpy2 integers when they are installed.

A nonzero value is presented as ``(-1)**sign * 0.significand * 2**exponent``
where the significand holds exactly ``precision`` bits with a leading one.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import TYPE_CHECKING

from mpmath import libmp

from lorenz_code.core.exceptions import ComposeError
from lorenz_code.core.exceptions import InvalidPrecisionError
from lorenz_code.core.exceptions import LorenzCodeError
from lorenz_code.core.exceptions import MPDomainError
from lorenz_code.core.exceptions import MPParseError
from lorenz_code.core.exceptions import NonFiniteError
from lorenz_code.core.exceptions import PrecisionMismatchError

if TYPE_CHECKING:
    from collections.abc import Sequence

EXPONENT_LIMIT = 2**30
ROUNDING = libmp.round_nearest

RawMPF = tuple[int, int, int, int]

_DECIMAL_RE = re.compile(
    r"^(?P<sign>[+-])?(?P<int>\d*)(?:\.(?P<frac>\d*))?(?:[eE](?P<exp>[+-]?\d+))?$",
)
_LOG2_10 = math.log2(10)


class Op(StrEnum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def check_precision(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:  # noqa: PLR2004
        msg = f"precision must be an integer >= 2 bits, got {p!r}"
        raise InvalidPrecisionError(msg)
    return p


def check_raw(raw: RawMPF) -> RawMPF:
    """Reject infinities, NaN and exponents outside +-EXPONENT_LIMIT."""
    _sign, man, exp, bc = raw
    if not man:
        if exp:
            msg = f"non-finite value {libmp.to_str(raw, 5)}"
            raise NonFiniteError(msg)
        return raw
    exponent = exp + bc
    if exponent > EXPONENT_LIMIT:
        msg = f"exponent overflow: 2**{exponent} exceeds 2**{EXPONENT_LIMIT}"
        raise NonFiniteError(msg)
    if exponent < -EXPONENT_LIMIT:
        msg = f"exponent underflow: 2**{exponent} below 2**-{EXPONENT_LIMIT}"
        raise NonFiniteError(msg)
    return raw


@dataclass(frozen=True, slots=True)
class MPReal:
    """A p-bit binary floating-point value, correctly rounded."""

    raw: RawMPF
    precision: int

    @classmethod
    def from_raw(cls, raw: RawMPF, precision: int) -> MPReal:
        return cls(check_raw(raw), precision)

    @property
    def is_zero(self) -> bool:
        return not self.raw[1]

    @property
    def sign(self) -> int:
        """0 for positive values and zero, 1 for negative values."""
        return self.raw[0]

    @property
    def exponent(self) -> int:
        if self.is_zero:
            return 0
        _sign, _man, exp, bc = self.raw
        return exp + bc

    @property
    def significand(self) -> int:
        """The significand as an integer of exactly ``precision`` bits."""
        if self.is_zero:
            return 0
        _sign, man, _exp, bc = self.raw
        return int(man) << (self.precision - bc)

    def __str__(self) -> str:
        return to_decimal(self)

    def __repr__(self) -> str:
        return f"MPReal('{to_decimal(self)}', p={self.precision})"


def mp_from_int(n: int, p: int) -> MPReal:
    check_precision(p)
    return MPReal.from_raw(libmp.from_int(n, p, ROUNDING), p)


def mp_from_rational(num: int, den: int, p: int) -> MPReal:
    """Round the exact rational ``num/den`` to p bits in one step."""
    check_precision(p)
    if den == 0:
        msg = "division by exact zero"
        raise MPDomainError(msg)
    return MPReal.from_raw(libmp.from_rational(num, den, p, ROUNDING), p)


def parse_decimal(s: str) -> tuple[int, int]:
    """Split a decimal literal into an exact ``(numerator, denominator)`` pair."""
    match = _DECIMAL_RE.match(s.strip()) if isinstance(s, str) else None
    if match is None or not (match["int"] or match["frac"]):
        msg = f"malformed decimal literal: {s!r}"
        raise MPParseError(msg)
    digits = (match["int"] or "") + (match["frac"] or "")
    scale = len(match["frac"] or "") - int(match["exp"] or 0)
    num = int(digits)
    if match["sign"] == "-":
        num = -num
    if num and (len(digits.lstrip("0")) - scale) * _LOG2_10 > EXPONENT_LIMIT + 64:
        msg = f"decimal literal out of exponent range: {s!r}"
        raise NonFiniteError(msg)
    if num and (len(digits.lstrip("0")) - scale) * _LOG2_10 < -EXPONENT_LIMIT - 64:
        msg = f"decimal literal out of exponent range: {s!r}"
        raise NonFiniteError(msg)
    if scale >= 0:
        return num, 10**scale
    return num * 10**-scale, 1


def mp_from_decimal(s: str, p: int) -> MPReal:
    """Nearest p-bit value to the exact decimal ``s`` (ties to even).

    Parsing is done on the digits themselves, so it does not depend on the
    locale or on the platform's float conversion.
    """
    num, den = parse_decimal(s)
    return mp_from_rational(num, den, p)


def _same_precision(a: MPReal, b: MPReal) -> int:
    if a.precision != b.precision:
        msg = f"operands carry different precisions ({a.precision} vs {b.precision})"
        raise PrecisionMismatchError(msg)
    return a.precision


def mp_op(a: MPReal, b: MPReal, which: Op | str) -> MPReal:
    """Apply one basic operation, rounded to nearest-even at the shared precision."""
    p = _same_precision(a, b)
    which = Op(which)
    if which is Op.ADD:
        raw = libmp.mpf_add(a.raw, b.raw, p, ROUNDING)
    elif which is Op.SUB:
        raw = libmp.mpf_sub(a.raw, b.raw, p, ROUNDING)
    elif which is Op.MUL:
        raw = libmp.mpf_mul(a.raw, b.raw, p, ROUNDING)
    else:
        if b.is_zero:
            msg = "division by exact zero"
            raise MPDomainError(msg)
        raw = libmp.mpf_div(a.raw, b.raw, p, ROUNDING)
    return MPReal.from_raw(raw, p)


def mp_compose(values: Sequence[MPReal], ops: Sequence[Op | str]) -> MPReal:
    """Strict left-to-right fold ``((v0 op0 v1) op1 v2) ...``."""
    if not values:
        msg = "mp_compose needs at least one value"
        raise ValueError(msg)
    if len(ops) != len(values) - 1:
        msg = f"expected {len(values) - 1} operations, got {len(ops)}"
        raise ValueError(msg)
    acc = values[0]
    for index, (value, which) in enumerate(zip(values[1:], ops, strict=True)):
        try:
            acc = mp_op(acc, value, which)
        except LorenzCodeError as exc:
            raise ComposeError(index, exc) from exc
    return acc


def mp_neg(a: MPReal) -> MPReal:
    return MPReal(libmp.mpf_neg(a.raw), a.precision)


def mp_abs(a: MPReal) -> MPReal:
    return MPReal(libmp.mpf_abs(a.raw), a.precision)


def mp_cmp(a: MPReal, b: MPReal) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``.

    Comparison is exact, so mixed precisions are allowed here.
    """
    return libmp.mpf_cmp(a.raw, b.raw)


def decimal_digits(p: int) -> int:
    """Significant digits that make a decimal dump round-trip at p bits."""
    return math.ceil(p * math.log10(2)) + 2


def to_decimal(x: MPReal, digits: int | None = None) -> str:
    return libmp.to_str(x.raw, digits or decimal_digits(x.precision))


def to_float(x: MPReal) -> float:
    return libmp.to_float(x.raw, rnd=ROUNDING)


def hex_dump(x: MPReal) -> str:
    """``sign:exponent:significand`` with the significand in lowercase hex."""
    sign = "-" if x.sign else "+"
    width = (x.precision + 3) // 4
    return f"{sign}:{x.exponent}:{x.significand:0{width}x}"


def parse_exact(s: str) -> Fraction:
    """Exact value of a decimal literal or of a rational written ``a/b``."""
    if isinstance(s, str) and "/" in s:
        num_text, _, den_text = s.partition("/")
        num, num_den = parse_decimal(num_text)
        den, den_den = parse_decimal(den_text)
        if den == 0:
            msg = f"zero denominator in {s!r}"
            raise MPDomainError(msg)
        return Fraction(num * den_den, num_den * den)
    num, den = parse_decimal(s)
    return Fraction(num, den)


def mp_from_text(s: str, p: int) -> MPReal:
    """Parse a decimal literal or an exact rational written ``a/b``."""
    value = parse_exact(s)
    return mp_from_rational(value.numerator, value.denominator, p)


def mp_coerce(value: MPReal | Fraction | int | str, p: int) -> MPReal:
    """Bring an exact or textual value to precision p with a single rounding."""
    if isinstance(value, MPReal):
        if value.precision == p:
            return value
        return MPReal.from_raw(libmp.mpf_pos(value.raw, p, ROUNDING), p)
    if isinstance(value, Fraction):
        return mp_from_rational(value.numerator, value.denominator, p)
    if isinstance(value, int) and not isinstance(value, bool):
        return mp_from_int(value, p)
    return mp_from_text(value, p)


def as_fraction(x: MPReal) -> Fraction:
    """The exact rational value of ``x``."""
    sign, man, exp, _bc = x.raw
    if exp >= 0:
        value = Fraction(int(man) << exp)
    else:
        value = Fraction(int(man), 1 << -exp)
    return -value if sign else value
