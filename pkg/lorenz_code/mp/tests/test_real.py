import itertools
import random
from fractions import Fraction

import pytest

from lorenz_code.core.exceptions import ComposeError
from lorenz_code.core.exceptions import InvalidPrecisionError
from lorenz_code.core.exceptions import MPDomainError
from lorenz_code.core.exceptions import MPParseError
from lorenz_code.core.exceptions import NonFiniteError
from lorenz_code.core.exceptions import PrecisionMismatchError
from lorenz_code.mp import EXPONENT_LIMIT
from lorenz_code.mp import MPReal
from lorenz_code.mp import Op
from lorenz_code.mp import hex_dump
from lorenz_code.mp import mp_coerce
from lorenz_code.mp import mp_compose
from lorenz_code.mp import mp_from_decimal
from lorenz_code.mp import mp_from_int
from lorenz_code.mp import mp_from_rational
from lorenz_code.mp import mp_from_text
from lorenz_code.mp import mp_op
from lorenz_code.mp import to_decimal


def as_fraction(x: MPReal) -> Fraction:
    sign, man, exp, _bc = x.raw
    value = Fraction(int(man)) * Fraction(2) ** exp
    return -value if sign else value


def round_nearest_even(r: Fraction, bits: int) -> Fraction:
    """Brute-force oracle: round an exact rational to ``bits`` significant bits."""
    if r == 0:
        return Fraction(0)
    negative = r < 0
    r = abs(r)
    e = 0
    while r >= Fraction(2) ** e:
        e += 1
    while r < Fraction(2) ** (e - 1):
        e -= 1
    scaled = r * Fraction(2) ** (bits - e)
    n = scaled.numerator // scaled.denominator
    rem = scaled - n
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and n % 2 == 1):
        n += 1
    result = Fraction(n) * Fraction(2) ** (e - bits)
    return -result if negative else result


class TestMpOp:
    def test_self_subtraction_is_canonical_zero(self):
        x = mp_from_decimal("3.14159", 53)
        result = mp_op(x, x, Op.SUB)
        assert result.is_zero
        assert result == mp_from_int(0, 53)
        assert hex_dump(result) == "+:0:" + "0" * 14

    def test_increment_below_half_spacing_is_rounded_away(self):
        one = mp_from_int(1, 8)
        tiny = mp_from_rational(1, 2**9, 8)
        assert mp_op(one, tiny, "add") == one

    def test_division_rounds_to_nearest(self):
        result = mp_op(mp_from_int(8, 4), mp_from_int(3, 4), Op.DIV)
        assert as_fraction(result) == Fraction(11, 4)

    def test_division_by_zero(self):
        with pytest.raises(MPDomainError):
            mp_op(mp_from_int(1, 53), mp_from_int(0, 53), Op.DIV)

    def test_mixed_precision_is_rejected(self):
        with pytest.raises(PrecisionMismatchError):
            mp_op(mp_from_int(1, 53), mp_from_int(1, 54), Op.ADD)

    def test_overflow_is_an_error(self):
        big = MPReal.from_raw((0, 1, EXPONENT_LIMIT - 1, 1), 24)
        with pytest.raises(NonFiniteError, match="overflow"):
            mp_op(big, big, Op.MUL)

    def test_underflow_is_an_error(self):
        small = MPReal.from_raw((0, 1, -EXPONENT_LIMIT, 1), 24)
        with pytest.raises(NonFiniteError, match="underflow"):
            mp_op(small, small, Op.MUL)

    @pytest.mark.parametrize("p", [24, 53, 256])
    def test_reevaluation_is_bit_identical(self, p):
        rng = random.Random(p)
        for _ in range(1000):
            a = mp_from_rational(rng.randint(-(10**12), 10**12), rng.randint(1, 10**6), p)
            b = mp_from_rational(rng.randint(1, 10**12), rng.randint(1, 10**6), p)
            which = rng.choice(list(Op))
            first = mp_op(a, b, which)
            second = mp_op(a, b, which)
            assert first == second
            assert hex_dump(first) == hex_dump(second)

    def test_exhaustive_four_bit_rounding(self):
        values = [
            mp_from_rational(sign * significand * 2**shift, 2**6, 4)
            for sign in (1, -1)
            for significand in range(8, 16)
            for shift in range(-2, 3)
        ]
        operations = {
            Op.ADD: lambda x, y: x + y,
            Op.SUB: lambda x, y: x - y,
            Op.MUL: lambda x, y: x * y,
            Op.DIV: lambda x, y: x / y,
        }
        for a, b in itertools.product(values, repeat=2):
            for which, exact in operations.items():
                expected = round_nearest_even(exact(as_fraction(a), as_fraction(b)), 4)
                assert as_fraction(mp_op(a, b, which)) == expected, (a, b, which)


class TestFromDecimal:
    def test_exact_value(self):
        assert as_fraction(mp_from_decimal("10.0", 256)) == 10

    def test_rounds_like_division(self):
        assert as_fraction(mp_from_decimal("2.6666666666666666666", 4)) == Fraction(11, 4)

    def test_zero_is_canonical(self):
        assert mp_from_decimal("0", 64) == mp_from_int(0, 64)
        assert mp_from_decimal("-0.000", 64) == mp_from_int(0, 64)

    def test_sign_and_exponent_forms(self):
        assert as_fraction(mp_from_decimal("-1.25e1", 53)) == Fraction(-25, 2)
        assert as_fraction(mp_from_decimal("+.5", 53)) == Fraction(1, 2)

    @pytest.mark.parametrize("text", ["", ".", "1,5", "abc", "1e", "nan", "inf", "0x10"])
    def test_malformed(self, text):
        with pytest.raises(MPParseError):
            mp_from_decimal(text, 53)

    def test_precision_must_be_at_least_two(self):
        with pytest.raises(InvalidPrecisionError):
            mp_from_decimal("1", 1)

    @pytest.mark.parametrize("p", [24, 53, 113, 256])
    def test_decimal_round_trip(self, p):
        rng = random.Random(7 * p)
        for _ in range(200):
            x = mp_from_rational(rng.randint(-(10**30), 10**30), rng.randint(1, 10**20), p)
            assert mp_from_decimal(to_decimal(x), p) == x


class TestCompose:
    def test_single_value(self):
        a = mp_from_decimal("1.5", 53)
        assert mp_compose([a], []) == a

    @pytest.mark.parametrize("p", [2, 8, 53])
    def test_exact_integers(self, p):
        one = mp_from_int(1, p)
        assert as_fraction(mp_compose([one, one, one], [Op.ADD, Op.ADD])) == 3

    def test_matches_step_by_step_fold(self):
        values = [mp_from_decimal(v, 53) for v in ("0.1", "0.2", "0.3", "7")]
        ops = [Op.ADD, Op.MUL, Op.DIV]
        expected = mp_op(mp_op(mp_op(values[0], values[1], "add"), values[2], "mul"), values[3], "div")
        assert mp_compose(values, ops) == expected
        assert mp_compose(values, ops) == mp_compose(values, ops)

    def test_failing_step_index_is_reported(self):
        one = mp_from_int(1, 53)
        zero = mp_from_int(0, 53)
        with pytest.raises(ComposeError) as excinfo:
            mp_compose([one, one, zero], [Op.ADD, Op.DIV])
        assert excinfo.value.step == 1
        assert isinstance(excinfo.value.cause, MPDomainError)

    def test_operation_count_must_match(self):
        with pytest.raises(ValueError, match="expected 1 operations"):
            mp_compose([mp_from_int(1, 53), mp_from_int(1, 53)], [])


def test_hex_dump_layout():
    x = mp_from_decimal("1.5", 8)
    assert x.exponent == 1
    assert x.significand == 0b11000000
    assert hex_dump(x) == "+:1:c0"
    assert hex_dump(mp_from_decimal("-0.5", 8)) == "-:0:80"


class TestCoerce:
    def test_rational_text_is_one_division(self):
        assert mp_from_text("8/3", 256) == mp_op(mp_from_int(8, 256), mp_from_int(3, 256), Op.DIV)

    def test_fraction_and_int(self):
        assert mp_coerce(Fraction(1, 4), 8) == mp_from_decimal("0.25", 8)
        assert mp_coerce(10, 256) == mp_from_decimal("10", 256)

    def test_rounds_to_new_precision_once(self):
        third = mp_from_rational(1, 3, 256)
        assert mp_coerce(third, 4) == mp_from_rational(1, 3, 4)
