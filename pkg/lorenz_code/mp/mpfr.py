"""Exchange of MPReal values with gmpy2 ``mpfr`` numbers for hot loops.

Inside ``mpfr_context(p)`` every mpfr operation rounds to nearest, ties to
even, at p bits and traps results outside the MPReal exponent range, so a
loop written with plain operators produces the same bits as ``mp_op``.
"""

from __future__ import annotations

import gmpy2
from mpmath import libmp

from lorenz_code.core.exceptions import NonFiniteError

from .real import EXPONENT_LIMIT
from .real import ROUNDING
from .real import MPReal
from .real import as_fraction
from .real import check_precision

# Raised by an mpfr_context when a result leaves +-EXPONENT_LIMIT.
RANGE_ERRORS = (gmpy2.OverflowResultError, gmpy2.UnderflowResultError)


def mpfr_context(p: int) -> gmpy2.context:
    return gmpy2.context(
        precision=check_precision(p),
        round=gmpy2.RoundToNearest,
        emax=EXPONENT_LIMIT,
        emin=-EXPONENT_LIMIT,
        subnormalize=False,
        trap_overflow=True,
        trap_underflow=True,
    )


def to_mpfr(x: MPReal) -> gmpy2.mpfr:
    """Exact copy of ``x`` with ``x.precision`` bits, whatever context is active."""
    value = as_fraction(x)
    return gmpy2.mpfr(gmpy2.mpq(value.numerator, value.denominator), x.precision)


def from_mpfr(value: gmpy2.mpfr, p: int) -> MPReal:
    """Round ``value`` to an MPReal of precision p (exact for p-bit inputs)."""
    if not gmpy2.is_finite(value):
        msg = f"non-finite value {value}"
        raise NonFiniteError(msg)
    if gmpy2.is_zero(value):
        return MPReal(libmp.fzero, p)
    man, exp = value.as_mantissa_exp()
    return MPReal.from_raw(libmp.from_man_exp(int(man), int(exp), p, ROUNDING), p)
