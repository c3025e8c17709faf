from .mpfr import RANGE_ERRORS
from .mpfr import from_mpfr
from .mpfr import mpfr_context
from .mpfr import to_mpfr
from .real import EXPONENT_LIMIT
from .real import MPReal
from .real import Op
from .real import as_fraction
from .real import decimal_digits
from .real import hex_dump
from .real import mp_abs
from .real import mp_cmp
from .real import mp_coerce
from .real import mp_compose
from .real import mp_from_decimal
from .real import mp_from_int
from .real import mp_from_rational
from .real import mp_from_text
from .real import mp_neg
from .real import mp_op
from .real import parse_exact
from .real import to_decimal
from .real import to_float

__all__ = [
    "EXPONENT_LIMIT",
    "RANGE_ERRORS",
    "MPReal",
    "Op",
    "as_fraction",
    "decimal_digits",
    "from_mpfr",
    "hex_dump",
    "mp_abs",
    "mp_cmp",
    "mp_coerce",
    "mp_compose",
    "mp_from_decimal",
    "mp_from_int",
    "mp_from_rational",
    "mp_from_text",
    "mp_neg",
    "mp_op",
    "mpfr_context",
    "parse_exact",
    "to_decimal",
    "to_float",
    "to_mpfr",
]
