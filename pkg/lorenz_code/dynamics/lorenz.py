"""The Lorenz vector field and the fixed-step classical Runge-Kutta integrator.

The stepping loop runs on gmpy2 ``mpfr`` values inside a context that rounds
to nearest at the precision of the integration; every compound expression
below is evaluated in the order written and is never re-associated, so a run
is reproducible bit for bit.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING
from typing import TextIO

import gmpy2
from mpmath import libmp

from lorenz_code.core.exceptions import ConfigError
from lorenz_code.core.exceptions import DivergedError
from lorenz_code.mp import RANGE_ERRORS
from lorenz_code.mp import MPReal
from lorenz_code.mp import as_fraction
from lorenz_code.mp import decimal_digits
from lorenz_code.mp import from_mpfr
from lorenz_code.mp import mp_coerce
from lorenz_code.mp import mp_from_int
from lorenz_code.mp import mpfr_context
from lorenz_code.mp import to_decimal
from lorenz_code.mp import to_mpfr
from lorenz_code.mp.real import ROUNDING
from lorenz_code.mp.real import check_precision

if TYPE_CHECKING:
    from collections.abc import Callable
    from collections.abc import Iterator

    MpfrParams = tuple[gmpy2.mpfr, gmpy2.mpfr, gmpy2.mpfr]
    VectorField = Callable[
        [MpfrParams, gmpy2.mpfr, gmpy2.mpfr, gmpy2.mpfr],
        tuple[gmpy2.mpfr, gmpy2.mpfr, gmpy2.mpfr],
    ]

logger = logging.getLogger(__name__)

RK4_ORDER = 4
# n * h within this many ulps of t lands on t, with no partial step
SNAP_ULPS = 4


@dataclass(frozen=True, slots=True)
class LorenzParams:
    sigma: MPReal
    gamma: MPReal
    beta: MPReal

    @classmethod
    def build(cls, sigma, gamma, beta, p: int) -> LorenzParams:
        """Build from MPReal, Fraction, int or text values at precision p."""
        return cls(mp_coerce(sigma, p), mp_coerce(gamma, p), mp_coerce(beta, p))

    @property
    def precision(self) -> int:
        return self.sigma.precision

    def as_mpfr(self) -> MpfrParams:
        return (to_mpfr(self.sigma), to_mpfr(self.gamma), to_mpfr(self.beta))


@dataclass(frozen=True, slots=True)
class State3:
    x: MPReal
    y: MPReal
    z: MPReal

    @classmethod
    def build(cls, x, y, z, p: int) -> State3:
        return cls(mp_coerce(x, p), mp_coerce(y, p), mp_coerce(z, p))

    @classmethod
    def from_mpfr(cls, x, y, z, p: int) -> State3:
        return cls(from_mpfr(x, p), from_mpfr(y, p), from_mpfr(z, p))

    @property
    def precision(self) -> int:
        return self.x.precision

    def as_decimal(self) -> tuple[str, str, str]:
        return (to_decimal(self.x), to_decimal(self.y), to_decimal(self.z))

    def as_mpfr(self):
        return (to_mpfr(self.x), to_mpfr(self.y), to_mpfr(self.z))


@dataclass(frozen=True, slots=True)
class IntegrationSpec:
    """One fixed-step integration of the Lorenz system.

    ``h`` and ``t`` are in nondimensional time, ``precision`` in bits.
    """

    params: LorenzParams
    initial: State3
    h: MPReal
    t: MPReal
    precision: int
    order: int = RK4_ORDER

    def __post_init__(self):
        check_precision(self.precision)
        values = (
            self.params.sigma,
            self.params.gamma,
            self.params.beta,
            self.initial.x,
            self.initial.y,
            self.initial.z,
            self.h,
            self.t,
        )
        if any(v.precision != self.precision for v in values):
            msg = f"every value of an integration must carry precision {self.precision}"
            raise ConfigError(msg)
        if self.h.is_zero or self.h.sign:
            msg = f"step h must be positive, got {self.h}"
            raise ConfigError(msg)
        if self.t.sign:
            msg = f"end time t must be non-negative, got {self.t}"
            raise ConfigError(msg)
        if self.order != RK4_ORDER:
            msg = "only the classical 4th-order Runge-Kutta method is available"
            raise ConfigError(msg)

    @classmethod
    def build(  # noqa: PLR0913
        cls,
        *,
        sigma="10",
        gamma="28",
        beta="8/3",
        initial=("5", "5", "10"),
        h="0.01",
        t="200",
        precision: int = 256,
    ) -> IntegrationSpec:
        """Convenience constructor from exact or textual values."""
        return cls(
            params=LorenzParams.build(sigma, gamma, beta, precision),
            initial=State3.build(*initial, precision),
            h=mp_coerce(h, precision),
            t=mp_coerce(t, precision),
            precision=precision,
        )

    def replace(self, **changes) -> IntegrationSpec:
        """A copy with some of h, t or precision changed, re-rounding as needed."""
        p = changes.get("precision", self.precision)
        return IntegrationSpec(
            params=LorenzParams.build(
                self.params.sigma,
                self.params.gamma,
                self.params.beta,
                p,
            ),
            initial=State3.build(self.initial.x, self.initial.y, self.initial.z, p),
            h=mp_coerce(changes.get("h", self.h), p),
            t=mp_coerce(changes.get("t", self.t), p),
            precision=p,
        )


def lorenz_field(prm: MpfrParams, x, y, z):
    """Lorenz right-hand side, rounded by the active mpfr context.

    dx = (-sigma * x) + (sigma * y)
    dy = ((gamma * x) - y) - (x * z)
    dz = (x * y) - (beta * z)
    """
    sigma, gamma, beta = prm
    dx = (-sigma) * x + sigma * y
    dy = (gamma * x - y) - x * z
    dz = x * y - beta * z
    return dx, dy, dz


def lorenz_rhs(params: LorenzParams, s: State3, field: VectorField = lorenz_field) -> State3:
    """Derivative vector of the Lorenz system at ``s``."""
    p = params.precision
    with mpfr_context(p):
        try:
            dx, dy, dz = field(params.as_mpfr(), *s.as_mpfr())
        except RANGE_ERRORS as exc:
            raise DivergedError(0, "non-finite derivative") from exc
    return State3.from_mpfr(dx, dy, dz, p)


class _Stepper:
    """Holds the per-integration constants of one RK4 stepping sequence."""

    __slots__ = ("context", "field", "half", "prm", "sixth")

    def __init__(self, params: LorenzParams, p: int, field: VectorField):
        self.context = mpfr_context(p)
        self.prm = params.as_mpfr()
        self.field = field
        with self.context:
            self.half = gmpy2.mpfr(1) / 2
            self.sixth = gmpy2.mpfr(1) / 6

    def advance(self, index: int, x, y, z, h):
        """One step inside the context; a range trap is divergence at ``index``."""
        with self.context:
            try:
                return self.step(x, y, z, h)
            except RANGE_ERRORS as exc:
                raise DivergedError(index) from exc

    def step(self, x, y, z, h):
        """x' = x + (h * 1/6) * (((k1 + 2 k2) + 2 k3) + k4), likewise y and z."""
        field = self.field
        prm = self.prm
        half_h = h * self.half
        sixth_h = h * self.sixth

        k1x, k1y, k1z = field(prm, x, y, z)
        k2x, k2y, k2z = field(
            prm,
            x + half_h * k1x,
            y + half_h * k1y,
            z + half_h * k1z,
        )
        k3x, k3y, k3z = field(
            prm,
            x + half_h * k2x,
            y + half_h * k2y,
            z + half_h * k2z,
        )
        k4x, k4y, k4z = field(
            prm,
            x + h * k3x,
            y + h * k3y,
            z + h * k3z,
        )

        def combine(s, k1, k2, k3, k4):
            acc = k1 + 2 * k2
            acc = acc + 2 * k3
            acc = acc + k4
            return s + sixth_h * acc

        return (
            combine(x, k1x, k2x, k3x, k4x),
            combine(y, k1y, k2y, k3y, k4y),
            combine(z, k1z, k2z, k3z, k4z),
        )


def rk4_step(
    params: LorenzParams,
    s: State3,
    h: MPReal,
    field: VectorField = lorenz_field,
) -> State3:
    """One classical RK4 step of size ``h`` from ``s``."""
    p = params.precision
    if h.is_zero or h.sign:
        msg = f"step h must be positive, got {h}"
        raise ConfigError(msg)
    x, y, z = _Stepper(params, p, field).advance(1, *s.as_mpfr(), to_mpfr(h))
    return State3.from_mpfr(x, y, z, p)


def step_plan(spec: IntegrationSpec) -> tuple[int, MPReal | None]:
    """Number of full steps and the size of the final partial step, if any.

    n = floor(t / h) on the exact values. When n * h lands within a few ulps
    of t at the integration precision, the rounding of the decimal inputs is
    the only gap and no partial step is made, so t=1, h=0.01 gives exactly
    100 steps. Any larger remainder is integrated as a final partial step.
    """
    t = as_fraction(spec.t)
    h = as_fraction(spec.h)
    ratio = t / h
    nearest = round(ratio)
    ulp = Fraction(2) ** (spec.t.exponent - spec.precision)
    if nearest and abs(t - nearest * h) <= SNAP_ULPS * ulp:
        return nearest, None
    n = ratio.numerator // ratio.denominator
    p = spec.precision
    covered = libmp.mpf_mul(libmp.from_int(n), spec.h.raw, p, ROUNDING)
    partial = libmp.mpf_sub(spec.t.raw, covered, p, ROUNDING)
    if not partial[1] or partial[0]:
        return n, None
    return n, MPReal(partial, p)


def iter_states(
    spec: IntegrationSpec,
    field: VectorField = lorenz_field,
) -> Iterator[tuple[int, gmpy2.mpfr, gmpy2.mpfr, gmpy2.mpfr]]:
    """Yield ``(step, x, y, z)`` as mpfr values after every step, the partial step last.

    The context is only active while a step runs, so several of these
    generators at different precisions can be advanced side by side.
    """
    stepper = _Stepper(spec.params, spec.precision, field)
    n, partial = step_plan(spec)
    x, y, z = spec.initial.as_mpfr()
    h = to_mpfr(spec.h)
    for index in range(1, n + 1):
        x, y, z = stepper.advance(index, x, y, z, h)
        yield index, x, y, z
    if partial is not None:
        x, y, z = stepper.advance(n + 1, x, y, z, to_mpfr(partial))
        yield n + 1, x, y, z


def integrate(spec: IntegrationSpec, field: VectorField = lorenz_field) -> State3:
    """Final state at time exactly ``spec.t``."""
    n, partial = step_plan(spec)
    logger.debug(
        "Integrating %d steps (partial step: %s) at p=%d",
        n,
        partial is not None,
        spec.precision,
    )
    last = None
    for last in iter_states(spec, field):
        pass
    if last is None:
        return spec.initial
    _index, x, y, z = last
    return State3.from_mpfr(x, y, z, spec.precision)


def trajectory(
    spec: IntegrationSpec,
    every: int = 1,
    field: VectorField = lorenz_field,
) -> Iterator[tuple[MPReal, State3]]:
    """Yield ``(time, state)`` at t=0, every ``every`` full steps, and at t."""
    if every < 1:
        msg = f"sampling interval must be at least 1 step, got {every}"
        raise ConfigError(msg)
    p = spec.precision
    n, partial = step_plan(spec)
    yield mp_from_int(0, p), spec.initial
    for index, x, y, z in iter_states(spec, field):
        last = partial is None and index == n
        if index > n:
            yield spec.t, State3.from_mpfr(x, y, z, p)
        elif index % every == 0 or last:
            time = libmp.mpf_mul(libmp.from_int(index), spec.h.raw, p, ROUNDING)
            yield MPReal(time, p), State3.from_mpfr(x, y, z, p)


def write_trajectory_csv(rows, handle: TextIO, precision: int) -> int:
    """Write ``t,x,y,z`` rows as decimal strings; returns the number of rows."""
    digits = decimal_digits(precision)
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(["t", "x", "y", "z"])
    count = 0
    for time, state in rows:
        writer.writerow(
            [
                to_decimal(time, digits),
                to_decimal(state.x, digits),
                to_decimal(state.y, digits),
                to_decimal(state.z, digits),
            ],
        )
        count += 1
    return count

