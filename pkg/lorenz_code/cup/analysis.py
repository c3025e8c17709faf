"""Computational uncertainty principle experiments.

Measures the maximum effective computation time (MECT) of a finite-precision
integration against a higher-precision reference, fits the total error law
E(h) = A * h**m + B * h**-0.5 at a fixed time, and extrapolates the MECT from
two measured precisions.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np
from scipy.optimize import nnls

from lorenz_code.core.exceptions import ConfigError
from lorenz_code.core.exceptions import FitError
from lorenz_code.core.exceptions import MectBeyondHorizonError
from lorenz_code.core.exceptions import NoInteriorMinimumError
from lorenz_code.dynamics.lorenz import IntegrationSpec
from lorenz_code.dynamics.lorenz import LorenzParams
from lorenz_code.dynamics.lorenz import State3
from lorenz_code.dynamics.lorenz import integrate
from lorenz_code.dynamics.lorenz import iter_states
from lorenz_code.dynamics.lorenz import step_plan
from lorenz_code.mp import MPReal
from lorenz_code.mp import as_fraction
from lorenz_code.mp import mp_coerce
from lorenz_code.mp import mpfr_context
from lorenz_code.mp import to_float
from lorenz_code.mp import to_mpfr

if TYPE_CHECKING:
    from collections.abc import Iterable
    from collections.abc import Sequence

logger = logging.getLogger(__name__)

DEFAULT_DELTA = 1.0
DEFAULT_T_MAX = 400
DEFAULT_ORDER = 4
MIN_SAMPLES = 4
MIN_DECADES = 1.0
ERROR_REFERENCE_PRECISION = 128
ERROR_REFERENCE_DIVISOR = 4
ERROR_FLOOR = 0.01
# below this Rayleigh number the orbit settles and never loses its reference
CHAOTIC_GAMMA = 28


@dataclass(frozen=True, slots=True)
class ErrorLawFit:
    """E(h) = amp_trunc * h**m + amp_round * h**-0.5 fitted at ``t_fixed``.

    ``residual`` is the root mean square of the absolute misfit and
    ``relative_residual`` the same taken relative to each measured error.
    """

    t_fixed: MPReal | None
    amp_trunc: float
    amp_round: float
    m: int
    residual: float
    relative_residual: float = 0.0

    def evaluate(self, h):
        h = np.asarray(h, dtype=float)
        return self.amp_trunc * h**self.m + self.amp_round * h**-0.5


@dataclass(frozen=True, slots=True)
class MectEstimate:
    precision_bits: int
    mect: float
    delta: float
    h_used: float
    reference_precision: int

    def __post_init__(self):
        if self.mect <= 0:
            msg = f"MECT must be positive, got {self.mect}"
            raise FitError(msg)
        if self.reference_precision < self.precision_bits + 64:
            msg = "the reference precision must exceed p by at least 64 bits"
            raise FitError(msg)


@dataclass(frozen=True, slots=True)
class MectModel:
    """T(p) = T1 + chat * m * ln2 * (p - p1) * m / (m + 0.5)."""

    chat: float
    m: int
    anchors: list[tuple[int, float]] = field(default_factory=list)

    def __post_init__(self):
        if self.chat <= 0:
            msg = f"the MECT model constant must be positive, got {self.chat}"
            raise FitError(msg)
        if len(self.anchors) < 2:  # noqa: PLR2004
            msg = "the MECT model needs at least two anchors"
            raise FitError(msg)

    @property
    def slope(self) -> float:
        """MECT gained per extra bit of precision."""
        m = self.m
        return self.chat * m * math.log(2) * m / (m + 0.5)

    def predict(self, p: int) -> float:
        p1, t1 = self.anchors[0]
        return t1 + self.slope * (p - p1)


def reference_precision_for(p: int) -> int:
    return max(2 * p, p + 64)


def _mect_specs(
    params: LorenzParams,
    initial: State3,
    p: int,
    h,
    t_max,
    reference_precision: int | None,
) -> tuple[IntegrationSpec, IntegrationSpec]:
    spec = IntegrationSpec(
        params=LorenzParams.build(params.sigma, params.gamma, params.beta, p),
        initial=State3.build(initial.x, initial.y, initial.z, p),
        h=mp_coerce(h, p),
        t=mp_coerce(t_max, p),
        precision=p,
    )
    ref = reference_precision or reference_precision_for(p)
    # the p-bit inputs are carried up exactly, so both runs start identically
    return spec, spec.replace(precision=ref)


def measure_mect(  # noqa: PLR0913
    params: LorenzParams,
    initial: State3,
    p: int,
    h,
    delta: float = DEFAULT_DELTA,
    t_max=DEFAULT_T_MAX,
    reference_precision: int | None = None,
) -> MectEstimate:
    """First step time at which x at precision p leaves the reference by more than ``delta``."""
    if delta <= 0:
        msg = f"the divergence threshold must be positive, got {delta}"
        raise FitError(msg)
    if as_fraction(params.gamma) < CHAOTIC_GAMMA:
        msg = (
            f"MECT is only defined in the chaotic regime gamma >= {CHAOTIC_GAMMA}, "
            f"got {params.gamma}"
        )
        raise ConfigError(msg)
    spec, ref_spec = _mect_specs(params, initial, p, h, t_max, reference_precision)
    ref = ref_spec.precision
    context = mpfr_context(ref)
    threshold = to_mpfr(mp_coerce(Fraction(delta), ref))
    h_value = as_fraction(spec.h)
    n, _partial = step_plan(spec)

    for (index, x, _y, _z), (_ref_index, x_ref, _y_ref, _z_ref) in zip(
        iter_states(spec),
        iter_states(ref_spec),
        strict=False,
    ):
        with context:
            crossed = abs(x - x_ref) > threshold
        if crossed:
            when = as_fraction(spec.t) if index > n else index * h_value
            estimate = MectEstimate(
                precision_bits=p,
                mect=float(when),
                delta=float(delta),
                h_used=to_float(spec.h),
                reference_precision=ref,
            )
            logger.info(
                "MECT at p=%d, h=%s: T=%.2f (reference p=%d)",
                p,
                estimate.h_used,
                estimate.mect,
                ref,
            )
            return estimate

    raise MectBeyondHorizonError(float(as_fraction(spec.t)))


def extrapolate_mect(
    anchors: Sequence[MectEstimate],
    target_p: int,
    m: int = DEFAULT_ORDER,
) -> tuple[MectModel, float]:
    """Solve the two-anchor MECT relation for its constant and predict T(target_p)."""
    if len(anchors) != 2:  # noqa: PLR2004
        msg = f"extrapolation needs exactly two anchors, got {len(anchors)}"
        raise FitError(msg)
    first, second = sorted(anchors, key=lambda a: a.precision_bits)
    p1, t1 = first.precision_bits, first.mect
    p2, t2 = second.precision_bits, second.mect
    if p1 == p2:
        msg = f"anchors must be at distinct precisions, both are p={p1}"
        raise FitError(msg)
    if t2 <= t1:
        msg = f"MECT must grow with precision, got T({p1})={t1} and T({p2})={t2}"
        raise FitError(msg)

    chat = (t2 - t1) / (m * math.log(2) * (p2 - p1) * m / (m + 0.5))
    model = MectModel(chat=chat, m=m, anchors=[(p1, t1), (p2, t2)])
    predicted = model.predict(target_p)
    logger.info("MECT model constant %.4f predicts T(%d)=%.2f", chat, target_p, predicted)
    return model, predicted


def required_precision(model: MectModel, target_t: float) -> int:
    """Smallest precision whose predicted MECT reaches ``target_t``."""
    if target_t <= 0:
        msg = f"the target MECT must be positive, got {target_t}"
        raise FitError(msg)
    p1, t1 = model.anchors[0]
    m = model.m
    exact = p1 + (target_t - t1) * (m + 0.5) / (model.chat * m * m * math.log(2))
    # absorb float noise so an exact anchor maps back to itself
    p = math.ceil(round(exact, 9))
    if p < 2:  # noqa: PLR2004
        msg = f"target MECT {target_t} is below what any precision >= 2 bits gives"
        raise FitError(msg)
    return p


def fit_error_law(
    samples: Iterable[tuple[float, float]],
    m: int = DEFAULT_ORDER,
    t_fixed: MPReal | None = None,
) -> ErrorLawFit:
    """Non-negative least squares fit of E(h) = A * h**m + B * h**-0.5.

    Rows are weighted by sqrt(1 + (floor / E)**2) with floor = ERROR_FLOOR *
    mean(E): errors above the floor are fitted in absolute terms and smaller
    ones relative to the floor.
    """
    samples = [(float(h), float(e)) for h, e in samples]
    if len(samples) < MIN_SAMPLES:
        msg = f"the error law needs at least {MIN_SAMPLES} samples, got {len(samples)}"
        raise FitError(msg)
    hs = np.array([h for h, _ in samples])
    errors = np.array([e for _, e in samples])
    if np.any(hs <= 0) or np.any(errors <= 0):
        msg = "step sizes and measured errors must be positive"
        raise FitError(msg)
    if math.log10(hs.max() / hs.min()) < MIN_DECADES:
        msg = "samples must span at least one decade of h"
        raise FitError(msg)

    design = np.column_stack([hs**m, hs**-0.5])
    floor = ERROR_FLOOR * errors.mean()
    weights = np.sqrt(1 + (floor / errors) ** 2)
    weighted = design * weights[:, np.newaxis]
    if np.linalg.matrix_rank(weighted) < 2:  # noqa: PLR2004
        msg = "degenerate design matrix"
        raise FitError(msg)
    (amp_trunc, amp_round), _norm = nnls(weighted, errors * weights)

    misfit = design @ np.array([amp_trunc, amp_round]) - errors
    fit = ErrorLawFit(
        t_fixed=t_fixed,
        amp_trunc=float(amp_trunc),
        amp_round=float(amp_round),
        m=m,
        residual=float(np.sqrt(np.mean(misfit**2))),
        relative_residual=float(np.sqrt(np.mean((misfit / errors) ** 2))),
    )
    logger.info(
        "Error law fit: A=%.6g B=%.6g (m=%d, rms residual %.3g)",
        fit.amp_trunc,
        fit.amp_round,
        m,
        fit.residual,
    )
    return fit


def optimal_step(fit: ErrorLawFit) -> float:
    """h* = (B / (2 m A)) ** (1 / (m + 0.5)), the minimizer of the fitted error."""
    if fit.amp_trunc <= 0 or fit.amp_round <= 0:
        msg = (
            f"error law A={fit.amp_trunc}, B={fit.amp_round} has no interior minimum"
        )
        raise NoInteriorMinimumError(msg)
    m = fit.m
    return (fit.amp_round / (2 * m * fit.amp_trunc)) ** (1 / (m + 0.5))


def relative_divergence(spec_a: IntegrationSpec, spec_b: IntegrationSpec) -> float:
    """|x_a - x_b| / max(|x_a|, |x_b|) between the two final states."""
    x_a = as_fraction(integrate(spec_a).x)
    x_b = as_fraction(integrate(spec_b).x)
    scale = max(abs(x_a), abs(x_b))
    if not scale:
        return 0.0
    return float(abs(x_a - x_b) / scale)


def error_samples(  # noqa: PLR0913
    params: LorenzParams,
    initial: State3,
    t,
    p: int,
    hs: Iterable,
    reference_precision: int = ERROR_REFERENCE_PRECISION,
    reference_h=None,
) -> list[tuple[float, float]]:
    """Measured max-norm error at time ``t`` for every step in ``hs``.

    All runs are compared with one reference orbit at ``reference_precision``
    bits and step ``reference_h`` (default: the smallest h divided by 4).
    """
    steps = [mp_coerce(h, p) for h in hs]
    if not steps:
        msg = "no step sizes given"
        raise FitError(msg)
    if reference_h is None:
        reference_h = min(as_fraction(h) for h in steps) / ERROR_REFERENCE_DIVISOR
    reference = IntegrationSpec.build(
        sigma=params.sigma,
        gamma=params.gamma,
        beta=params.beta,
        initial=(initial.x, initial.y, initial.z),
        h=reference_h,
        t=t,
        precision=reference_precision,
    )
    exact = integrate(reference)
    exact_values = (as_fraction(exact.x), as_fraction(exact.y), as_fraction(exact.z))

    samples = []
    for h in steps:
        spec = IntegrationSpec.build(
            sigma=params.sigma,
            gamma=params.gamma,
            beta=params.beta,
            initial=(initial.x, initial.y, initial.z),
            h=h,
            t=t,
            precision=p,
        )
        final = integrate(spec)
        error = max(
            abs(as_fraction(value) - ref)
            for value, ref in zip((final.x, final.y, final.z), exact_values, strict=True)
        )
        samples.append((to_float(h), float(error)))
        logger.debug("h=%s error=%.3e", to_float(h), float(error))
    return samples
