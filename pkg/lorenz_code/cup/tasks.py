from dataclasses import asdict
from fractions import Fraction

from celery import shared_task

from lorenz_code.core.grid import run_cells
from lorenz_code.dynamics.lorenz import LorenzParams
from lorenz_code.dynamics.lorenz import State3
from lorenz_code.mp import MPReal
from lorenz_code.mp import as_fraction

from .analysis import DEFAULT_DELTA
from .analysis import DEFAULT_T_MAX
from .analysis import MectEstimate
from .analysis import measure_mect


def exact_text(value) -> str:
    """Exact ``a/b`` or integer text for an MPReal, Fraction, int or string."""
    if isinstance(value, MPReal):
        return str(as_fraction(value))
    if isinstance(value, (Fraction, int)):
        return str(Fraction(value))
    return str(value)


@shared_task()
def measure_mect_task(  # noqa: PLR0913
    sigma,
    gamma,
    beta,
    x0,
    y0,
    z0,
    p,
    h,
    delta=DEFAULT_DELTA,
    t_max=DEFAULT_T_MAX,
):
    """Measure one MECT grid cell; arguments are exact text values."""
    estimate = measure_mect(
        LorenzParams.build(sigma, gamma, beta, p),
        State3.build(x0, y0, z0, p),
        p,
        h,
        delta=delta,
        t_max=t_max,
    )
    return asdict(estimate)


def mect_grid(  # noqa: PLR0913
    params: LorenzParams,
    initial: State3,
    precisions,
    h,
    delta=DEFAULT_DELTA,
    *,
    t_max=DEFAULT_T_MAX,
    parallel=None,
) -> list[MectEstimate]:
    """MECT at every precision in ``precisions``, in the order given."""
    shared = {
        "sigma": exact_text(params.sigma),
        "gamma": exact_text(params.gamma),
        "beta": exact_text(params.beta),
        "x0": exact_text(initial.x),
        "y0": exact_text(initial.y),
        "z0": exact_text(initial.z),
        "h": exact_text(h),
        "delta": delta,
        "t_max": exact_text(t_max),
    }
    cells = [{**shared, "p": p} for p in precisions]
    return [MectEstimate(**row) for row in run_cells(measure_mect_task, cells, parallel=parallel)]
