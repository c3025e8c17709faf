import pytest
from celery.result import EagerResult

from lorenz_code.cup.tasks import measure_mect_task
from lorenz_code.cup.tasks import mect_grid
from lorenz_code.dynamics.lorenz import LorenzParams
from lorenz_code.dynamics.lorenz import State3


def test_measure_mect_task(settings):
    settings.CELERY_TASK_ALWAYS_EAGER = True
    task_result = measure_mect_task.delay(
        "10",
        "28",
        "8/3",
        "5",
        "5",
        "10",
        24,
        "1/100",
        delta=1e-6,
        t_max="20",
    )
    assert isinstance(task_result, EagerResult)
    assert task_result.result["precision_bits"] == 24
    assert 0 < task_result.result["mect"] < 20


@pytest.mark.parametrize("parallel", [False, True])
def test_mect_grid_keeps_cell_order(settings, parallel):
    settings.CELERY_TASK_ALWAYS_EAGER = True
    params = LorenzParams.build("10", "28", "8/3", 32)
    initial = State3.build("5", "5", "10", 32)
    estimates = mect_grid(
        params,
        initial,
        [32, 24],
        "1/100",
        1e-6,
        t_max="20",
        parallel=parallel,
    )
    assert [e.precision_bits for e in estimates] == [32, 24]
    assert estimates[1].mect <= estimates[0].mect
