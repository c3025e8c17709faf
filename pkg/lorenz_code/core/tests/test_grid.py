import pytest
from celery import shared_task

from lorenz_code.core.grid import run_cells


@shared_task()
def scaled_sum(a, b, scale=1):
    return (a + b) * scale


CELLS = [{"a": 1, "b": 2}, {"a": 3, "b": 4, "scale": 10}, {"a": 0, "b": 0}]


@pytest.mark.parametrize("parallel", [False, True])
def test_results_keep_cell_order(parallel):
    assert run_cells(scaled_sum, CELLS, parallel=parallel) == [3, 70, 0]


def test_parallel_defaults_to_setting(settings):
    settings.LORENZ_CODE_PARALLEL = True
    assert run_cells(scaled_sum, iter(CELLS)) == [3, 70, 0]


def test_no_cells():
    assert run_cells(scaled_sum, [], parallel=False) == []
