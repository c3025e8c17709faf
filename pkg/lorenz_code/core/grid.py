"""Evaluate independent experiment cells in-process or as a Celery group."""

import logging

from celery import group
from django.conf import settings

logger = logging.getLogger(__name__)


def run_cells(task, cells, *, parallel=None):
    """Apply ``task`` to every kwargs dict in ``cells``; results keep cell order.

    ``parallel`` defaults to ``settings.LORENZ_CODE_PARALLEL``. Task arguments
    and results must be JSON-serializable either way.
    """
    cells = list(cells)
    if parallel is None:
        parallel = settings.LORENZ_CODE_PARALLEL
    if not parallel:
        logger.debug("Evaluating %d cells in-process", len(cells))
        return [task(**cell) for cell in cells]
    logger.debug("Dispatching %d cells to Celery", len(cells))
    result = group(task.s(**cell) for cell in cells).apply_async()
    return result.get(disable_sync_subtasks=False)
