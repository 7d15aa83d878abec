"""
Fan-out over independent work items.

Items are split into index-tagged chunks; results are merged back in index
order, so the output does not depend on which worker finishes first.
"""
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor

from django.conf import settings

logger = logging.getLogger(__name__)


def _run_chunk(function, chunk):
    start, items = chunk
    return start, [function(item) for item in items]


def fan_out(function, items, workers: int = None, chunk_size: int = None) -> list:
    """[function(item) for item in items], possibly in worker processes"""
    items = list(items)
    if workers is None:
        workers = settings.ARC_ALGEBRA_WORKERS
    if workers <= 1 or len(items) < 2:
        return [function(item) for item in items]

    size = chunk_size or max(1, len(items) // (4 * workers))
    chunks = [(start, items[start:start + size]) for start in range(0, len(items), size)]
    logger.info('Распределение %s задач на %s процессов (%s частей)', len(items), workers, len(chunks))
    # workers inherit the configured Django process
    context = multiprocessing.get_context('fork')
    with ProcessPoolExecutor(max_workers=workers, mp_context=context) as pool:
        finished = list(pool.map(_run_chunk, [function] * len(chunks), chunks))

    results = []
    for _, chunk_results in sorted(finished, key=lambda item: item[0]):
        results.extend(chunk_results)
    return results
