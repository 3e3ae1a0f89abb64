import concurrent.futures
from concurrent.futures import ThreadPoolExecutor
import logging as log


def run_tasks(fn, items, threads=1, name='tasks'):
    """Apply fn to every item; results come back in input order regardless of thread count"""
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    log.debug('Running %d %s on %d threads', len(items), name, threads)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(fn, item) for item in items]
        concurrent.futures.wait(futures)
        return [f.result() for f in futures]
