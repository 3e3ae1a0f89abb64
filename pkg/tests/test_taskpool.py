import threading
import time

from hopfdouble.lib.util.TaskPool import run_tasks


def test_results_keep_input_order():
    def slow_square(n):
        time.sleep(0.001 * (10 - n))
        return n * n
    items = list(range(10))
    assert run_tasks(slow_square, items, threads=4) == [n * n for n in items]
    assert run_tasks(slow_square, items, threads=1) == run_tasks(slow_square, items, threads=4)


def test_single_thread_runs_inline():
    seen = set()
    run_tasks(lambda n: seen.add(threading.get_ident()), range(5), threads=1)
    assert seen == {threading.get_ident()}


def test_empty_input():
    assert run_tasks(lambda n: n, [], threads=3) == []
