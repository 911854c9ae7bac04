import threading

import pytest

from chaintutte.worker_pool import WorkerPool, chunk_ranges, get_worker_pool, run_chunks, stop_worker_pool


def _describe(start, stop, scale):
    return [i * scale for i in range(start, stop)], threading.current_thread().name


def test_chunk_ranges():
    assert chunk_ranges(10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert chunk_ranges(3, 0) == [(0, 1), (1, 2), (2, 3)]
    assert chunk_ranges(0, 4) == []


def test_run_chunks_keeps_chunk_order():
    results = run_chunks(_describe, chunk_ranges(20, 3), 2, threads=4)
    values = [v for part, _ in results for v in part]
    assert values == [2 * i for i in range(20)]
    assert all(name.startswith("chain_worker_") for _, name in results)


def test_single_thread_runs_inline():
    results = run_chunks(_describe, chunk_ranges(6, 2), 1, threads=1)
    assert {name for _, name in results} == {threading.current_thread().name}


def test_nested_calls_run_inline():
    def outer(start, stop):
        inner = run_chunks(_describe, chunk_ranges(4, 1), 1, threads=4)
        return {name for _, name in inner} == {threading.current_thread().name}

    assert all(run_chunks(outer, chunk_ranges(4, 1), threads=2))


def test_submit_and_stats():
    pool = WorkerPool(2)
    try:
        future = pool.submit(sum, [1, 2, 3])
        assert future.result(timeout=5) == 6
        stats = pool.get_stats()
        assert stats["max_workers"] == 2
        assert stats["worker_threads"] == 2
        assert stats["total_submitted"] == 1
    finally:
        pool.stop()
    assert pool.get_stats()["worker_threads"] == 0


def test_errors_reach_the_caller():
    def boom(start, stop):
        raise ValueError("chunk failed")

    with pytest.raises(ValueError, match="chunk failed"):
        run_chunks(boom, chunk_ranges(4, 1), threads=2)


def test_global_pool_is_resized():
    first = get_worker_pool(2)
    assert get_worker_pool(2) is first
    second = get_worker_pool(3)
    assert second is not first
    assert second.max_workers == 3
    stop_worker_pool()
