"""Worker pool for the exponential enumerations.

- Uses a fixed pool of worker threads instead of spawning a new thread for
  every chunk of chains.
- Workers block on ``queue.get`` so there is no sleep/poll loop.
- Shutdown is handled by pushing sentinel values into the queue allowing
  workers to exit promptly.
- :func:`run_chunks` returns chunk results in submission order, so callers
  that merge them sequentially get the same answer for any worker count.
"""

from __future__ import annotations

import logging
import queue
import threading
from concurrent.futures import Future
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from .config import get_limits

__all__ = [
    "PoolTask",
    "WorkerPool",
    "get_worker_pool",
    "stop_worker_pool",
    "chunk_ranges",
    "run_chunks",
]

T = TypeVar("T")

_SHUTDOWN = "__shutdown__"


@dataclass
class PoolTask:
    task_id: str
    func: Callable
    args: tuple = field(default_factory=tuple)
    kwargs: dict = field(default_factory=dict)
    future: Future = field(default_factory=Future)


class WorkerPool:
    """Runs submitted callables on a fixed set of daemon threads."""

    def __init__(self, max_workers: int):
        self.queue: queue.Queue[PoolTask] = queue.Queue()
        self.max_workers = max(1, max_workers)
        self.lock = threading.Lock()
        self.workers: list[threading.Thread] = []
        self.running = False
        self._task_counter = 0

    # ------------------------------------------------------------------
    # Lifecycle management
    # ------------------------------------------------------------------
    def start(self) -> None:
        if self.running:
            return
        self.running = True
        for i in range(self.max_workers):
            t = threading.Thread(target=self._worker, name=f"chain_worker_{i}", daemon=True)
            t.start()
            self.workers.append(t)
        logging.debug("Worker pool started with %s threads", self.max_workers)

    def stop(self) -> None:
        """Gracefully stop all worker threads."""
        if not self.running:
            return
        self.running = False
        for _ in self.workers:
            self.queue.put(PoolTask(task_id=_SHUTDOWN, func=lambda: None))
        for t in self.workers:
            t.join()
        self.workers = []
        logging.debug("Worker pool stopped")

    # ------------------------------------------------------------------
    # Internal worker logic
    # ------------------------------------------------------------------
    def _worker(self) -> None:
        while True:
            task = self.queue.get()
            if task.task_id == _SHUTDOWN:
                self.queue.task_done()
                break
            self._execute_task(task)
            self.queue.task_done()

    def _execute_task(self, task: PoolTask) -> None:
        if not task.future.set_running_or_notify_cancel():
            return
        try:
            result = task.func(*task.args, **task.kwargs)
            task.future.set_result(result)
        except BaseException as e:  # noqa: BLE001
            logging.error("Error executing pool task %s: %s", task.task_id, e)
            task.future.set_exception(e)

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------
    def submit(self, func: Callable, *args, **kwargs) -> Future:
        """Queue ``func(*args, **kwargs)`` and return its ``Future``."""
        if not self.running:
            self.start()
        with self.lock:
            self._task_counter += 1
            task_id = f"task_{self._task_counter}"
        task = PoolTask(task_id=task_id, func=func, args=args, kwargs=kwargs)
        self.queue.put(task)
        return task.future

    def get_stats(self) -> Dict[str, Any]:
        with self.lock:
            return {
                "queue_size": self.queue.qsize(),
                "worker_threads": len(self.workers),
                "max_workers": self.max_workers,
                "total_submitted": self._task_counter,
            }


# -------------------------------------------------------------------------
# Global helpers
# -------------------------------------------------------------------------

_pool: Optional[WorkerPool] = None
_pool_lock = threading.Lock()


def get_worker_pool(threads: Optional[int] = None) -> WorkerPool:
    """Get or create the global pool, resizing it if the thread count changed."""
    global _pool
    wanted = threads or get_limits().threads
    with _pool_lock:
        if _pool is not None and _pool.max_workers != wanted:
            _pool.stop()
            _pool = None
        if _pool is None:
            _pool = WorkerPool(wanted)
            _pool.start()
        return _pool


def stop_worker_pool() -> None:
    global _pool
    with _pool_lock:
        if _pool:
            _pool.stop()
            _pool = None


def chunk_ranges(total: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Split ``range(total)`` into contiguous ``(start, stop)`` pieces."""
    chunk_size = max(1, chunk_size)
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def run_chunks(
    func: Callable[..., T],
    chunks: Sequence[Tuple[int, int]],
    *args: Any,
    threads: Optional[int] = None,
) -> List[T]:
    """Evaluate ``func(start, stop, *args)`` for every chunk, in chunk order.

    With one thread, a single chunk, or when called from inside a pool worker
    (nested enumerations would otherwise wait on their own pool), the work
    runs inline on the caller's thread.
    """
    threads = threads or get_limits().threads
    nested = threading.current_thread().name.startswith("chain_worker_")
    if threads <= 1 or len(chunks) <= 1 or nested:
        return [func(start, stop, *args) for start, stop in chunks]
    pool = get_worker_pool(threads)
    futures: Iterable[Future] = [pool.submit(func, start, stop, *args) for start, stop in chunks]
    return [f.result() for f in futures]
