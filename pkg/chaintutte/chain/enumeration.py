"""Enumeration of nested chains of subsets.

A chain ``S_1 ⊆ S_2 ⊆ ... ⊆ S_k`` of subsets of an ``n``-element ground set
is encoded by its level function: element ``e`` gets level ``l(e)`` and
``e ∈ S_i`` iff ``l(e) >= k - i + 1``.  Level functions are enumerated in
mixed-radix order with element 0 as the least significant digit, which makes
the index space easy to cut into contiguous chunks for the worker pool.

Each chunk accumulates dense exponent tuples into a private dict; chunk
results are merged in chunk order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ..config import check_budget, get_limits
from ..errors import InvalidParametersError
from ..matroid.core import Matroid, popcount
from ..worker_pool import chunk_ranges, run_chunks

__all__ = [
    "check_chain_budget",
    "whitney_exponents",
    "universal_exponents",
    "merge_counts",
]

Counts = Dict[Tuple[int, ...], int]


def check_chain_budget(count: int, what: str) -> None:
    check_budget(count, what, "chains")


def merge_counts(parts: List[Counts]) -> Counts:
    total: Counts = {}
    for part in parts:
        for key, c in part.items():
            total[key] = total.get(key, 0) + c
    return total


@dataclass(frozen=True)
class _ChainJob:
    n: int
    k: int
    radix: int  # digits per element
    offset: int  # level = digit + offset
    matroid_rank: int
    rank: Callable[[int], int]
    universal: bool
    group_by_first: bool


def _decode(index: int, n: int, radix: int) -> List[int]:
    digits = []
    for _ in range(n):
        index, d = divmod(index, radix)
        digits.append(d)
    return digits


def _chunk(start: int, stop: int, job: _ChainJob) -> Counts:
    n, k, radix, offset = job.n, job.k, job.radix, job.offset
    rk, r = job.rank, job.matroid_rank
    digits = _decode(start, n, radix)
    level_masks = [0] * (k + 1)
    for j, d in enumerate(digits):
        level_masks[d + offset] |= 1 << j

    acc: Counts = {}
    masks = [0] * k
    for _ in range(start, stop):
        cur = 0
        for i in range(k):
            cur |= level_masks[k - i]
            masks[i] = cur

        if job.universal:
            us, vs = [], []
            prev_size = prev_rank = 0
            for A in masks:
                size, ra = popcount(A), rk(A)
                us.append(size - prev_size)
                vs.append(ra - prev_rank)
                prev_size, prev_rank = size, ra
            key = tuple(us) + tuple(vs)
        else:
            ranks = [rk(S) for S in masks]
            key = tuple(r - x for x in ranks) + tuple(popcount(S) - x for S, x in zip(masks, ranks))
            if job.group_by_first:
                key = (masks[0],) + key
        acc[key] = acc.get(key, 0) + 1

        # odometer step
        j = 0
        while j < n:
            d = digits[j]
            bit = 1 << j
            level_masks[d + offset] &= ~bit
            if d + 1 < radix:
                digits[j] = d + 1
                level_masks[d + 1 + offset] |= bit
                break
            digits[j] = 0
            level_masks[offset] |= bit
            j += 1
    return acc


def _run(job: _ChainJob, what: str, threads: Optional[int]) -> Counts:
    total = job.radix**job.n
    check_chain_budget(total, what)
    limits = get_limits()
    chunks = chunk_ranges(total, limits.chunk_size)
    if total > limits.chunk_size:
        logging.info(
            "Enumerating %s chains (%s) on %s elements in %s chunks",
            total,
            what,
            job.n,
            len(chunks),
        )
    return merge_counts(run_chunks(_chunk, chunks, job, threads=threads))


def whitney_exponents(
    M: Matroid,
    k: int,
    *,
    group_by_first: bool = False,
    threads: Optional[int] = None,
) -> Counts:
    """Count chains by ``(a_1..a_k, b_1..b_k)`` with ``a_i = rk(M) - rk(S_i)``
    and ``b_i = |S_i| - rk(S_i)``.

    With ``group_by_first`` the key is prefixed with the mask of ``S_1``.
    """
    if k < 1:
        raise InvalidParametersError(f"Chain length must be positive here, got {k}")
    job = _ChainJob(
        n=M.n,
        k=k,
        radix=k + 1,
        offset=0,
        matroid_rank=M.matroid_rank,
        rank=M.rank_lookup(),
        universal=False,
        group_by_first=group_by_first,
    )
    return _run(job, f"W^{k}", threads)


def universal_exponents(M: Matroid, k: int, *, threads: Optional[int] = None) -> Counts:
    """Count chains ``A_1 ⊆ ... ⊆ A_k = 𝒜`` by ``(u_1..u_k, v_1..v_k)`` with
    ``u_i = |A_i - A_{i-1}|`` and ``v_i = rk(A_i) - rk(A_{i-1})``."""
    if k < 1:
        raise InvalidParametersError(f"The universal chain polynomial needs k >= 1, got {k}")
    job = _ChainJob(
        n=M.n,
        k=k,
        radix=k,
        offset=1,
        matroid_rank=M.matroid_rank,
        rank=M.rank_lookup(),
        universal=True,
        group_by_first=False,
    )
    return _run(job, f"uT^{k}", threads)
