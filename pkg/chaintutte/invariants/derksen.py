"""Derksen's G-invariant as a multiset of rank vectors.

Every ordering ``e_1, ..., e_n`` of the ground set gives a complete chain
``X_i = {e_1..e_i}`` and the rank vector ``(rk X_i - rk X_{i-1})_i``.  The
basis elements ``U_r`` are kept as formal labels.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, Optional, Tuple

from ..chain.tutte import chain_whitney, variable_block
from ..config import get_limits
from ..errors import BudgetExceededError, InvalidParametersError
from ..matroid.core import Matroid
from ..polynomial.laurent import to_dense
from ..worker_pool import chunk_ranges, run_chunks
from .output_schemas import GInvariantModel

__all__ = [
    "GInvariant",
    "g_invariant",
    "g_from_top_tutte",
]

RankVector = Tuple[int, ...]


@dataclass(frozen=True)
class GInvariant:
    """Integer combination of rank vectors; zero entries are dropped."""

    n: int
    counts: Dict[RankVector, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for vector, c in self.counts.items():
            if len(vector) != self.n:
                raise InvalidParametersError(
                    f"Rank vector {vector} has length {len(vector)}, expected {self.n}",
                    {"vector": list(vector)},
                )
            if c:
                cleaned[tuple(vector)] = c
        object.__setattr__(self, "counts", cleaned)

    @classmethod
    def zero(cls, n: int) -> "GInvariant":
        return cls(n, {})

    def _check_same(self, other: "GInvariant") -> None:
        if self.n != other.n:
            raise InvalidParametersError(f"G-invariants on {self.n} and {other.n} elements cannot be combined")

    def __add__(self, other: object) -> "GInvariant":
        if not isinstance(other, GInvariant):
            return NotImplemented
        self._check_same(other)
        acc = dict(self.counts)
        for vector, c in other.counts.items():
            acc[vector] = acc.get(vector, 0) + c
        return GInvariant(self.n, acc)

    def __neg__(self) -> "GInvariant":
        return GInvariant(self.n, {v: -c for v, c in self.counts.items()})

    def __sub__(self, other: object) -> "GInvariant":
        if not isinstance(other, GInvariant):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: object) -> "GInvariant":
        if not isinstance(scalar, int) or isinstance(scalar, bool):
            return NotImplemented
        return GInvariant(self.n, {v: scalar * c for v, c in self.counts.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GInvariant):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.counts.items())))

    def total(self) -> int:
        return sum(self.counts.values())

    def is_matroidal(self, rank: int) -> bool:
        """Every vector is 0/1 with ``rank`` ones."""
        return all(set(v) <= {0, 1} and sum(v) == rank for v in self.counts)

    def to_model(self) -> GInvariantModel:
        return GInvariantModel(
            n=self.n,
            counts={",".join(str(x) for x in v): c for v, c in sorted(self.counts.items(), reverse=True)},
        )

    def to_dict(self) -> Dict:
        return self.to_model().model_dump()

    @classmethod
    def from_model(cls, model: GInvariantModel) -> "GInvariant":
        counts = {}
        for key, c in model.counts.items():
            vector = tuple(int(part) for part in key.split(",")) if key else ()
            counts[vector] = counts.get(vector, 0) + c
        return cls(model.n, counts)


def _permutation_chunk(start: int, stop: int, n: int, rk) -> Dict[RankVector, int]:
    acc: Dict[RankVector, int] = {}
    for first in range(start, stop):
        others = [e for e in range(n) if e != first]
        head = rk(1 << first)
        for order in permutations(others):
            vector = [head]
            mask = 1 << first
            prev = head
            for e in order:
                mask |= 1 << e
                r = rk(mask)
                vector.append(r - prev)
                prev = r
            key = tuple(vector)
            acc[key] = acc.get(key, 0) + 1
    return acc


def g_invariant(M: Matroid, *, threads: Optional[int] = None) -> GInvariant:
    """Enumerate all ``n!`` orderings, split by first element across the pool."""
    limit = get_limits().max_perm_n
    if M.n > limit:
        raise BudgetExceededError(
            f"The G-invariant of a {M.n}-element matroid needs {M.n}! orderings; the limit is n <= {limit}",
            {"n": M.n, "max_perm_n": limit},
        )
    if M.n == 0:
        return GInvariant(0, {(): 1})
    parts = run_chunks(_permutation_chunk, chunk_ranges(M.n, 1), M.n, M.rank_lookup(), threads=threads)
    acc: Dict[RankVector, int] = {}
    for part in parts:
        for vector, c in part.items():
            acc[vector] = acc.get(vector, 0) + c
    return GInvariant(M.n, acc)


def g_from_top_tutte(M: Matroid, *, threads: Optional[int] = None) -> GInvariant:
    """Read the G-invariant off ``W^n`` with ``n = |E|``.

    A monomial ``prod a_i^{p_i} b_i^{q_i}`` with ``p_i - q_i = rk M - i`` for
    all ``i`` comes from chains with ``|S_i| = i``, i.e. complete chains, and
    its rank vector is ``(rk M - p_1, p_1 - p_2, ..., p_{n-1} - p_n)``.
    """
    n = M.n
    limit = get_limits().max_top_tutte_n
    if n > limit:
        raise BudgetExceededError(
            f"W^{n} of a {n}-element matroid is over the limit n <= {limit}",
            {"n": n, "max_top_tutte_n": limit},
        )
    if n == 0:
        return GInvariant(0, {(): 1})
    r = M.matroid_rank
    W = chain_whitney(M, n, threads=threads)
    acc: Dict[RankVector, int] = {}
    for exps, c in to_dense(W.poly, variable_block("whitney", n)).items():
        p, q = exps[:n], exps[n:]
        if any(p[i] - q[i] != r - (i + 1) for i in range(n)):
            continue
        vector = (r - p[0],) + tuple(p[i - 1] - p[i] for i in range(1, n))
        acc[vector] = acc.get(vector, 0) + c
    logging.debug("Read %s rank vectors off W^%s", len(acc), n)
    return GInvariant(n, acc)
