"""Matroids and polymatroids given by an integer rank oracle.

Subsets of the ground set are Python ints used as bitmasks over the
canonical element order ``0..n-1``; subset iteration is always in increasing
bitmask order.  Ranks are kept in an eagerly filled dense table when the
ground set is small (see ``dense_rank_limit`` in :mod:`chaintutte.config`)
and in a lock-protected lazy cache otherwise, so a :class:`Matroid` can be
read from several worker threads at once.

Minors relabel the surviving elements to ``0..n'-1`` in their original order;
the original labels stay available on ``M.ground.labels``.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..config import check_budget, get_limits
from ..errors import (
    InvalidParametersError,
    NotAMatroidError,
    NotAPolymatroidError,
    OutOfRangeError,
    UnsupportedError,
)

__all__ = [
    "MatroidKind",
    "GroundSet",
    "Matroid",
    "UnionFind",
    "popcount",
    "mask_to_subset",
    "subset_to_mask",
    "submasks",
    "check_rank_axioms",
    "make_uniform",
    "make_boolean",
    "make_graphic",
    "make_complete_graph",
    "make_cycle_graph",
    "make_from_bases",
    "make_from_rank_table",
    "rank",
    "dual",
    "delete",
    "contract",
    "restrict",
    "direct_sum",
    "is_loop",
    "is_coloop",
    "is_parallel",
    "is_simple",
    "require_matroid",
]

SubsetLike = Union[int, Iterable[int]]


# ---------------------------------------------------------------------------
# Bitmask helpers
# ---------------------------------------------------------------------------


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_to_subset(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def subset_to_mask(elements: Iterable[int], n: int) -> int:
    mask = 0
    for e in elements:
        if not isinstance(e, int) or e < 0 or e >= n:
            raise OutOfRangeError(f"Element {e!r} is not in the ground set 0..{n - 1}", {"element": e, "n": n})
        mask |= 1 << e
    return mask


def submasks(mask: int) -> List[int]:
    """All subsets of ``mask`` in increasing bitmask order."""
    out = []
    sub = mask
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    out.reverse()
    return out


def _expander(positions: Sequence[int]) -> Callable[[int], int]:
    """Map a mask over ``range(len(positions))`` to a mask over the parent set."""

    def expand(mask: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << positions[i]
            mask >>= 1
            i += 1
        return out

    return expand


class UnionFind:
    """Union-find with path compression, counting successful unions."""

    def __init__(self, size: int):
        self.parents = list(range(size))
        self.num_components = size

    def find(self, elem: int) -> int:
        p = elem
        while p != self.parents[p]:
            p = self.parents[p]
        while elem != p:
            self.parents[elem], elem = p, self.parents[elem]
        return p

    def union(self, a: int, b: int) -> bool:
        p1, p2 = self.find(a), self.find(b)
        if p1 == p2:
            return False
        self.parents[p2] = p1
        self.num_components -= 1
        return True


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


class MatroidKind(str, Enum):
    MATROID = "matroid"
    POLYMATROID = "polymatroid"


@dataclass(frozen=True)
class GroundSet:
    labels: Tuple[Hashable, ...]

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise InvalidParametersError("Ground set labels must be distinct", {"labels": list(map(str, self.labels))})

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def canonical(cls, n: int) -> "GroundSet":
        return cls(tuple(range(n)))


class Matroid:
    """A (poly)matroid: ground set plus a memoized rank oracle.

    Immutable after construction.  ``rank`` validates its argument; hot
    loops should fetch :meth:`rank_lookup` once and call it directly.
    """

    def __init__(
        self,
        ground: GroundSet,
        rank_fn: Optional[Callable[[int], int]],
        kind: MatroidKind = MatroidKind.MATROID,
        *,
        table: Optional[Sequence[int]] = None,
        name: Optional[str] = None,
    ):
        self.ground = ground
        self.kind = MatroidKind(kind)
        self.name = name
        self._n = ground.n
        self._full = (1 << self._n) - 1
        self._lock = threading.Lock()
        self._cache: Dict[int, int] = {}
        self._rank_fn = rank_fn
        if table is not None:
            if len(table) != 1 << self._n:
                raise InvalidParametersError("Rank table has the wrong size", {"expected": 1 << self._n, "got": len(table)})
            self._table: Optional[List[int]] = list(table)
        elif self._n <= get_limits().dense_rank_limit:
            assert rank_fn is not None
            self._table = [rank_fn(m) for m in range(1 << self._n)]
        else:
            if rank_fn is None:
                raise InvalidParametersError("A rank oracle is required without a rank table")
            self._table = None
            logging.debug("Matroid %s on %s elements uses a lazy rank cache", name or "", self._n)
        self._matroid_rank = self._rank(self._full)

    # -- rank access --------------------------------------------------------
    def _lazy_rank(self, mask: int) -> int:
        with self._lock:
            hit = self._cache.get(mask)
        if hit is not None:
            return hit
        value = self._rank_fn(mask)  # type: ignore[misc]
        with self._lock:
            self._cache[mask] = value
        return value

    def _rank(self, mask: int) -> int:
        if self._table is not None:
            return self._table[mask]
        return self._lazy_rank(mask)

    def rank_lookup(self) -> Callable[[int], int]:
        """Unchecked rank function for inner loops."""
        if self._table is not None:
            return self._table.__getitem__
        return self._lazy_rank

    def check_mask(self, mask: int) -> int:
        if not isinstance(mask, int) or mask < 0 or mask & ~self._full:
            raise OutOfRangeError(f"Subset {mask!r} is not contained in the ground set", {"subset": mask, "n": self._n})
        return mask

    def rank(self, subset: SubsetLike) -> int:
        mask = subset if isinstance(subset, int) else subset_to_mask(subset, self._n)
        return self._rank(self.check_mask(mask))

    # -- basic data ---------------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def full_mask(self) -> int:
        return self._full

    @property
    def matroid_rank(self) -> int:
        return self._matroid_rank

    @property
    def is_matroid(self) -> bool:
        return self.kind is MatroidKind.MATROID

    def corank(self, subset: SubsetLike) -> int:
        return self._matroid_rank - self.rank(subset)

    def nullity(self, subset: SubsetLike) -> int:
        mask = subset if isinstance(subset, int) else subset_to_mask(subset, self._n)
        return popcount(mask) - self.rank(mask)

    def closure(self, subset: SubsetLike) -> int:
        mask = subset if isinstance(subset, int) else subset_to_mask(subset, self._n)
        r = self.rank(mask)
        out = mask
        for e in range(self._n):
            bit = 1 << e
            if not mask & bit and self._rank(mask | bit) == r:
                out |= bit
        return out

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == popcount(mask)

    def is_spanning(self, mask: int) -> bool:
        return self.rank(mask) == self._matroid_rank

    def rank_table(self) -> List[int]:
        if self._table is not None:
            return list(self._table)
        check_budget(1 << self._n, "A rank table", "subsets")
        return [self._rank(m) for m in range(1 << self._n)]

    def same_rank_table(self, other: "Matroid") -> bool:
        return self._n == other._n and self.rank_table() == other.rank_table()

    # -- derived families ---------------------------------------------------
    def independent_sets(self) -> List[int]:
        check_budget(1 << self._n, "Listing independent sets", "subsets")
        rk = self.rank_lookup()
        return [m for m in range(1 << self._n) if rk(m) == popcount(m)]

    def bases(self) -> List[int]:
        r = self._matroid_rank
        return [m for m in self.independent_sets() if popcount(m) == r]

    def spanning_sets(self) -> List[int]:
        check_budget(1 << self._n, "Listing spanning sets", "subsets")
        rk = self.rank_lookup()
        r = self._matroid_rank
        return [m for m in range(1 << self._n) if rk(m) == r]

    def loops_mask(self) -> int:
        return sum(1 << e for e in range(self._n) if self._rank(1 << e) == 0)

    def coloops_mask(self) -> int:
        r = self._matroid_rank
        return sum(1 << e for e in range(self._n) if self._rank(self._full & ~(1 << e)) == r - 1)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Matroid{label} n={self._n} rank={self._matroid_rank} kind={self.kind.value}>"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def check_rank_axioms(n: int, rk: Callable[[int], int], *, matroid: bool = False) -> None:
    """Verify normalisation, monotonicity and submodularity.

    Local checks suffice: ``rk(S) <= rk(S+e)`` and
    ``rk(S+e) + rk(S+f) >= rk(S) + rk(S+e+f)`` for all ``S`` and ``e, f``
    outside ``S``.  Raises :class:`NotAPolymatroidError` naming the
    offending pair of subsets.
    """
    check_budget((n * n + 1) << n, "The rank-axiom check", "rank queries")
    if rk(0) != 0:
        raise NotAPolymatroidError("rk(empty set) must be 0", {"rank": rk(0)})
    for s in range(1 << n):
        rs = rk(s)
        if rs < 0:
            raise NotAPolymatroidError(f"Negative rank on subset {s}", {"subset": s, "rank": rs})
        outside = [1 << e for e in range(n) if not s & (1 << e)]
        for bit in outside:
            if rk(s | bit) < rs:
                raise NotAPolymatroidError(
                    "Rank is not monotone",
                    {"pair": [s, s | bit], "ranks": [rs, rk(s | bit)]},
                )
        for b1, b2 in combinations(outside, 2):
            x, y = s | b1, s | b2
            if rk(x) + rk(y) < rs + rk(x | y):
                raise NotAPolymatroidError(
                    "Rank is not submodular",
                    {"pair": [x, y], "ranks": [rk(x), rk(y), rs, rk(x | y)]},
                )
    if matroid:
        for e in range(n):
            if rk(1 << e) > 1:
                raise NotAMatroidError(f"Element {e} has rank {rk(1 << e)} > 1", {"element": e})


def require_matroid(M: Matroid, what: str) -> None:
    if not M.is_matroid:
        raise UnsupportedError(f"{what} is only defined for matroids, not polymatroids")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def make_uniform(r: int, n: int) -> Matroid:
    if n < 0 or r < 0 or r > n:
        raise InvalidParametersError(f"Uniform matroid needs 0 <= r <= n, got r={r}, n={n}", {"r": r, "n": n})
    return Matroid(GroundSet.canonical(n), lambda m: min(popcount(m), r), name=f"U_{r},{n}")


def make_boolean(n: int) -> Matroid:
    M = make_uniform(n, n)
    M.name = f"B_{n}"
    return M


def make_graphic(n_vertices: int, edges: Sequence[Sequence[int]]) -> Matroid:
    """Cycle matroid of a multigraph; edge ``i`` is ground element ``i``.

    ``rk(S)`` is the size of a spanning forest of the edges in ``S``, so a
    non-loop edge has rank 1 and a graph loop rank 0.
    """
    if n_vertices < 0:
        raise InvalidParametersError(f"Vertex count must be non-negative, got {n_vertices}")
    pairs: List[Tuple[int, int]] = []
    for i, edge in enumerate(edges):
        if len(edge) != 2:
            raise InvalidParametersError(f"Edge {i} must have two endpoints", {"edge": list(edge)})
        u, v = edge
        for w in (u, v):
            if not isinstance(w, int) or w < 0 or w >= n_vertices:
                raise OutOfRangeError(f"Edge {i} uses vertex {w!r} outside 0..{n_vertices - 1}", {"edge": i})
        pairs.append((u, v))

    def rank_fn(mask: int) -> int:
        uf = UnionFind(n_vertices)
        return sum(1 for e in mask_to_subset(mask) if uf.union(*pairs[e]))

    return Matroid(GroundSet.canonical(len(pairs)), rank_fn, name="graphic")


def make_complete_graph(n_vertices: int) -> Matroid:
    M = make_graphic(n_vertices, list(combinations(range(n_vertices), 2)))
    M.name = f"K_{n_vertices}"
    return M


def make_cycle_graph(n_vertices: int) -> Matroid:
    if n_vertices < 1:
        raise InvalidParametersError("A cycle needs at least one vertex")
    M = make_graphic(n_vertices, [(i, (i + 1) % n_vertices) for i in range(n_vertices)])
    M.name = f"C_{n_vertices}"
    return M


def make_from_bases(n: int, bases: Iterable[SubsetLike]) -> Matroid:
    """Matroid whose bases are exactly ``bases``; checks basis exchange."""
    masks = sorted({b if isinstance(b, int) else subset_to_mask(b, n) for b in bases})
    if not masks:
        raise InvalidParametersError("A matroid needs at least one basis", {"bases": []})
    full = (1 << n) - 1
    for b in masks:
        if b & ~full:
            raise OutOfRangeError(f"Basis {b} is not contained in the ground set", {"basis": b})
    r = popcount(masks[0])
    if any(popcount(b) != r for b in masks):
        raise InvalidParametersError("All bases must have the same size", {"sizes": sorted({popcount(b) for b in masks})})
    basis_set = set(masks)
    for b1 in masks:
        for b2 in masks:
            for x in mask_to_subset(b1 & ~b2):
                if not any((b1 & ~(1 << x)) | (1 << y) in basis_set for y in mask_to_subset(b2 & ~b1)):
                    raise NotAMatroidError(
                        "Basis exchange fails",
                        {"bases": [mask_to_subset(b1), mask_to_subset(b2)], "element": x},
                    )

    if n <= get_limits().dense_rank_limit:
        # rank[S] = |S| when S lies in a basis, else max over S - e
        independent = [False] * (1 << n)
        for b in masks:
            independent[b] = True
        for m in range((1 << n) - 1, -1, -1):
            if independent[m]:
                continue
            independent[m] = any(independent[m | (1 << e)] for e in range(n) if not m & (1 << e))
        table = [0] * (1 << n)
        for m in range(1 << n):
            if independent[m]:
                table[m] = popcount(m)
            else:
                table[m] = max(table[m & ~(1 << e)] for e in mask_to_subset(m))
        return Matroid(GroundSet.canonical(n), None, table=table, name="bases")
    return Matroid(GroundSet.canonical(n), lambda m: max(popcount(m & b) for b in masks), name="bases")


def make_from_rank_table(n: int, table: Union[Mapping[int, int], Sequence[int]]) -> Matroid:
    """Validate a full rank table; the kind is polymatroid if a singleton has rank > 1."""
    size = 1 << n
    if isinstance(table, Mapping):
        extra = [m for m in table if not isinstance(m, int) or m < 0 or m >= size]
        if extra:
            raise OutOfRangeError("Rank table has keys outside the ground set", {"keys": extra[:5]})
        if len(table) < size:
            # only len(table) keys exist, so the scan stops within len(table) + 1 steps
            first = next(m for m in range(size) if m not in table)
            raise InvalidParametersError(
                f"Rank table is missing {size - len(table)} subsets", {"first_missing": first}
            )
        values = [int(table[m]) for m in range(size)]
    else:
        if len(table) != size:
            raise InvalidParametersError(f"Rank table must have {size} entries, got {len(table)}")
        values = [int(v) for v in table]
    check_rank_axioms(n, values.__getitem__)
    kind = MatroidKind.POLYMATROID if any(values[1 << e] > 1 for e in range(n)) else MatroidKind.MATROID
    return Matroid(GroundSet.canonical(n), None, kind, table=values, name="rank_table")


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def rank(M: Matroid, subset: SubsetLike) -> int:
    return M.rank(subset)


def _as_mask(M: Matroid, subset: SubsetLike) -> int:
    mask = subset if isinstance(subset, int) else subset_to_mask(subset, M.n)
    return M.check_mask(mask)


def dual(M: Matroid) -> Matroid:
    require_matroid(M, "The dual")
    rk = M.rank_lookup()
    r, full = M.matroid_rank, M.full_mask
    return Matroid(
        M.ground,
        lambda x: popcount(x) - r + rk(full & ~x),
        name=f"{M.name}*" if M.name else None,
    )


def _minor(M: Matroid, keep: int, shift: int) -> Matroid:
    """Matroid on ``keep`` with rank ``rk(A | shift) - rk(shift)``."""
    positions = mask_to_subset(keep)
    expand = _expander(positions)
    rk = M.rank_lookup()
    base = rk(shift)
    labels = tuple(M.ground.labels[i] for i in positions)
    return Matroid(GroundSet(labels), lambda m: rk(expand(m) | shift) - base, M.kind)


def delete(M: Matroid, subset: SubsetLike) -> Matroid:
    S = _as_mask(M, subset)
    return _minor(M, M.full_mask & ~S, 0)


def contract(M: Matroid, subset: SubsetLike) -> Matroid:
    S = _as_mask(M, subset)
    return _minor(M, M.full_mask & ~S, S)


def restrict(M: Matroid, subset: SubsetLike) -> Matroid:
    S = _as_mask(M, subset)
    return _minor(M, S, 0)


def direct_sum(*parts: Matroid) -> Matroid:
    """Direct sum; elements of later summands follow those of earlier ones."""
    offsets, total = [], 0
    for P in parts:
        offsets.append(total)
        total += P.n
    lookups = [P.rank_lookup() for P in parts]
    pieces = [(off, P.full_mask, rk) for off, P, rk in zip(offsets, parts, lookups)]

    def rank_fn(mask: int) -> int:
        return sum(rk((mask >> off) & full) for off, full, rk in pieces)

    kind = MatroidKind.POLYMATROID if any(not P.is_matroid for P in parts) else MatroidKind.MATROID
    name = " + ".join(P.name or "M" for P in parts) if parts else "empty"
    return Matroid(GroundSet.canonical(total), rank_fn, kind, name=name)


def _check_element(M: Matroid, a: int) -> int:
    if not isinstance(a, int) or a < 0 or a >= M.n:
        raise OutOfRangeError(f"Element {a!r} is not in the ground set 0..{M.n - 1}", {"element": a})
    return a


def is_loop(M: Matroid, a: int) -> bool:
    return M.rank(1 << _check_element(M, a)) == 0


def is_coloop(M: Matroid, a: int) -> bool:
    return M.rank(M.full_mask & ~(1 << _check_element(M, a))) == M.matroid_rank - 1


def is_parallel(M: Matroid, a: int, b: int) -> bool:
    _check_element(M, a)
    _check_element(M, b)
    return a != b and not is_loop(M, a) and not is_loop(M, b) and M.rank((1 << a) | (1 << b)) == 1


def is_simple(M: Matroid) -> bool:
    if M.loops_mask():
        return False
    return not any(M.rank((1 << a) | (1 << b)) == 1 for a, b in combinations(range(M.n), 2))
