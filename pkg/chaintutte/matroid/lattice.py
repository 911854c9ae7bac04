"""Lattice of flats of a matroid, with Möbius and J-function values.

Flats are stored as bitmasks sorted by ``(rank, mask)``, which is a linear
extension of containment.  Möbius values for every comparable pair are
computed when the lattice is built; J-function tables are filled per middle
flat on first use under a lock, so a lattice can be shared between threads.
"""

from __future__ import annotations

import logging
import threading
from typing import Dict, Iterator, List, Tuple

from ..config import check_budget
from ..errors import DomainError
from .core import Matroid, mask_to_subset, require_matroid

__all__ = [
    "FlatLattice",
    "flat_lattice",
    "mobius",
    "j_function",
]


class FlatLattice:
    def __init__(self, M: Matroid):
        require_matroid(M, "The lattice of flats")
        n = M.n
        check_budget((n + 1) << n, "The lattice of flats", "rank queries")
        self.matroid = M
        rk = M.rank_lookup()

        found = set()
        for mask in range(1 << n):
            r = rk(mask)
            closed = mask
            for e in range(n):
                bit = 1 << e
                if not mask & bit and rk(mask | bit) == r:
                    closed |= bit
            found.add(closed)
        self.flats: List[int] = sorted(found, key=lambda f: (rk(f), f))
        self._index: Dict[int, int] = {f: i for i, f in enumerate(self.flats)}
        self._ranks: List[int] = [rk(f) for f in self.flats]
        self._top_rank = M.matroid_rank

        count = len(self.flats)
        # up[i]: indices j >= i with flats[i] contained in flats[j]
        self._up: List[List[int]] = [
            [j for j in range(i, count) if self.flats[i] & ~self.flats[j] == 0] for i in range(count)
        ]
        self._down: List[List[int]] = [[] for _ in range(count)]
        for i in range(count):
            for j in self._up[i]:
                self._down[j].append(i)

        self._mobius: Dict[Tuple[int, int], int] = {}
        for i in range(count):
            row: Dict[int, int] = {}
            for j in self._up[i]:
                if j == i:
                    row[j] = 1
                else:
                    row[j] = -sum(row[k] for k in self._down[j] if k in row and k != j)
            for j, value in row.items():
                self._mobius[(i, j)] = value

        self._j_tables: Dict[int, Dict[Tuple[int, int], int]] = {}
        self._j_lock = threading.Lock()
        logging.debug("Built lattice of flats with %s flats", count)

    # -- structure ------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self) -> Iterator[int]:
        return iter(self.flats)

    @property
    def bottom(self) -> int:
        return self.flats[0]

    @property
    def top(self) -> int:
        return self.flats[-1]

    def index(self, flat: int) -> int:
        try:
            return self._index[flat]
        except KeyError:
            raise DomainError(f"{mask_to_subset(flat)} is not a flat", {"subset": flat}) from None

    def is_flat(self, mask: int) -> bool:
        return mask in self._index

    def rank(self, flat: int) -> int:
        return self._ranks[self.index(flat)]

    def corank(self, flat: int) -> int:
        return self._top_rank - self.rank(flat)

    def leq(self, x: int, y: int) -> bool:
        self.index(x)
        self.index(y)
        return x & ~y == 0

    def interval(self, x: int, y: int) -> List[int]:
        i, j = self.index(x), self.index(y)
        below = set(self._down[j])
        return [self.flats[k] for k in self._up[i] if k in below]

    def join(self, subset: int) -> int:
        """Smallest flat containing ``subset`` (its closure)."""
        return self.matroid.closure(subset)

    def upper(self, x: int) -> List[int]:
        return [self.flats[j] for j in self._up[self.index(x)]]

    def lower(self, y: int) -> List[int]:
        return [self.flats[i] for i in self._down[self.index(y)]]

    def three_flags(self) -> Iterator[Tuple[int, int, int]]:
        for i in range(len(self.flats)):
            for j in self._up[i]:
                for k in self._up[j]:
                    yield self.flats[i], self.flats[j], self.flats[k]

    # -- Möbius ---------------------------------------------------------------
    def mobius(self, x: int, y: int) -> int:
        i, j = self.index(x), self.index(y)
        value = self._mobius.get((i, j))
        if value is None:
            raise DomainError(
                f"Flats {mask_to_subset(x)} and {mask_to_subset(y)} are not comparable",
                {"x": x, "y": y},
            )
        return value

    # -- J-function -----------------------------------------------------------
    def _j_table(self, iy: int) -> Dict[Tuple[int, int], int]:
        with self._j_lock:
            table = self._j_tables.get(iy)
            if table is not None:
                return table
            lows = sorted(self._down[iy], reverse=True)
            highs = sorted(self._up[iy])
            low_set, high_set = set(lows), set(highs)
            table = {}
            # x descending, z ascending: every (a, b) with x <= a, b <= z is ready
            for ix in lows:
                for iz in highs:
                    total = 0
                    for ia in self._up[ix]:
                        if ia not in low_set:
                            continue
                        for ib in self._down[iz]:
                            if ib not in high_set or (ia, ib) == (ix, iz):
                                continue
                            total += table[(ia, ib)]
                    delta = 1 if ix == iy == iz else 0
                    table[(ix, iz)] = delta - total
            self._j_tables[iy] = table
            return table

    def j_function(self, x: int, y: int, z: int) -> int:
        ix, iy, iz = self.index(x), self.index(y), self.index(z)
        if (ix, iy) not in self._mobius or (iy, iz) not in self._mobius:
            raise DomainError(
                "J is only defined on flags x <= y <= z",
                {"x": x, "y": y, "z": z},
            )
        return self._j_table(iy)[(ix, iz)]


def flat_lattice(M: Matroid) -> FlatLattice:
    return FlatLattice(M)


def mobius(L: FlatLattice, x: int, y: int) -> int:
    return L.mobius(x, y)


def j_function(L: FlatLattice, x: int, y: int, z: int) -> int:
    return L.j_function(x, y, z)
