"""Nerves of matroid-polytope subdivisions.

A nerve lists the top-dimensional cells ``P_1..P_s`` of a subdivision and,
for every index set ``J`` with ``|J| >= 2``, the matroid of the common face
``P_J`` or ``None`` when the cells do not meet.  Index sets are 1-based and
written ``"1,2"`` in JSON.  Faces are supplied by the caller; nothing here
does polytope geometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from ..errors import NerveError
from .core import Matroid, make_from_bases, make_uniform
from .output_schemas import NerveModel
from .sources import matroid_from_source

__all__ = [
    "SubdivisionNerve",
    "index_key",
    "parse_index_key",
    "nerve_from_model",
    "hypersimplex_split_u24",
    "corrupted_split_u24",
]

IndexSet = FrozenSet[int]


def index_key(J: IndexSet) -> str:
    return ",".join(str(j) for j in sorted(J))


def parse_index_key(key: str) -> IndexSet:
    try:
        J = frozenset(int(part) for part in key.split(","))
    except ValueError:
        raise NerveError(f"Bad intersection key {key!r}", {"key": key}) from None
    if not J:
        raise NerveError("Intersection keys must be non-empty", {"key": key})
    return J


@dataclass
class SubdivisionNerve:
    cells: List[Matroid]
    intersections: Dict[IndexSet, Optional[Matroid]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for J in self.intersections:
            if not J or min(J) < 1 or max(J) > len(self.cells):
                raise NerveError(f"Intersection {index_key(J)} names a missing cell", {"key": index_key(J)})

    @property
    def size(self) -> int:
        return len(self.cells)

    def face(self, J: IndexSet) -> Optional[Matroid]:
        """Matroid of the face ``P_J``; ``None`` if empty."""
        J = frozenset(J)
        if J in self.intersections:
            return self.intersections[J]
        if len(J) == 1:
            return self.cells[next(iter(J)) - 1]
        # an unlisted set is empty when one of its subfaces is
        for smaller in self.index_sets(max_size=len(J) - 1):
            if smaller <= J and self.face(smaller) is None:
                return None
        raise NerveError(f"Nerve does not list the intersection {index_key(J)}", {"key": index_key(J)})

    def index_sets(self, max_size: Optional[int] = None) -> Iterator[IndexSet]:
        top = self.size if max_size is None else max_size
        for size in range(1, top + 1):
            for J in combinations(range(1, self.size + 1), size):
                yield frozenset(J)

    def faces(self) -> Iterator[Tuple[IndexSet, Optional[Matroid]]]:
        for J in self.index_sets():
            yield J, self.face(J)

    def validate(self) -> None:
        """Check singleton consistency and basis containment between faces."""
        for i, cell in enumerate(self.cells, start=1):
            listed = self.intersections.get(frozenset({i}), cell)
            if listed is None or not listed.same_rank_table(cell):
                raise NerveError(f"Intersection {i} does not equal cell {i}", {"cell": i})
        faces = dict(self.faces())
        for J, MJ in faces.items():
            if MJ is None:
                continue
            bases_J = set(MJ.bases())
            for I, MI in faces.items():
                if I < J:
                    if MI is None:
                        raise NerveError(
                            f"Face {index_key(J)} is non-empty but its subface {index_key(I)} is empty",
                            {"face": index_key(J), "subface": index_key(I)},
                        )
                    if MI.n != MJ.n or not bases_J <= set(MI.bases()):
                        raise NerveError(
                            f"Bases of face {index_key(J)} are not bases of {index_key(I)}",
                            {"face": index_key(J), "subface": index_key(I)},
                        )


def nerve_from_model(model: NerveModel) -> Tuple[Matroid, SubdivisionNerve]:
    big = matroid_from_source(model.big)
    cells = [matroid_from_source(c) for c in model.cells]
    intersections: Dict[IndexSet, Optional[Matroid]] = {}
    for key, value in model.intersections.items():
        intersections[parse_index_key(key)] = None if value == "empty" else matroid_from_source(value)
    return big, SubdivisionNerve(cells, intersections)


# ---------------------------------------------------------------------------
# The two-cell split of the hypersimplex Delta(2, 4)
# ---------------------------------------------------------------------------

_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def hypersimplex_split_u24() -> Tuple[Matroid, SubdivisionNerve]:
    """Split of ``Delta(2,4)`` along ``x_0 + x_1 = 1``.

    Cell 1 (``x_0 + x_1 <= 1``) drops the vertex ``e_0 + e_1``, cell 2 drops
    ``e_2 + e_3``; they meet in the square of bases with exactly one of
    ``0, 1``, the matroid ``U_{1,2} + U_{1,2}``.
    """
    big = make_uniform(2, 4)
    cell1 = make_from_bases(4, [p for p in _PAIRS if p != (0, 1)])
    cell2 = make_from_bases(4, [p for p in _PAIRS if p != (2, 3)])
    face = make_from_bases(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    return big, SubdivisionNerve([cell1, cell2], {frozenset({1, 2}): face})


def corrupted_split_u24() -> Tuple[Matroid, SubdivisionNerve]:
    """The same nerve with cell 1 replaced by the whole of ``U_{2,4}``."""
    big, nerve = hypersimplex_split_u24()
    return big, SubdivisionNerve([make_uniform(2, 4), nerve.cells[1]], dict(nerve.intersections))
