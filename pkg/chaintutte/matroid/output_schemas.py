from __future__ import annotations

"""JSON schemas for matroid descriptions and subdivision nerves.

A matroid source is one of::

    {"type": "uniform", "r": 2, "n": 4}
    {"type": "graph", "vertices": 4, "edges": [[0, 1], [1, 2], ...]}
    {"type": "bases", "n": 7, "bases": [[0, 1, 2], ...]}
    {"type": "rank_table", "n": 3, "table": {"0": 0, "1": 1, ...}}
    {"type": "direct_sum", "parts": [<source>, ...]}
    {"type": "dual", "of": <source>}

Rank-table keys are decimal bitmask strings.
"""

from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, TypeAdapter, field_validator

__all__ = [
    "UniformSource",
    "GraphSource",
    "BasesSource",
    "RankTableSource",
    "DirectSumSource",
    "DualSource",
    "MatroidSource",
    "MATROID_SOURCE_ADAPTER",
    "MatroidSummary",
    "NerveModel",
]


class UniformSource(BaseModel):
    type: Literal["uniform"] = "uniform"
    r: int = Field(ge=0, description="Rank")
    n: int = Field(ge=0, description="Ground set size")


class GraphSource(BaseModel):
    type: Literal["graph"] = "graph"
    vertices: int = Field(ge=0)
    edges: List[Tuple[int, int]] = Field(default_factory=list, description="Edge list; loops and multi-edges allowed.")


class BasesSource(BaseModel):
    type: Literal["bases"] = "bases"
    n: int = Field(ge=0)
    bases: List[List[int]]


class RankTableSource(BaseModel):
    type: Literal["rank_table"] = "rank_table"
    n: int = Field(ge=0)
    table: Dict[str, int] = Field(description="Decimal bitmask string to rank.")

    @field_validator("table")
    @classmethod
    def _check_keys(cls, value: Dict[str, int]) -> Dict[str, int]:
        for key in value:
            if not key.isdigit():
                raise ValueError(f"rank table key {key!r} is not a decimal bitmask")
        return value


class DirectSumSource(BaseModel):
    type: Literal["direct_sum"] = "direct_sum"
    parts: List["MatroidSource"]


class DualSource(BaseModel):
    type: Literal["dual"] = "dual"
    of: "MatroidSource"


MatroidSource = Annotated[
    Union[UniformSource, GraphSource, BasesSource, RankTableSource, DirectSumSource, DualSource],
    Field(discriminator="type"),
]

DirectSumSource.model_rebuild()
DualSource.model_rebuild()

MATROID_SOURCE_ADAPTER: TypeAdapter = TypeAdapter(MatroidSource)


class MatroidSummary(BaseModel):
    """Output of the ``validate`` sub-command."""

    n: int
    rank: int
    kind: Literal["matroid", "polymatroid"]
    valid: bool = True
    num_bases: Optional[int] = None
    num_flats: Optional[int] = None
    loops: List[int] = Field(default_factory=list)
    coloops: List[int] = Field(default_factory=list)
    simple: Optional[bool] = None


class NerveModel(BaseModel):
    big: MatroidSource
    cells: List[MatroidSource]
    intersections: Dict[str, Union[Literal["empty"], MatroidSource]] = Field(
        default_factory=dict,
        description="Sorted comma-joined 1-based cell indices to the face's matroid, or 'empty'.",
    )
