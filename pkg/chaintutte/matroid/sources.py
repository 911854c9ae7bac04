"""Build matroids from their JSON descriptions and summarise them."""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from pydantic import ValidationError

from ..errors import InvalidParametersError
from .core import (
    Matroid,
    check_rank_axioms,
    direct_sum,
    dual,
    is_simple,
    make_from_bases,
    make_from_rank_table,
    make_graphic,
    make_uniform,
    mask_to_subset,
)
from .lattice import flat_lattice
from .output_schemas import (
    MATROID_SOURCE_ADAPTER,
    BasesSource,
    DirectSumSource,
    DualSource,
    GraphSource,
    MatroidSummary,
    RankTableSource,
    UniformSource,
)

__all__ = [
    "matroid_from_source",
    "load_json_argument",
    "parse_matroid",
    "validate",
]


def matroid_from_source(source: Any) -> Matroid:
    """Construct a matroid from a parsed source model (or a plain dict)."""
    if isinstance(source, dict):
        try:
            source = MATROID_SOURCE_ADAPTER.validate_python(source)
        except ValidationError as e:
            raise InvalidParametersError(f"Malformed matroid description: {e}") from e
    if isinstance(source, UniformSource):
        return make_uniform(source.r, source.n)
    if isinstance(source, GraphSource):
        return make_graphic(source.vertices, source.edges)
    if isinstance(source, BasesSource):
        return make_from_bases(source.n, source.bases)
    if isinstance(source, RankTableSource):
        return make_from_rank_table(source.n, {int(k): v for k, v in source.table.items()})
    if isinstance(source, DirectSumSource):
        return direct_sum(*(matroid_from_source(p) for p in source.parts))
    if isinstance(source, DualSource):
        return dual(matroid_from_source(source.of))
    raise InvalidParametersError(f"Unknown matroid source {type(source).__name__}")


def load_json_argument(value: Union[str, Path], *, exact: bool = False) -> Any:
    """Accept inline JSON or a path to a JSON file.

    With ``exact`` set, decimal literals are read as :class:`~fractions.Fraction`.
    """
    text = str(value).strip()
    if not text.startswith(("{", "[")):
        path = Path(text).expanduser()
        if not path.exists():
            raise InvalidParametersError(f"Not inline JSON and no such file: {text}", {"path": text})
        logging.debug("Reading JSON from %s", path)
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text, parse_float=Fraction if exact else None)
    except json.JSONDecodeError as e:
        raise InvalidParametersError(f"Invalid JSON: {e}") from e


def parse_matroid(value: Union[str, Path]) -> Matroid:
    return matroid_from_source(load_json_argument(value))


def validate(M: Matroid) -> MatroidSummary:
    """Re-check the rank axioms and describe the matroid."""
    check_rank_axioms(M.n, M.rank_lookup(), matroid=M.is_matroid)
    summary = MatroidSummary(n=M.n, rank=M.matroid_rank, kind=M.kind.value)
    if M.is_matroid:
        summary.num_bases = len(M.bases())
        summary.num_flats = len(flat_lattice(M))
        summary.loops = mask_to_subset(M.loops_mask())
        summary.coloops = mask_to_subset(M.coloops_mask())
        summary.simple = is_simple(M)
    return summary
