# matroid/__init__.py

from .core import (
    GroundSet,
    Matroid,
    MatroidKind,
    UnionFind,
    check_rank_axioms,
    contract,
    delete,
    direct_sum,
    dual,
    is_coloop,
    is_loop,
    is_parallel,
    is_simple,
    make_boolean,
    make_complete_graph,
    make_cycle_graph,
    make_from_bases,
    make_from_rank_table,
    make_graphic,
    make_uniform,
    mask_to_subset,
    popcount,
    rank,
    require_matroid,
    restrict,
    submasks,
    subset_to_mask,
)
from .lattice import FlatLattice, flat_lattice, j_function, mobius
from .nerve import (
    SubdivisionNerve,
    corrupted_split_u24,
    hypersimplex_split_u24,
    index_key,
    nerve_from_model,
    parse_index_key,
)
from .sources import load_json_argument, matroid_from_source, parse_matroid, validate

__all__ = [
    "GroundSet",
    "Matroid",
    "MatroidKind",
    "UnionFind",
    "check_rank_axioms",
    "contract",
    "delete",
    "direct_sum",
    "dual",
    "is_coloop",
    "is_loop",
    "is_parallel",
    "is_simple",
    "make_boolean",
    "make_complete_graph",
    "make_cycle_graph",
    "make_from_bases",
    "make_from_rank_table",
    "make_graphic",
    "make_uniform",
    "mask_to_subset",
    "popcount",
    "rank",
    "require_matroid",
    "restrict",
    "submasks",
    "subset_to_mask",
    "FlatLattice",
    "flat_lattice",
    "j_function",
    "mobius",
    "SubdivisionNerve",
    "corrupted_split_u24",
    "hypersimplex_split_u24",
    "index_key",
    "nerve_from_model",
    "parse_index_key",
    "load_json_argument",
    "matroid_from_source",
    "parse_matroid",
    "validate",
]
