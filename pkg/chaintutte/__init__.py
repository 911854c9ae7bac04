"""chaintutte package."""

# Import and expose the main functionality from the subpackages
from .chain import (
    ChainTuttePoly,
    chain_tutte,
    chain_tutte_recursive,
    chain_whitney,
    evaluate_chain,
    specialize_down,
    split_chain_tutte,
    tutte_grothendieck_witness,
    universal_chain_tutte,
    universal_to_whitney_check,
)
from .config import ComputeLimits, get_limits, load_limits, set_limits
from .errors import ChainTutteError
from .invariants import (
    GInvariant,
    characteristic_poly,
    classical_tutte,
    constant_evaluations,
    expected_codim,
    ford_a,
    ford_s_poly,
    g_from_top_tutte,
    g_invariant,
    j_mobius_poly,
    mobius_poly,
    mobius_poly_recursive,
    opposite_char_poly,
    opposite_char_poly_recursive,
)
from .matroid import (
    FlatLattice,
    GroundSet,
    Matroid,
    SubdivisionNerve,
    contract,
    delete,
    direct_sum,
    dual,
    flat_lattice,
    is_coloop,
    is_loop,
    is_simple,
    j_function,
    make_from_bases,
    make_from_rank_table,
    make_graphic,
    make_uniform,
    mobius,
    rank,
    restrict,
)
from .polynomial import LaurentPoly, canonical_string, evaluate, substitute
from .valuation import ValuationReport, check_valuation

__all__ = [
    "ChainTuttePoly",
    "chain_tutte",
    "chain_tutte_recursive",
    "chain_whitney",
    "evaluate_chain",
    "specialize_down",
    "split_chain_tutte",
    "tutte_grothendieck_witness",
    "universal_chain_tutte",
    "universal_to_whitney_check",
    "ComputeLimits",
    "get_limits",
    "load_limits",
    "set_limits",
    "ChainTutteError",
    "GInvariant",
    "characteristic_poly",
    "classical_tutte",
    "constant_evaluations",
    "expected_codim",
    "ford_a",
    "ford_s_poly",
    "g_from_top_tutte",
    "g_invariant",
    "j_mobius_poly",
    "mobius_poly",
    "mobius_poly_recursive",
    "opposite_char_poly",
    "opposite_char_poly_recursive",
    "FlatLattice",
    "GroundSet",
    "Matroid",
    "SubdivisionNerve",
    "contract",
    "delete",
    "direct_sum",
    "dual",
    "flat_lattice",
    "is_coloop",
    "is_loop",
    "is_simple",
    "j_function",
    "make_from_bases",
    "make_from_rank_table",
    "make_graphic",
    "make_uniform",
    "mobius",
    "rank",
    "restrict",
    "LaurentPoly",
    "canonical_string",
    "evaluate",
    "substitute",
    "ValuationReport",
    "check_valuation",
]
