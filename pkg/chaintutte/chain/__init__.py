# chain/__init__.py

from .enumeration import check_chain_budget, merge_counts, universal_exponents, whitney_exponents
from .split import chain_tutte_recursive, split_chain_tutte, tutte_grothendieck_witness
from .tutte import (
    ChainTuttePoly,
    boolean_chain_tutte,
    chain_tutte,
    chain_whitney,
    coloop_chain_tutte,
    dual_substitution,
    evaluate_chain,
    loop_chain_tutte,
    specialize_down,
    universal_chain_tutte,
    universal_to_whitney_check,
    variable_block,
    whitney_to_tutte,
)

__all__ = [
    "check_chain_budget",
    "merge_counts",
    "universal_exponents",
    "whitney_exponents",
    "chain_tutte_recursive",
    "split_chain_tutte",
    "tutte_grothendieck_witness",
    "ChainTuttePoly",
    "boolean_chain_tutte",
    "chain_tutte",
    "chain_whitney",
    "coloop_chain_tutte",
    "dual_substitution",
    "evaluate_chain",
    "loop_chain_tutte",
    "specialize_down",
    "universal_chain_tutte",
    "universal_to_whitney_check",
    "variable_block",
    "whitney_to_tutte",
]
