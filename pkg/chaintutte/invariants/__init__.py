# invariants/__init__.py

from .classical import characteristic_poly, classical_tutte
from .derksen import GInvariant, g_from_top_tutte, g_invariant
from .evaluations import constant_evaluations
from .ford import (
    expected_codim,
    expected_codim_report,
    ford_a,
    ford_a_table,
    ford_s_correction,
    ford_s_from_tutte,
    ford_s_poly,
    ford_s_poly_recursive,
)
from .mobius import (
    j_mobius_poly,
    mobius_poly,
    mobius_poly_from_tutte,
    mobius_poly_recursive,
    opposite_char_poly,
    opposite_char_poly_from_tutte,
    opposite_char_poly_recursive,
)
from .output_schemas import ConstantEvaluations, EvaluationPair, ExpectedCodimReport, GInvariantModel

__all__ = [
    "characteristic_poly",
    "classical_tutte",
    "GInvariant",
    "g_from_top_tutte",
    "g_invariant",
    "constant_evaluations",
    "expected_codim",
    "expected_codim_report",
    "ford_a",
    "ford_a_table",
    "ford_s_correction",
    "ford_s_from_tutte",
    "ford_s_poly",
    "ford_s_poly_recursive",
    "j_mobius_poly",
    "mobius_poly",
    "mobius_poly_from_tutte",
    "mobius_poly_recursive",
    "opposite_char_poly",
    "opposite_char_poly_from_tutte",
    "opposite_char_poly_recursive",
    "ConstantEvaluations",
    "EvaluationPair",
    "ExpectedCodimReport",
    "GInvariantModel",
]
