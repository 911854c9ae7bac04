# polynomial/__init__.py

from .laurent import (
    FAMILIES,
    LaurentPoly,
    Monomial,
    Variable,
    add,
    as_fraction,
    canonical_string,
    canonical_terms,
    coefficient,
    constant,
    evaluate,
    extract,
    from_dense,
    from_json,
    from_model,
    is_polynomial,
    mul,
    neg,
    parse_variable,
    partial_derivative,
    power,
    rename,
    require_polynomial,
    sub,
    substitute,
    support,
    taylor_coefficient,
    to_dense,
    to_json,
    to_model,
    total_degree,
    translate,
    var,
    variables,
)
from .output_schemas import PolynomialModel, TermModel

__all__ = [
    "FAMILIES",
    "LaurentPoly",
    "Monomial",
    "Variable",
    "add",
    "as_fraction",
    "canonical_string",
    "canonical_terms",
    "coefficient",
    "constant",
    "evaluate",
    "extract",
    "from_dense",
    "from_json",
    "from_model",
    "is_polynomial",
    "mul",
    "neg",
    "parse_variable",
    "partial_derivative",
    "power",
    "rename",
    "require_polynomial",
    "sub",
    "substitute",
    "support",
    "taylor_coefficient",
    "to_dense",
    "to_json",
    "to_model",
    "total_degree",
    "translate",
    "var",
    "variables",
    "PolynomialModel",
    "TermModel",
]
