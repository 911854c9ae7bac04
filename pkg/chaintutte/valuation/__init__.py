# valuation/__init__.py

from .checker import (
    InvariantEntry,
    check_valuation,
    encode_value,
    get_invariant,
    list_invariants,
    register_invariant,
)
from .output_schemas import ValuationReport

__all__ = [
    "InvariantEntry",
    "check_valuation",
    "encode_value",
    "get_invariant",
    "list_invariants",
    "register_invariant",
    "ValuationReport",
]
