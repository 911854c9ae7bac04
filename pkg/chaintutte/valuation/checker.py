from __future__ import annotations

"""Valuation checks over subdivision nerves.

An invariant ``f`` is valuative on a subdivision ``P = P_1 ∪ ... ∪ P_s`` when

    f(P) = sum_{J non-empty} (-1)^{|J|+1} f(P_J)

with ``f(empty) = 0``.  Invariants are looked up in a small in-memory
registry; ids may be written with dashes or underscores.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Union

from ..chain.tutte import chain_tutte, chain_whitney, universal_chain_tutte
from ..errors import InvalidParametersError, UnknownInvariantError
from ..invariants.classical import characteristic_poly, classical_tutte
from ..invariants.derksen import GInvariant, g_invariant
from ..invariants.ford import expected_codim, ford_s_poly
from ..invariants.mobius import j_mobius_poly, mobius_poly, opposite_char_poly
from ..matroid.core import Matroid
from ..matroid.nerve import SubdivisionNerve
from ..polynomial.laurent import LaurentPoly, to_model
from .output_schemas import ValuationReport

__all__ = [
    "InvariantEntry",
    "register_invariant",
    "get_invariant",
    "list_invariants",
    "check_valuation",
    "encode_value",
]

Value = Union[LaurentPoly, GInvariant, int]


@dataclass(frozen=True)
class InvariantEntry:
    name: str
    compute: Callable[[Matroid, Optional[int]], Value]
    needs_k: bool = False
    description: str = ""


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_registry: Dict[str, InvariantEntry] = {}
_aliases: Dict[str, str] = {}
_lock = threading.Lock()


def _normalise(name: str) -> str:
    return name.strip().lower().replace("-", "_")


def register_invariant(entry: InvariantEntry, *aliases: str) -> None:
    key = _normalise(entry.name)
    with _lock:
        _registry[key] = entry
        for alias in aliases:
            _aliases[_normalise(alias)] = key


def get_invariant(name: str) -> InvariantEntry:
    key = _normalise(name)
    with _lock:
        key = _aliases.get(key, key)
        entry = _registry.get(key)
        known = sorted(_registry)
    if entry is None:
        raise UnknownInvariantError(f"Unknown invariant {name!r}", {"invariant": name, "known": known})
    return entry


def list_invariants() -> List[str]:
    with _lock:
        return sorted(_registry)


register_invariant(InvariantEntry("chain_tutte", lambda M, k: chain_tutte(M, k).poly, True, "T^k"))
register_invariant(InvariantEntry("chain_whitney", lambda M, k: chain_whitney(M, k).poly, True, "W^k"))
register_invariant(
    InvariantEntry("universal_chain_tutte", lambda M, k: universal_chain_tutte(M, k).poly, True, "uT^k")
)
register_invariant(InvariantEntry("tutte", lambda M, k: classical_tutte(M), description="T = T^1"))
register_invariant(
    InvariantEntry("characteristic_poly", lambda M, k: characteristic_poly(M), description="chi_M(t)"),
    "char_poly",
)
register_invariant(InvariantEntry("mobius_poly", lambda M, k: mobius_poly(M), description="chi-bar_M(s, t)"))
register_invariant(
    InvariantEntry("opposite_char_poly", lambda M, k: opposite_char_poly(M), description="chi^op_M(t)"),
    "opp_char_poly",
)
register_invariant(InvariantEntry("j_mobius_poly", lambda M, k: j_mobius_poly(M), description="J-Möbius"), "j_mobius")
register_invariant(InvariantEntry("ford_s_poly", lambda M, k: ford_s_poly(M), description="S_M(x, y, z)"), "ford_s")
register_invariant(InvariantEntry("expected_codim", lambda M, k: expected_codim(M), description="ec(M)"))
register_invariant(InvariantEntry("g_invariant", lambda M, k: g_invariant(M), description="G-invariant"))


# ---------------------------------------------------------------------------
# Check
# ---------------------------------------------------------------------------


def encode_value(value: Value) -> Any:
    if isinstance(value, LaurentPoly):
        return to_model(value).model_dump()
    if isinstance(value, GInvariant):
        return value.to_dict()
    return str(value)


def _zero_like(value: Value, n: int) -> Value:
    if isinstance(value, LaurentPoly):
        return LaurentPoly.zero()
    if isinstance(value, GInvariant):
        return GInvariant.zero(n)
    return 0


def check_valuation(
    invariant_id: str,
    big_matroid: Matroid,
    nerve: SubdivisionNerve,
    k: Optional[int] = None,
) -> ValuationReport:
    entry = get_invariant(invariant_id)
    if entry.needs_k and k is None:
        raise InvalidParametersError(f"Invariant {entry.name} needs a chain length k", {"invariant": entry.name})
    nerve.validate()

    lhs = entry.compute(big_matroid, k)
    rhs = _zero_like(lhs, big_matroid.n)
    faces = 0
    for J, face in nerve.faces():
        if face is None:
            continue
        faces += 1
        term = entry.compute(face, k)
        rhs = rhs + term if len(J) % 2 else rhs - term
    holds = lhs == rhs
    logging.info(
        "Valuation check %s (k=%s) over %s faces: %s",
        entry.name,
        k,
        faces,
        "holds" if holds else "fails",
    )
    return ValuationReport(
        invariant=entry.name,
        k=k if entry.needs_k else None,
        holds=holds,
        lhs=encode_value(lhs),
        rhs=encode_value(rhs),
        faces=faces,
    )
