"""Ford's S-polynomial and expected codimension.

``a(A)`` is the Möbius inversion of the nullity over the Boolean lattice,
``sum_{B ⊆ A} a(B) = |A| - rk(A)``, and the expected codimension is
``ec(M) = sum_A (rk M - rk A) a(A)``.

``S_M(x, y, z) = sum_{A ⊆ B} x^{|A| - rk A} y^{rk M - rk B} z^{|B| - |A|}``
(variables ``x1, y1, z``) equals
``T^2_M(z + 1, y/z + 1; x/z + 1, z + 1)``, and
``ec(M) = d/dx d/dy S_M`` at ``(1, 1, -1)``.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Literal, Optional, Tuple

from ..config import check_budget
from ..chain.tutte import chain_tutte
from ..errors import InternalError, InvalidParametersError
from ..matroid.core import (
    Matroid,
    contract,
    delete,
    is_coloop,
    is_loop,
    popcount,
    require_matroid,
    submasks,
    subset_to_mask,
)
from ..polynomial.laurent import (
    LaurentPoly,
    Variable,
    evaluate,
    from_dense,
    partial_derivative,
    require_polynomial,
    substitute,
    var,
)
from .output_schemas import ExpectedCodimReport

__all__ = [
    "ford_a",
    "ford_a_table",
    "ford_s_poly",
    "ford_s_from_tutte",
    "ford_s_poly_recursive",
    "ford_s_correction",
    "expected_codim",
    "expected_codim_report",
]

X, Y, Z = Variable("x", 1), Variable("y", 1), Variable("z", 1)
Route = Literal["direct", "derivative", "recursion"]


def _pivot(M: Matroid) -> Optional[int]:
    return next((e for e in range(M.n) if not is_loop(M, e) and not is_coloop(M, e)), None)


# ---------------------------------------------------------------------------
# a(A)
# ---------------------------------------------------------------------------


def ford_a_table(M: Matroid) -> List[int]:
    """``a(A)`` for every subset mask, by in-place Möbius inversion of the nullity."""
    require_matroid(M, "Ford's a-function")
    check_budget((M.n + 1) << M.n, "Ford's a-function", "rank queries")
    rk = M.rank_lookup()
    table = [popcount(mask) - rk(mask) for mask in range(1 << M.n)]
    for e in range(M.n):
        bit = 1 << e
        for mask in range(1 << M.n):
            if mask & bit:
                table[mask] -= table[mask ^ bit]
    return table


def ford_a(M: Matroid, subset) -> int:
    mask = subset if isinstance(subset, int) else subset_to_mask(subset, M.n)
    M.check_mask(mask)
    return ford_a_table(M)[mask]


# ---------------------------------------------------------------------------
# S-polynomial
# ---------------------------------------------------------------------------


def _pair_counts(M: Matroid, top_rank: int, rk) -> Dict[Tuple[int, int, int], int]:
    check_budget(3**M.n, "The S-polynomial", "subset pairs")
    counts: Dict[Tuple[int, int, int], int] = {}
    for B in range(1 << M.n):
        crk_b = top_rank - rk(B)
        size_b = popcount(B)
        for A in submasks(B):
            size_a = popcount(A)
            key = (size_a - rk(A), crk_b, size_b - size_a)
            counts[key] = counts.get(key, 0) + 1
    return counts


def ford_s_poly(M: Matroid) -> LaurentPoly:
    counts = _pair_counts(M, M.matroid_rank, M.rank_lookup())
    return from_dense([X, Y, Z], counts)


def ford_s_from_tutte(M: Matroid) -> LaurentPoly:
    require_matroid(M, "The S-polynomial evaluation of T^2")
    z = var(Z)
    T2 = chain_tutte(M, 2).poly
    value = substitute(
        T2,
        {
            Variable("x", 1): z + 1,
            Variable("x", 2): var(Y) * var(Z, -1) + 1,
            Variable("y", 1): var(X) * var(Z, -1) + 1,
            Variable("y", 2): z + 1,
        },
    )
    return require_polynomial(value, "the S-polynomial substitution")


def ford_s_correction(M: Matroid, a: int) -> LaurentPoly:
    """``sum_{A ⊆ B ⊆ E - a} x^{|A| - rk A} y^{rk(M/a) - rk_{M/a}(B)} z^{|B| - |A|}``."""
    Mc = contract(M, 1 << a)
    rk_c = Mc.rank_lookup()
    rk = delete(M, 1 << a).rank_lookup()
    check_budget(3**Mc.n, "The S-polynomial correction", "subset pairs")
    counts: Dict[Tuple[int, int, int], int] = {}
    for B in range(1 << Mc.n):
        crk_b = Mc.matroid_rank - rk_c(B)
        for A in submasks(B):
            key = (popcount(A) - rk(A), crk_b, popcount(B) - popcount(A))
            counts[key] = counts.get(key, 0) + 1
    return from_dense([X, Y, Z], counts)


def ford_s_poly_recursive(M: Matroid) -> LaurentPoly:
    """``S_M = S_{M-a} + S_{M/a} + z * ford_s_correction(M, a)``."""
    require_matroid(M, "The S-polynomial recursion")
    a = _pivot(M)
    if a is None:
        return ford_s_poly(M)
    return (
        ford_s_poly_recursive(delete(M, 1 << a))
        + ford_s_poly_recursive(contract(M, 1 << a))
        + var(Z) * ford_s_correction(M, a)
    )


# ---------------------------------------------------------------------------
# Expected codimension
# ---------------------------------------------------------------------------


def _ec_direct(M: Matroid) -> int:
    table = ford_a_table(M)
    rk = M.rank_lookup()
    r = M.matroid_rank
    return sum((r - rk(A)) * value for A, value in enumerate(table) if value)


def _ec_derivative(M: Matroid) -> int:
    S = ford_s_from_tutte(M)
    value = evaluate(partial_derivative(partial_derivative(S, X), Y), {X: 1, Y: 1, Z: -1})
    if value.denominator != 1:
        raise InternalError(f"Expected codimension came out fractional: {value}")
    return int(value)


def _ec_recursion(M: Matroid) -> int:
    a = _pivot(M)
    if a is None:
        return _ec_direct(M)
    Mc = contract(M, 1 << a)
    check_budget(3**Mc.n, "The expected codimension recursion", "subset pairs")
    rk_c = Mc.rank_lookup()
    rk = delete(M, 1 << a).rank_lookup()
    correction = 0
    for B in range(1 << Mc.n):
        crk_b = Mc.matroid_rank - rk_c(B)
        if not crk_b:
            continue
        for A in submasks(B):
            nullity = popcount(A) - rk(A)
            if nullity:
                sign = -1 if (popcount(B) - popcount(A)) % 2 else 1
                correction += sign * nullity * crk_b
    return _ec_recursion(delete(M, 1 << a)) + _ec_recursion(Mc) - correction


def expected_codim(M: Matroid, *, route: Route = "direct") -> int:
    require_matroid(M, "The expected codimension")
    if route == "direct":
        return _ec_direct(M)
    if route == "derivative":
        return _ec_derivative(M)
    if route == "recursion":
        return _ec_recursion(M)
    raise InvalidParametersError(f"Unknown route {route!r}", {"route": route})


def expected_codim_report(M: Matroid) -> ExpectedCodimReport:
    report = ExpectedCodimReport(
        direct=expected_codim(M, route="direct"),
        derivative=expected_codim(M, route="derivative"),
        recursion=expected_codim(M, route="recursion"),
    )
    if not report.agrees:
        logging.warning("Expected codimension routes disagree for %r: %s", M, report)
    return report
