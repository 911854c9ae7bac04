"""Möbius-type polynomials of the lattice of flats.

* ``mobius_poly``: ``sum_{X <= Y} mu(X, Y) s^{crk X} t^{crk Y}``, equal to
  ``T^2_M(1 - s, 1 - t; 0, 0)``;
* ``opposite_char_poly``: ``sum_X mu(X, 1) t^{rk X}``, with
  ``T^2_M(1 - t, 1; 0, 0) = t^{rk M} chi^op_M(1/t)``;
* ``j_mobius_poly``: ``sum_{x <= y <= z} J(x, y, z) t^{crk x + crk y + crk z}``.

Each has a direct route over the lattice; the first two also have a
deletion/contraction recursion at an element that is neither a loop nor a
coloop.
"""

from __future__ import annotations

import logging
from typing import Optional

from ..chain.tutte import chain_tutte
from ..config import check_budget
from ..matroid.core import (
    Matroid,
    contract,
    delete,
    is_coloop,
    is_loop,
    popcount,
    require_matroid,
    restrict,
    submasks,
)
from ..matroid.lattice import flat_lattice
from ..polynomial.laurent import LaurentPoly, Variable, require_polynomial, substitute, var
from .classical import characteristic_poly

__all__ = [
    "mobius_poly",
    "mobius_poly_from_tutte",
    "mobius_poly_recursive",
    "opposite_char_poly",
    "opposite_char_poly_from_tutte",
    "opposite_char_poly_recursive",
    "j_mobius_poly",
]


def _pivot(M: Matroid) -> Optional[int]:
    return next((e for e in range(M.n) if not is_loop(M, e) and not is_coloop(M, e)), None)


# ---------------------------------------------------------------------------
# Möbius polynomial
# ---------------------------------------------------------------------------


def mobius_poly(M: Matroid) -> LaurentPoly:
    require_matroid(M, "The Möbius polynomial")
    L = flat_lattice(M)
    s, t = var("s"), var("t")
    total = LaurentPoly.zero()
    for X in L:
        cx = s ** L.corank(X)
        for Y in L.upper(X):
            total = total + L.mobius(X, Y) * cx * t ** L.corank(Y)
    return total


def mobius_poly_from_tutte(M: Matroid) -> LaurentPoly:
    require_matroid(M, "The Möbius polynomial")
    T2 = chain_tutte(M, 2).poly
    return substitute(
        T2,
        {
            Variable("x", 1): 1 - var("s"),
            Variable("x", 2): 1 - var("t"),
            Variable("y", 1): 0,
            Variable("y", 2): 0,
        },
    )


def mobius_poly_recursive(M: Matroid) -> LaurentPoly:
    """Delete/contract the smallest element that is neither a loop nor a
    coloop, adding the middle split term
    ``sum_{S ⊆ E - a} (-1)^{|S|+1} s^{rk M - rk S} t^{rk(M/a) - rk_{M/a}(S)} chi_{M|S}(s)``.
    """
    require_matroid(M, "The Möbius polynomial")
    a = _pivot(M)
    if a is None:
        return mobius_poly(M)
    check_budget(M.n << (M.n - 1), "The Möbius recursion", "rank queries")
    s, t = var("s"), var("t")
    r = M.matroid_rank
    rest = M.full_mask & ~(1 << a)
    correction = LaurentPoly.zero()
    for S in submasks(rest):
        rk_s = M.rank(S)
        rk_contracted = M.rank(S | (1 << a)) - 1
        sign = 1 if popcount(S) % 2 else -1
        chi = characteristic_poly(restrict(M, S), variable="s")
        correction = correction + sign * s ** (r - rk_s) * t ** (r - 1 - rk_contracted) * chi
    logging.debug("Möbius recursion on n=%s at element %s", M.n, a)
    return mobius_poly_recursive(delete(M, 1 << a)) + mobius_poly_recursive(contract(M, 1 << a)) + correction


# ---------------------------------------------------------------------------
# Opposite characteristic polynomial
# ---------------------------------------------------------------------------


def opposite_char_poly(M: Matroid) -> LaurentPoly:
    require_matroid(M, "The opposite characteristic polynomial")
    L = flat_lattice(M)
    t = var("t")
    total = LaurentPoly.zero()
    for X in L:
        total = total + L.mobius(X, L.top) * t ** L.rank(X)
    return total


def opposite_char_poly_from_tutte(M: Matroid) -> LaurentPoly:
    """``t^{rk M} T^2_M(1 - 1/t, 1; 0, 0)``."""
    require_matroid(M, "The opposite characteristic polynomial")
    T2 = chain_tutte(M, 2).poly
    t = var("t")
    reversed_value = substitute(
        T2,
        {
            Variable("x", 1): 1 - var("t", -1),
            Variable("x", 2): 1,
            Variable("y", 1): 0,
            Variable("y", 2): 0,
        },
    )
    return require_polynomial(t ** M.matroid_rank * reversed_value, "the opposite characteristic evaluation")


def opposite_char_poly_recursive(M: Matroid) -> LaurentPoly:
    """``chi^op_{M-a} + t chi^op_{M/a}`` minus the spanning correction
    ``sum_{S ⊆ E - a, rk(S + a) = rk M} (-1)^{|S|} t^{rk S} chi_{M|S}(1/t)``.
    """
    require_matroid(M, "The opposite characteristic polynomial")
    a = _pivot(M)
    if a is None:
        return opposite_char_poly(M)
    check_budget(M.n << (M.n - 1), "The opposite characteristic recursion", "rank queries")
    t = var("t")
    r = M.matroid_rank
    rest = M.full_mask & ~(1 << a)
    correction = LaurentPoly.zero()
    for S in submasks(rest):
        if M.rank(S | (1 << a)) != r:
            continue
        chi = characteristic_poly(restrict(M, S))
        reversed_chi = t ** M.rank(S) * substitute(chi, {Variable("t", 1): var("t", -1)})
        sign = -1 if popcount(S) % 2 else 1
        correction = correction + sign * require_polynomial(reversed_chi, "a reversed characteristic polynomial")
    deleted = opposite_char_poly_recursive(delete(M, 1 << a))
    contracted = opposite_char_poly_recursive(contract(M, 1 << a))
    return deleted + t * contracted - correction


# ---------------------------------------------------------------------------
# Generalised J-Möbius polynomial
# ---------------------------------------------------------------------------


def j_mobius_poly(M: Matroid) -> LaurentPoly:
    require_matroid(M, "The J-Möbius polynomial")
    L = flat_lattice(M)
    t = var("t")
    total = LaurentPoly.zero()
    for x, y, z in L.three_flags():
        value = L.j_function(x, y, z)
        if value:
            total = total + value * t ** (L.corank(x) + L.corank(y) + L.corank(z))
    return total
