"""Classical Tutte and characteristic polynomials."""

from __future__ import annotations

from typing import Literal

from ..chain.tutte import chain_tutte
from ..errors import InvalidParametersError
from ..matroid.core import Matroid, require_matroid
from ..matroid.lattice import flat_lattice
from ..polynomial.laurent import LaurentPoly, Variable, substitute, var

__all__ = [
    "classical_tutte",
    "characteristic_poly",
]

CharRoute = Literal["tutte", "mobius"]


def classical_tutte(M: Matroid) -> LaurentPoly:
    return chain_tutte(M, 1).poly


def characteristic_poly(M: Matroid, *, route: CharRoute = "tutte", variable: str = "t") -> LaurentPoly:
    """``chi_M(t) = (-1)^{rk M} T_M(1 - t; 0)``.

    The ``mobius`` route sums ``mu(0, X) t^{crk X}`` over the flats; a
    matroid with a loop has ``chi = 0`` on both routes.
    """
    require_matroid(M, "The characteristic polynomial")
    t = var(variable)
    if route == "tutte":
        value = substitute(classical_tutte(M), {Variable("x", 1): 1 - t, Variable("y", 1): 0})
        return value if M.matroid_rank % 2 == 0 else -value
    if route == "mobius":
        if M.loops_mask():
            return LaurentPoly.zero()
        L = flat_lattice(M)
        total = LaurentPoly.zero()
        for X in L.upper(L.bottom):
            total = total + L.mobius(L.bottom, X) * t ** L.corank(X)
        return total
    raise InvalidParametersError(f"Unknown route {route!r}", {"route": route})
