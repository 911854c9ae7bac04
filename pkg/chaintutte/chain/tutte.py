"""Chain Whitney / Tutte polynomials and the universal chain polynomial.

``W^k_M`` sums ``prod a_i^{rk(M)-rk(S_i)} b_i^{|S_i|-rk(S_i)}`` over all
``(k+1)^n`` chains ``S_1 ⊆ ... ⊆ S_k``; ``T^k_M`` is ``W^k_M`` at
``a_i = x_i - 1``, ``b_i = y_i - 1``.  ``W^0 = T^0 = 1``.  Both are defined
for polymatroids as well.

The universal form pins the top set to the ground set and records the size
and rank increments ``u_i^{|A_i - A_{i-1}|} v_i^{rk(A_i) - rk(A_{i-1})}``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Literal, Mapping, Optional, Union

from ..errors import InvalidParametersError, UnsupportedError
from ..matroid.core import Matroid
from ..polynomial.laurent import (
    LaurentPoly,
    Variable,
    as_fraction,
    canonical_string,
    evaluate,
    from_dense,
    is_polynomial,
    parse_variable,
    rename,
    require_polynomial,
    substitute,
    taylor_coefficient,
    to_model,
    translate,
    var,
)
from .enumeration import universal_exponents, whitney_exponents

__all__ = [
    "ChainTuttePoly",
    "variable_block",
    "chain_whitney",
    "chain_tutte",
    "whitney_to_tutte",
    "coloop_chain_tutte",
    "loop_chain_tutte",
    "boolean_chain_tutte",
    "dual_substitution",
    "specialize_down",
    "universal_chain_tutte",
    "universal_to_whitney_check",
    "evaluate_chain",
]

Form = Literal["whitney", "tutte", "universal"]

_FAMILIES: Dict[str, tuple] = {
    "whitney": ("a", "b"),
    "tutte": ("x", "y"),
    "universal": ("u", "v"),
}


def variable_block(form: Form, k: int, start: int = 1) -> List[Variable]:
    """``[x_start..x_{start+k-1}, y_start..y_{start+k-1}]`` for the form's families."""
    first, second = _FAMILIES[form]
    return [Variable(first, i) for i in range(start, start + k)] + [Variable(second, i) for i in range(start, start + k)]


@dataclass(frozen=True)
class ChainTuttePoly:
    form: Form
    k: int
    n: int
    matroid_rank: int
    poly: LaurentPoly

    def evaluate(self, point: Mapping[Union[Variable, str], Any]) -> Fraction:
        return evaluate(self.poly, point)

    def __str__(self) -> str:
        return canonical_string(self.poly)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "form": self.form,
            "k": self.k,
            "n": self.n,
            "matroid_rank": self.matroid_rank,
            "poly": to_model(self.poly).model_dump(),
        }


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 0:
        raise InvalidParametersError(f"k must be a non-negative integer, got {k!r}", {"k": k})


# ---------------------------------------------------------------------------
# Direct enumeration
# ---------------------------------------------------------------------------


def chain_whitney(M: Matroid, k: int, *, threads: Optional[int] = None) -> ChainTuttePoly:
    _check_k(k)
    if k == 0:
        return ChainTuttePoly("whitney", 0, M.n, M.matroid_rank, LaurentPoly.one())
    counts = whitney_exponents(M, k, threads=threads)
    poly = from_dense(variable_block("whitney", k), counts)
    return ChainTuttePoly("whitney", k, M.n, M.matroid_rank, poly)


def whitney_to_tutte(W: ChainTuttePoly) -> ChainTuttePoly:
    """Expand ``W^k`` at ``a_i = x_i - 1``, ``b_i = y_i - 1``.

    A polymatroid with a singleton of rank above 1 has negative nullities,
    so its ``T^k`` is a Laurent polynomial in ``y_i - 1`` and has no
    polynomial expansion; use the Whitney form or :func:`evaluate_chain`.
    """
    if W.form != "whitney":
        raise InvalidParametersError(f"Expected a Whitney polynomial, got form {W.form!r}")
    if not is_polynomial(W.poly):
        raise UnsupportedError(
            "T^k has negative powers of (y_i - 1) for this polymatroid; use the Whitney form",
            {"k": W.k},
        )
    old, new = variable_block("whitney", W.k), variable_block("tutte", W.k)
    renamed = rename(W.poly, dict(zip(old, new)))
    poly = translate(renamed, {v: -1 for v in new})
    return ChainTuttePoly("tutte", W.k, W.n, W.matroid_rank, poly)


def chain_tutte(M: Matroid, k: int, *, threads: Optional[int] = None) -> ChainTuttePoly:
    return whitney_to_tutte(chain_whitney(M, k, threads=threads))


def evaluate_chain(M: Matroid, k: int, point: Mapping[Union[Variable, str], Any], *, threads: Optional[int] = None) -> Fraction:
    """``T^k_M`` at a rational point, computed as ``W^k_M(x - 1; y - 1)``.

    Skips the polynomial expansion and also works for polymatroids as long
    as no ``y_i`` is 1 where a negative power is needed.
    """
    shifted: Dict[Variable, Fraction] = {}
    for key, value in point.items():
        v = key if isinstance(key, Variable) else parse_variable(key)
        if v.family not in ("x", "y") or v.index > k:
            raise InvalidParametersError(f"{v} is not a variable of T^{k}", {"variable": str(v)})
        shifted[Variable("a" if v.family == "x" else "b", v.index)] = as_fraction(value, v) - 1
    return chain_whitney(M, k, threads=threads).evaluate(shifted)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def coloop_chain_tutte(k: int) -> LaurentPoly:
    """``T^k`` of a coloop: ``1 + sum_{i<=k} prod_{j<=i} (x_j - 1)``."""
    total = LaurentPoly.one()
    prod = LaurentPoly.one()
    for i in range(1, k + 1):
        prod = prod * (var(Variable("x", i)) - 1)
        total = total + prod
    return total


def loop_chain_tutte(k: int) -> LaurentPoly:
    """``T^k`` of a loop: ``1 + sum_{i<=k} prod_{i<=m<=k} (y_m - 1)``."""
    total = LaurentPoly.one()
    prod = LaurentPoly.one()
    for i in range(k, 0, -1):
        prod = prod * (var(Variable("y", i)) - 1)
        total = total + prod
    return total


def boolean_chain_tutte(n: int, k: int) -> LaurentPoly:
    return coloop_chain_tutte(k) ** n


def dual_substitution(poly: LaurentPoly, k: int) -> LaurentPoly:
    """``P(y_k..y_1; x_k..x_1)``: the right-hand side of chain Tutte duality."""
    mapping = {}
    for i in range(1, k + 1):
        mapping[Variable("x", i)] = Variable("y", k + 1 - i)
        mapping[Variable("y", i)] = Variable("x", k + 1 - i)
    return rename(poly, mapping)


# ---------------------------------------------------------------------------
# Specialisation to shorter chains
# ---------------------------------------------------------------------------


def specialize_down(T_top: ChainTuttePoly, k: int) -> ChainTuttePoly:
    """Recover ``T^k`` from ``T^{k'}`` for ``k <= k'``.

    Chains whose sets ``S_{k+1}, ..., S_{k'}`` all equal the ground set are
    exactly the level-``k`` chains.  A set has corank 0 and nullity
    ``n - rk(M)`` only if it is the ground set, so in the shifted variables
    ``x_i = a_i + 1``, ``y_i = b_i + 1`` (``i > k``) we keep the coefficient
    of ``a_i^0 b_i^{n - rk(M)}``: set ``x_i = 1`` and take the Taylor
    coefficient of order ``n - rk(M)`` in ``y_i`` at 1.
    """
    if T_top.form != "tutte":
        raise InvalidParametersError(f"specialize_down expects a chain Tutte polynomial, got {T_top.form!r}")
    _check_k(k)
    if k > T_top.k:
        raise UnsupportedError(
            f"Cannot specialise T^{T_top.k} up to T^{k}",
            {"k": k, "k_top": T_top.k},
        )
    if k == T_top.k:
        return T_top
    nullity = T_top.n - T_top.matroid_rank
    poly = T_top.poly
    for i in range(k + 1, T_top.k + 1):
        poly = substitute(poly, {Variable("x", i): 1})
        poly = taylor_coefficient(poly, Variable("y", i), 1, nullity)
    return ChainTuttePoly("tutte", k, T_top.n, T_top.matroid_rank, poly)


# ---------------------------------------------------------------------------
# Universal form
# ---------------------------------------------------------------------------


def universal_chain_tutte(M: Matroid, k: int, *, threads: Optional[int] = None) -> ChainTuttePoly:
    if not isinstance(k, int) or k < 1:
        raise InvalidParametersError(f"The universal chain polynomial needs k >= 1, got {k!r}", {"k": k})
    counts = universal_exponents(M, k, threads=threads)
    poly = from_dense(variable_block("universal", k), counts)
    return ChainTuttePoly("universal", k, M.n, M.matroid_rank, poly)


def _universal_coordinates(k: int) -> Dict[Variable, LaurentPoly]:
    """``u_i = prod_{j>=i} b_j`` and ``v_i = prod_{j>=i} b_j^{-1} prod_{j<i} a_j``
    for ``i = 1..k+1`` (products over ``j <= k``)."""
    bindings: Dict[Variable, LaurentPoly] = {}
    for i in range(1, k + 2):
        u = LaurentPoly.one()
        v = LaurentPoly.one()
        for j in range(i, k + 1):
            u = u * var(Variable("b", j))
            v = v * var(Variable("b", j), -1)
        for j in range(1, i):
            v = v * var(Variable("a", j))
        bindings[Variable("u", i)] = u
        bindings[Variable("v", i)] = v
    return bindings


def universal_to_whitney_check(M: Matroid, k: int, *, threads: Optional[int] = None) -> bool:
    """Substitute the coordinate change into ``uT^{k+1}`` and compare with ``W^k``."""
    _check_k(k)
    U = universal_chain_tutte(M, k + 1, threads=threads)
    converted = require_polynomial(substitute(U.poly, _universal_coordinates(k)), "the universal-to-Whitney substitution")
    W = chain_whitney(M, k, threads=threads)
    same = converted == W.poly
    if not same:
        logging.warning("Universal-to-Whitney check failed for %r at k=%s", M, k)
    return same
