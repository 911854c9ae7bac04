"""Split chain Tutte polynomials and the deletion/contraction-style recursion.

For an element ``a`` and ``0 <= j <= k`` the split polynomial ``sT^{k,j}``
collects the chains in which ``a`` first appears in ``S_{j+1}``:

* ``sT^{k,0} = T^k(M/a)`` and ``sT^{k,k} = T^k(M - a)``;
* for ``0 < j < k`` it is the sum over chains ``S_1 ⊆ ... ⊆ S_{k-j}`` of
  ``𝒜 - a`` of ``T^j(M|S_1) * prod_{i<=j} (x_i - 1)^{rk(M) - rk(S_1)}``
  times ``prod_i (x_{i+j} - 1)^{rk(M/a) - rk_{M/a}(S_i)}
  (y_{i+j} - 1)^{|S_i| - rk_{M/a}(S_i)}``.

When ``a`` is neither a loop nor a coloop, ``T^k = sum_j sT^{k,j}``.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, Optional, Tuple

from ..errors import InvalidParametersError, OutOfRangeError
from ..matroid.core import (
    Matroid,
    contract,
    delete,
    is_coloop,
    is_loop,
    make_uniform,
    mask_to_subset,
    popcount,
    require_matroid,
    restrict,
)
from ..polynomial.laurent import LaurentPoly, Variable, from_dense, translate, var
from .enumeration import check_chain_budget, whitney_exponents
from .tutte import ChainTuttePoly, chain_tutte, coloop_chain_tutte, loop_chain_tutte, variable_block

__all__ = [
    "split_chain_tutte",
    "chain_tutte_recursive",
    "tutte_grothendieck_witness",
]

Inner = Callable[[Matroid, int], LaurentPoly]


def _direct(M: Matroid, k: int) -> LaurentPoly:
    return chain_tutte(M, k).poly


def _split(M: Matroid, a: int, k: int, j: int, inner: Inner) -> LaurentPoly:
    if j == 0:
        return inner(contract(M, 1 << a), k)
    if j == k:
        return inner(delete(M, 1 << a), k)

    Mc = contract(M, 1 << a)
    kept = [e for e in range(M.n) if e != a]
    r = M.matroid_rank
    grouped: Dict[int, Dict[Tuple[int, ...], int]] = {}
    for key, c in whitney_exponents(Mc, k - j, group_by_first=True).items():
        grouped.setdefault(key[0], {})[key[1:]] = c

    tail_vars = variable_block("tutte", k - j, start=j + 1)
    head = LaurentPoly.one()
    for i in range(1, j + 1):
        head = head * (var(Variable("x", i)) - 1)

    total = LaurentPoly.zero()
    for s1 in sorted(grouped):
        original = sum(1 << kept[i] for i in mask_to_subset(s1))
        restricted = restrict(M, original)
        tail = translate(from_dense(tail_vars, grouped[s1]), {v: -1 for v in tail_vars})
        total = total + inner(restricted, j) * head ** (r - M.rank(original)) * tail
    return total


def split_chain_tutte(M: Matroid, a: int, k: int, j: int) -> LaurentPoly:
    """The ``j``-th split chain Tutte polynomial of ``M`` at ``a``."""
    if not isinstance(a, int) or a < 0 or a >= M.n:
        raise OutOfRangeError(f"Element {a!r} is not in the ground set", {"element": a})
    if not isinstance(k, int) or k < 0:
        raise InvalidParametersError(f"k must be a non-negative integer, got {k!r}")
    if not isinstance(j, int) or not 0 <= j <= k:
        raise InvalidParametersError(f"Split index must satisfy 0 <= j <= k, got j={j}, k={k}")
    return _split(M, a, k, j, _direct)


def chain_tutte_recursive(M: Matroid, k: int) -> ChainTuttePoly:
    """``T^k`` by splitting at the smallest element that is neither a loop
    nor a coloop; matroids made only of loops and coloops use the closed
    forms ``T_L^{#loops} * T_C^{#coloops}``."""
    require_matroid(M, "The recursive chain Tutte route")
    if not isinstance(k, int) or k < 0:
        raise InvalidParametersError(f"k must be a non-negative integer, got {k!r}")
    check_chain_budget((k + 1) ** M.n, "The recursive chain Tutte route")
    memo: Dict[Tuple, LaurentPoly] = {}

    def recurse(N: Matroid, level: int) -> LaurentPoly:
        if level == 0 or N.n == 0:
            return LaurentPoly.one()
        key = (level, N.n, tuple(N.rank_table()))
        hit = memo.get(key)
        if hit is not None:
            return hit
        pivot: Optional[int] = next((e for e in range(N.n) if not is_loop(N, e) and not is_coloop(N, e)), None)
        if pivot is None:
            loops = popcount(N.loops_mask())
            result = loop_chain_tutte(level) ** loops * coloop_chain_tutte(level) ** (N.n - loops)
        else:
            result = LaurentPoly.zero()
            for j in range(level + 1):
                result = result + _split(N, pivot, level, j, recurse)
        memo[key] = result
        return result

    poly = recurse(M, k)
    logging.debug("Recursive T^%s used %s memo entries", k, len(memo))
    return ChainTuttePoly("tutte", k, M.n, M.matroid_rank, poly)


def tutte_grothendieck_witness() -> Tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the equation a two-term deletion/contraction rule for
    ``T^2`` would force on ``L, C, D = U_{1,2}, U_{1,3}, U_{2,3}, U_{2,4}``.

    ``T^2`` is no generalised Tutte-Grothendieck invariant because the two
    sides differ.
    """
    T = {name: chain_tutte(make_uniform(r, n), 2).poly for name, (r, n) in {
        "L": (0, 1),
        "C": (1, 1),
        "D": (1, 2),
        "U13": (1, 3),
        "U23": (2, 3),
        "U24": (2, 4),
    }.items()}
    lhs = (T["D"] * T["C"] - T["C"]) * T["C"] * T["U24"]
    b_num = T["U23"] * T["C"] - T["D"]
    rhs = T["D"] * T["U23"] - b_num * T["L"] * T["U23"] + b_num * T["U13"]
    return lhs, rhs
