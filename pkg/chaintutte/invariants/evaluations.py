"""Special evaluations of chain Tutte polynomials next to the counts they enumerate."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Optional

from ..chain.tutte import ChainTuttePoly, chain_tutte, specialize_down
from ..errors import InternalError, InvalidParametersError
from ..matroid.core import Matroid, popcount, require_matroid, submasks
from ..matroid.lattice import flat_lattice
from .output_schemas import ConstantEvaluations, EvaluationPair

__all__ = [
    "constant_evaluations",
]


def _at(T: ChainTuttePoly, xs, ys) -> int:
    point: Dict[str, int] = {}
    for i, value in enumerate(xs, start=1):
        point[f"x{i}"] = value
    for i, value in enumerate(ys, start=1):
        point[f"y{i}"] = value
    value = T.evaluate(point)
    if isinstance(value, Fraction) and value.denominator != 1:
        raise InternalError(f"Evaluation is not an integer: {value}")
    return int(value)


def _pair(tutte: int, direct: int) -> EvaluationPair:
    return EvaluationPair(tutte=str(tutte), direct=str(direct))


def constant_evaluations(M: Matroid, k: int, *, threads: Optional[int] = None) -> ConstantEvaluations:
    require_matroid(M, "The constant evaluations")
    if not isinstance(k, int) or k < 1:
        raise InvalidParametersError(f"k must be a positive integer, got {k!r}", {"k": k})

    Tk = chain_tutte(M, k, threads=threads)
    T2 = Tk if k == 2 else chain_tutte(M, 2, threads=threads)
    T1 = specialize_down(Tk, 1)

    r = M.matroid_rank
    independent = M.independent_sets()
    bases = M.bases()
    spanning = M.spanning_sets()
    spanning_set = set(spanning)
    independent_set = set(independent)
    sizes = [popcount(I) for I in independent]

    ones, twos, zeros = [1] * k, [2] * k, [0] * k

    if k % 2 == 0:
        parity_direct = 1
        euler_direct = 1
    else:
        if M.loops_mask():
            parity_direct = 0
        else:
            L = flat_lattice(M)
            parity_direct = (-1) ** r * L.mobius(L.bottom, L.top)
        euler_direct = (-1) ** r * sum((-1) ** m for m in sizes)

    record = ConstantEvaluations(
        k=k,
        num_bases=_pair(_at(Tk, ones, ones), len(bases)),
        num_independent=_pair(_at(T1, [2], [1]), len(independent)),
        chain_independent=_pair(_at(Tk, twos, ones), sum(k**m for m in sizes)),
        sum_2m_Im=_pair(_at(T2, [2, 2], [1, 1]), sum(2**m for m in sizes)),
        spanning_pair=_pair(
            _at(T2, [1, 1], [2, 2]),
            sum(1 for X in spanning for Y in submasks(X) if Y in spanning_set),
        ),
        eval_2112=_pair(
            _at(T2, [2, 1], [1, 2]),
            sum(1 for X in spanning for Y in submasks(X) if Y in independent_set),
        ),
        bases_1221=_pair(_at(T2, [1, 2], [2, 1]), len(bases)),
        eval_1100_parity_pair=_pair(_at(Tk, ones, zeros), parity_direct),
        euler_pair=_pair(_at(Tk, zeros, ones), euler_direct),
    )
    bad = record.disagreements()
    if bad:
        logging.warning("Constant evaluations disagree for %r: %s", M, sorted(bad))
    return record
