import json
from math import factorial

import pytest

from chaintutte.config import ComputeLimits, set_limits
from chaintutte.errors import BudgetExceededError, InvalidParametersError
from chaintutte.invariants import GInvariant, GInvariantModel, g_from_top_tutte, g_invariant
from chaintutte.matroid import make_uniform
from tests.conftest import ALL, SMALL


def test_small_values():
    assert g_invariant(make_uniform(2, 3)) == GInvariant(3, {(1, 1, 0): 6})
    assert g_invariant(make_uniform(1, 2)) == GInvariant(2, {(1, 0): 2})
    assert g_invariant(make_uniform(1, 1)) == GInvariant(1, {(1,): 1})
    assert g_invariant(make_uniform(0, 1)) == GInvariant(1, {(0,): 1})
    assert g_invariant(make_uniform(0, 0)) == GInvariant(0, {(): 1})


def test_parallel_pair_with_coloop(matroids):
    G = g_invariant(matroids["parallel+coloop"])
    assert G == GInvariant(3, {(1, 1, 0): 4, (1, 0, 1): 2})


@pytest.mark.parametrize("name", ALL)
def test_counts_every_ordering(matroids, name):
    M = matroids[name]
    G = g_invariant(M)
    assert G.total() == factorial(M.n)
    assert G.is_matroidal(M.matroid_rank)


@pytest.mark.parametrize("name", SMALL)
def test_top_chain_polynomial_determines_g(matroids, name):
    M = matroids[name]
    assert g_from_top_tutte(M) == g_invariant(M)


def test_polymatroid_vectors_are_not_matroidal(polymatroid):
    G = g_invariant(polymatroid)
    assert G == GInvariant(2, {(2, 0): 1, (1, 1): 1})
    assert not G.is_matroidal(2)
    assert g_from_top_tutte(polymatroid) == G


def test_thread_count_does_not_change_result(matroids):
    M = matroids["K4"]
    assert g_invariant(M, threads=1) == g_invariant(M, threads=4)


def test_budgets():
    set_limits(ComputeLimits(max_perm_n=3, max_top_tutte_n=3))
    with pytest.raises(BudgetExceededError) as info:
        g_invariant(make_uniform(2, 4))
    assert info.value.details == {"n": 4, "max_perm_n": 3}
    with pytest.raises(BudgetExceededError):
        g_from_top_tutte(make_uniform(2, 4))


def test_arithmetic():
    a = GInvariant(2, {(1, 0): 2})
    b = GInvariant(2, {(0, 1): 1, (1, 0): -2})
    assert a + b == GInvariant(2, {(0, 1): 1})
    assert a - a == GInvariant.zero(2)
    assert 3 * a == a * 3 == GInvariant(2, {(1, 0): 6})
    assert -a == GInvariant(2, {(1, 0): -2})
    assert hash(a + a) == hash(2 * a)
    with pytest.raises(InvalidParametersError):
        a + GInvariant(1, {(1,): 1})
    with pytest.raises(InvalidParametersError):
        GInvariant(2, {(1,): 1})


def test_json_round_trip():
    G = g_invariant(make_uniform(1, 2)) + GInvariant(2, {(0, 1): 3})
    payload = G.to_dict()
    assert payload == {"n": 2, "counts": {"1,0": 2, "0,1": 3}}
    restored = GInvariant.from_model(GInvariantModel.model_validate(json.loads(json.dumps(payload))))
    assert restored == G
