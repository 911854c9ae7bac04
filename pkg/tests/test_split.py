import random

import pytest

from chaintutte.chain import chain_tutte, chain_tutte_recursive, split_chain_tutte, tutte_grothendieck_witness
from chaintutte.errors import InvalidParametersError, OutOfRangeError, UnsupportedError
from chaintutte.matroid import contract, delete, is_coloop, is_loop, make_graphic, make_uniform
from chaintutte.polynomial import LaurentPoly, var
from tests.conftest import ALL, SMALL, WIDE


def _pivots(M):
    return [e for e in range(M.n) if not is_loop(M, e) and not is_coloop(M, e)]


def test_middle_split_of_a_parallel_pair():
    assert split_chain_tutte(make_uniform(1, 2), 0, 2, 1) == var("x1") * var("y2") - 1


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_splits_sum_to_chain_tutte(matroids, name, k):
    M = matroids[name]
    expected = chain_tutte(M, k).poly
    for a in _pivots(M):
        total = LaurentPoly.zero()
        for j in range(k + 1):
            total = total + split_chain_tutte(M, a, k, j)
        assert total == expected, (name, a)


@pytest.mark.parametrize("name", ["U23", "C4", "parallel+coloop"])
def test_outer_splits_are_minors(matroids, name):
    M = matroids[name]
    a = _pivots(M)[0]
    assert split_chain_tutte(M, a, 2, 0) == chain_tutte(contract(M, [a]), 2).poly
    assert split_chain_tutte(M, a, 2, 2) == chain_tutte(delete(M, [a]), 2).poly


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("k", [0, 1, 2])
def test_recursion_matches_enumeration(matroids, name, k):
    M = matroids[name]
    assert chain_tutte_recursive(M, k).poly == chain_tutte(M, k).poly


@pytest.mark.parametrize("name", ["U24", "C4"])
def test_recursion_matches_enumeration_at_k_three(matroids, name):
    M = matroids[name]
    assert chain_tutte_recursive(M, 3).poly == chain_tutte(M, 3).poly


def test_split_arguments_are_checked():
    M = make_uniform(1, 2)
    with pytest.raises(OutOfRangeError):
        split_chain_tutte(M, 2, 2, 1)
    with pytest.raises(InvalidParametersError):
        split_chain_tutte(M, 0, 2, 3)
    with pytest.raises(InvalidParametersError):
        split_chain_tutte(M, 0, -1, 0)


def test_recursion_refuses_polymatroids(polymatroid):
    with pytest.raises(UnsupportedError):
        chain_tutte_recursive(polymatroid, 2)


def test_no_two_term_deletion_contraction_rule():
    lhs, rhs = tutte_grothendieck_witness()
    assert lhs != rhs


@pytest.mark.parametrize("seed", range(6))
def test_random_graphs(seed):
    rng = random.Random(seed)
    edges = [(rng.randrange(4), rng.randrange(4)) for _ in range(5)]
    M = make_graphic(4, edges)
    for k in (1, 2):
        assert chain_tutte_recursive(M, k).poly == chain_tutte(M, k).poly
    for a in _pivots(M):
        total = LaurentPoly.zero()
        for j in range(3):
            total = total + split_chain_tutte(M, a, 2, j)
        assert total == chain_tutte(M, 2).poly


@pytest.mark.parametrize("name", WIDE)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_recursion_matches_enumeration_on_the_wide_corpus(wide, name, k):
    M = wide[name]
    assert chain_tutte_recursive(M, k).poly == chain_tutte(M, k).poly
