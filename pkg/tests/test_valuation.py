import pytest

from chaintutte.errors import InvalidParametersError, NerveError, UnknownInvariantError
from chaintutte.matroid import (
    SubdivisionNerve,
    corrupted_split_u24,
    hypersimplex_split_u24,
    make_uniform,
)
from chaintutte.valuation import check_valuation, get_invariant, list_invariants

SPLIT_CHECKS = [
    ("chain_tutte", 1),
    ("chain_tutte", 2),
    ("chain_whitney", 2),
    ("universal_chain_tutte", 2),
    ("tutte", None),
    ("characteristic_poly", None),
    ("mobius_poly", None),
    ("opposite_char_poly", None),
    ("j_mobius_poly", None),
    ("ford_s_poly", None),
    ("expected_codim", None),
    ("g_invariant", None),
]


def test_registry_lists_every_invariant():
    assert {name for name, _ in SPLIT_CHECKS} == set(list_invariants())


@pytest.mark.parametrize("invariant", sorted({name for name, _ in SPLIT_CHECKS}))
def test_trivial_subdivision(invariant):
    M = make_uniform(2, 4)
    report = check_valuation(invariant, M, SubdivisionNerve([M]), k=2)
    assert report.holds
    assert report.faces == 1


@pytest.mark.parametrize("invariant, k", SPLIT_CHECKS)
def test_hypersimplex_split(invariant, k):
    big, nerve = hypersimplex_split_u24()
    report = check_valuation(invariant, big, nerve, k)
    assert report.holds, report
    assert report.faces == 3
    assert report.lhs == report.rhs


@pytest.mark.parametrize("invariant, k", [("chain_tutte", 1), ("chain_tutte", 2), ("g_invariant", None)])
def test_corrupted_nerve_fails(invariant, k):
    big, nerve = corrupted_split_u24()
    report = check_valuation(invariant, big, nerve, k)
    assert not report.holds
    assert report.lhs != report.rhs


def test_report_shape():
    big, nerve = hypersimplex_split_u24()
    report = check_valuation("chain-tutte", big, nerve, 1)
    assert report.invariant == "chain_tutte"
    assert report.k == 1
    assert "terms" in report.lhs
    assert check_valuation("tutte", big, nerve, 3).k is None


def test_aliases_and_dashes():
    assert get_invariant("char-poly").name == "characteristic_poly"
    assert get_invariant("opp_char_poly").name == "opposite_char_poly"
    assert get_invariant("J-Mobius").name == "j_mobius_poly"
    assert get_invariant("ford-s").name == "ford_s_poly"


def test_unknown_invariant():
    with pytest.raises(UnknownInvariantError) as info:
        get_invariant("kazhdan-lusztig")
    assert "chain_tutte" in info.value.details["known"]


def test_chain_invariants_need_k():
    big, nerve = hypersimplex_split_u24()
    with pytest.raises(InvalidParametersError):
        check_valuation("chain_tutte", big, nerve)


def test_inconsistent_nerve_is_rejected():
    big, nerve = hypersimplex_split_u24()
    bad = SubdivisionNerve(nerve.cells, {frozenset({1, 2}): make_uniform(2, 4)})
    with pytest.raises(NerveError):
        check_valuation("tutte", big, bad)
    with pytest.raises(NerveError):
        SubdivisionNerve(nerve.cells, {frozenset({1, 3}): None})
    with pytest.raises(NerveError):
        check_valuation("tutte", big, SubdivisionNerve(nerve.cells))
