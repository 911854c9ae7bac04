from fractions import Fraction

import pytest

from chaintutte.chain import (
    boolean_chain_tutte,
    chain_tutte,
    chain_whitney,
    coloop_chain_tutte,
    dual_substitution,
    evaluate_chain,
    loop_chain_tutte,
    specialize_down,
    universal_chain_tutte,
    universal_to_whitney_check,
    whitney_to_tutte,
)
from chaintutte.config import ComputeLimits, set_limits
from chaintutte.errors import BudgetExceededError, InvalidParametersError, UnsupportedError
from chaintutte.matroid import (
    direct_sum,
    dual,
    make_boolean,
    make_complete_graph,
    make_cycle_graph,
    make_uniform,
)
from chaintutte.polynomial import canonical_string, evaluate, var
from tests.conftest import ALL, SMALL, WIDE, WIDE_UPTO_5

TABLE_POINT = {"x1": 2, "x2": 1, "y1": 1, "y2": 2}


def test_t2_of_a_parallel_pair():
    T = chain_tutte(make_uniform(1, 2), 2)
    assert str(T) == "x1*x2 + x1*y2 + y1*y2 - x2 - y1 + 1"
    assert T.form == "tutte" and T.k == 2 and T.n == 2 and T.matroid_rank == 1


def test_t2_of_u23(xy):
    x1, x2, y1, y2 = xy
    expected = (
        x1**2 * x2**2
        + x1**2 * x2
        - 2 * x1 * x2**2
        + x1**2 * y2
        + x1 * x2
        + x2**2
        + x1 * y2
        + y1 * y2
        - 2 * x2
        - y1
        + 1
    )
    assert chain_tutte(make_uniform(2, 3), 2).poly == expected


def test_k_one_is_the_classical_tutte_polynomial():
    x, y = var("x1"), var("y1")
    assert chain_tutte(make_uniform(2, 3), 1).poly == x**2 + x + y
    K4 = chain_tutte(make_complete_graph(4), 1).poly
    assert K4 == x**3 + 3 * x**2 + 2 * x + 4 * x * y + 2 * y + 3 * y**2 + y**3


def test_k_zero_is_one(matroids):
    assert chain_tutte(matroids["U23"], 0).poly == 1
    assert chain_whitney(matroids["K4"], 0).poly == 1


def test_negative_k_is_rejected():
    with pytest.raises(InvalidParametersError):
        chain_tutte(make_uniform(1, 1), -1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_closed_forms(k):
    assert chain_tutte(make_uniform(1, 1), k).poly == coloop_chain_tutte(k)
    assert chain_tutte(make_uniform(0, 1), k).poly == loop_chain_tutte(k)
    for n in range(5):
        assert chain_tutte(make_boolean(n), k).poly == boolean_chain_tutte(n, k)
    assert chain_tutte(make_uniform(0, 3), k).poly == loop_chain_tutte(k) ** 3


def test_loop_and_coloop_at_k_one():
    assert coloop_chain_tutte(1) == var("x1")
    assert loop_chain_tutte(1) == var("y1")


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_all_twos_counts_chains(matroids, name, k):
    M = matroids[name]
    point = {f"{f}{i}": 2 for f in "xy" for i in range(1, k + 1)}
    assert chain_tutte(M, k).evaluate(point) == (k + 1) ** M.n


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("k", [1, 2])
def test_duality(matroids, name, k):
    M = matroids[name]
    assert chain_tutte(dual(M), k).poly == dual_substitution(chain_tutte(M, k).poly, k)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_direct_sum_multiplies(k):
    A, B = make_uniform(1, 2), make_uniform(2, 3)
    assert chain_tutte(direct_sum(A, B), k).poly == chain_tutte(A, k).poly * chain_tutte(B, k).poly


@pytest.mark.parametrize("name", SMALL)
def test_specialize_down(matroids, name):
    M = matroids[name]
    T3 = chain_tutte(M, 3)
    assert specialize_down(T3, 3) is T3
    for k in (0, 1, 2):
        assert specialize_down(T3, k).poly == chain_tutte(M, k).poly


def test_specialize_down_refuses_to_go_up():
    with pytest.raises(UnsupportedError):
        specialize_down(chain_tutte(make_uniform(1, 2), 1), 2)
    with pytest.raises(InvalidParametersError):
        specialize_down(chain_whitney(make_uniform(1, 2), 2), 1)


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("k", [1, 2])
def test_universal_form_recovers_whitney(matroids, name, k):
    assert universal_to_whitney_check(matroids[name], k)


def test_universal_chain_of_a_coloop():
    U = universal_chain_tutte(make_uniform(1, 1), 1)
    assert U.form == "universal"
    assert U.poly == var("u1") * var("v1")
    with pytest.raises(InvalidParametersError):
        universal_chain_tutte(make_uniform(1, 1), 0)


def test_universal_chain_counts_chains():
    U = universal_chain_tutte(make_uniform(2, 3), 2)
    # chains A1 ⊆ A2 = E: 2^3 choices of A1
    assert evaluate(U.poly, {"u1": 1, "u2": 1, "v1": 1, "v2": 1}) == 8


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 19), (4, 523), (5, 36478)])
def test_complete_graph_table(n, expected):
    assert evaluate_chain(make_complete_graph(n), 2, TABLE_POINT) == expected


@pytest.mark.parametrize("n, expected", [(3, 19), (4, 47), (5, 111), (6, 255), (7, 575)])
def test_cycle_table(n, expected):
    assert evaluate_chain(make_cycle_graph(n), 2, TABLE_POINT) == expected


def test_evaluate_chain_matches_expansion(matroids):
    M = matroids["K4"]
    point = {"x1": "1/2", "x2": 3, "y1": -1, "y2": "2/3"}
    assert evaluate_chain(M, 2, point) == chain_tutte(M, 2).evaluate(point)


def test_evaluate_chain_rejects_foreign_variables():
    with pytest.raises(InvalidParametersError):
        evaluate_chain(make_uniform(1, 2), 2, {"x3": 1})
    with pytest.raises(InvalidParametersError):
        evaluate_chain(make_uniform(1, 2), 2, {"a1": 1})


def test_polymatroid_has_no_tutte_expansion(polymatroid):
    W = chain_whitney(polymatroid, 1)
    assert W.form == "whitney"
    with pytest.raises(UnsupportedError):
        whitney_to_tutte(W)
    with pytest.raises(UnsupportedError):
        chain_tutte(polymatroid, 2)


def test_polymatroid_evaluates_through_whitney(polymatroid):
    # a = 1, b = 2: 1 + 1/2 + 1 + 1
    assert evaluate_chain(polymatroid, 1, {"x1": 2, "y1": 3}) == Fraction(7, 2)


def test_whitney_to_tutte_needs_whitney_form():
    with pytest.raises(InvalidParametersError):
        whitney_to_tutte(chain_tutte(make_uniform(1, 1), 1))


def test_budget_exceeded():
    set_limits(ComputeLimits(max_chains=10))
    with pytest.raises(BudgetExceededError) as info:
        chain_tutte(make_uniform(2, 3), 2)
    assert info.value.details == {"chains": 27, "max_chains": 10, "unit": "chains"}


def test_result_does_not_depend_on_thread_count():
    set_limits(ComputeLimits(chunk_size=16))
    M = make_complete_graph(4)
    reference = canonical_string(chain_tutte(M, 2, threads=1).poly)
    for threads in (2, 8):
        assert canonical_string(chain_tutte(M, 2, threads=threads).poly) == reference


def test_to_dict(matroids):
    payload = chain_tutte(matroids["U12"], 1).to_dict()
    assert payload["form"] == "tutte"
    assert payload["k"] == 1
    assert payload["poly"]["terms"] == [
        {"exp": {"x1": 1}, "coeff": "1"},
        {"exp": {"y1": 1}, "coeff": "1"},
    ]


def test_evaluate_chain_rejects_non_numbers():
    with pytest.raises(InvalidParametersError) as info:
        evaluate_chain(make_uniform(1, 2), 1, {"x1": "abc", "y1": 1})
    assert info.value.details == {"variable": "x1"}
    with pytest.raises(InvalidParametersError):
        evaluate_chain(make_uniform(1, 2), 1, {"x1": True})


def test_evaluate_chain_reads_floats_as_decimals():
    assert evaluate_chain(make_uniform(1, 1), 1, {"x1": 0.1, "y1": 1}) == Fraction(1, 10)
    # U_{1,2}: T = x1 + y1
    assert evaluate_chain(make_uniform(1, 2), 1, {"x1": 0.1, "y1": 0.2}) == Fraction(3, 10)


@pytest.mark.parametrize("name", WIDE)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_identities_on_the_wide_corpus(wide, name, k):
    M = wide[name]
    T = chain_tutte(M, k)
    point = {f"{f}{i}": 2 for f in "xy" for i in range(1, k + 1)}
    assert T.evaluate(point) == (k + 1) ** M.n
    assert chain_tutte(dual(M), k).poly == dual_substitution(T.poly, k)
    assert universal_to_whitney_check(M, k)


@pytest.mark.parametrize("name", WIDE_UPTO_5)
def test_duality_at_k_four(wide, name):
    M = wide[name]
    assert chain_tutte(dual(M), 4).poly == dual_substitution(chain_tutte(M, 4).poly, 4)


@pytest.mark.parametrize("name", WIDE_UPTO_5)
def test_tower_specialises_down(wide, name):
    M = wide[name]
    top = max(M.n, 4)
    T_top = chain_tutte(M, top)
    for k in range(top):
        assert specialize_down(T_top, k).poly == chain_tutte(M, k).poly, (name, k)
