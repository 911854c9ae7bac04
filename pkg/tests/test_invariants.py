import pytest

from chaintutte.chain import chain_tutte, chain_whitney, universal_chain_tutte
from chaintutte.config import ComputeLimits, set_limits
from chaintutte.errors import BudgetExceededError, InvalidParametersError, UnsupportedError
from chaintutte.invariants import (
    characteristic_poly,
    classical_tutte,
    ford_s_poly,
    j_mobius_poly,
    mobius_poly,
    mobius_poly_from_tutte,
    mobius_poly_recursive,
    opposite_char_poly,
    opposite_char_poly_from_tutte,
    opposite_char_poly_recursive,
)
from chaintutte.matroid import flat_lattice, make_uniform
from chaintutte.polynomial import LaurentPoly, evaluate, from_json, to_json, var
from tests.conftest import ALL, SMALL

s, t = var("s"), var("t")


def test_classical_tutte():
    x, y = var("x1"), var("y1")
    assert classical_tutte(make_uniform(1, 2)) == x + y
    assert classical_tutte(make_uniform(0, 1)) == y


def test_characteristic_poly_of_u23():
    assert characteristic_poly(make_uniform(2, 3)) == t**2 - 3 * t + 2
    assert characteristic_poly(make_uniform(2, 3), variable="s") == s**2 - 3 * s + 2


@pytest.mark.parametrize("name", ALL)
def test_characteristic_routes_agree(matroids, name):
    M = matroids[name]
    assert characteristic_poly(M, route="tutte") == characteristic_poly(M, route="mobius")


def test_characteristic_poly_vanishes_with_a_loop(matroids):
    assert characteristic_poly(matroids["graph-with-loop"]) == 0
    assert characteristic_poly(matroids["U01"], route="mobius") == 0


def test_characteristic_poly_rejects_unknown_route():
    with pytest.raises(InvalidParametersError):
        characteristic_poly(make_uniform(1, 1), route="deletion")


def test_mobius_poly_values():
    assert mobius_poly(make_uniform(1, 1)) == s * t - s + 1
    expected = s**2 * t**2 - 3 * s**2 * t + 2 * s**2 + 3 * s * t - 3 * s + 1
    assert mobius_poly(make_uniform(2, 3)) == expected
    assert mobius_poly(make_uniform(0, 1)) == 1


@pytest.mark.parametrize("name", ALL)
def test_mobius_poly_routes_agree(matroids, name):
    M = matroids[name]
    direct = mobius_poly(M)
    assert mobius_poly_from_tutte(M) == direct
    assert mobius_poly_recursive(M) == direct


@pytest.mark.parametrize("name", ALL)
def test_mobius_poly_is_one_at_origin(matroids, name):
    assert evaluate(mobius_poly(matroids[name]), {"s": 0, "t": 0}) == 1


def test_opposite_char_poly_values():
    assert opposite_char_poly(make_uniform(2, 3)) == t**2 - 3 * t + 2
    assert opposite_char_poly(make_uniform(1, 1)) == t - 1
    assert opposite_char_poly(make_uniform(0, 2)) == 1


@pytest.mark.parametrize("name", ALL)
def test_opposite_char_poly_routes_agree(matroids, name):
    M = matroids[name]
    direct = opposite_char_poly(M)
    assert opposite_char_poly_from_tutte(M) == direct
    assert opposite_char_poly_recursive(M) == direct


@pytest.mark.parametrize("name", [n for n in ALL if n != "U01"])
def test_opposite_char_poly_vanishes_at_one(matroids, name):
    assert evaluate(opposite_char_poly(matroids[name]), {"t": 1}) == 0


def test_j_mobius_poly_values():
    assert j_mobius_poly(make_uniform(1, 1)) == t**3 - t**2 - t + 1
    assert j_mobius_poly(make_uniform(0, 1)) == 1


@pytest.mark.parametrize("name", SMALL)
def test_j_mobius_poly_from_mobius_products(matroids, name):
    L = flat_lattice(matroids[name])
    expected = LaurentPoly.zero()
    for x, y, z in L.three_flags():
        expected = expected + L.mobius(x, y) * L.mobius(y, z) * t ** (L.corank(x) + L.corank(y) + L.corank(z))
    assert j_mobius_poly(matroids[name]) == expected


def test_lattice_invariants_refuse_polymatroids(polymatroid):
    for compute in (mobius_poly, opposite_char_poly, j_mobius_poly, characteristic_poly):
        with pytest.raises(UnsupportedError):
            compute(polymatroid)


@pytest.mark.parametrize("name", ALL)
def test_every_polynomial_survives_json(matroids, name):
    M = matroids[name]
    computed = [
        chain_tutte(M, 2).poly,
        chain_whitney(M, 2).poly,
        universal_chain_tutte(M, 2).poly,
        classical_tutte(M),
        characteristic_poly(M),
        mobius_poly(M),
        opposite_char_poly(M),
        j_mobius_poly(M),
        ford_s_poly(M),
    ]
    for poly in computed:
        assert from_json(to_json(poly)) == poly


def test_recursions_respect_the_budget():
    set_limits(ComputeLimits(max_chains=20))
    # U_{2,4}: 4 * 2^3 = 32 rank queries
    with pytest.raises(BudgetExceededError) as info:
        mobius_poly_recursive(make_uniform(2, 4))
    assert info.value.details == {"chains": 32, "max_chains": 20, "unit": "rank queries"}
    with pytest.raises(BudgetExceededError):
        opposite_char_poly_recursive(make_uniform(2, 4))
