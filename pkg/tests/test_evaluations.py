import pytest

from chaintutte.errors import InvalidParametersError, UnsupportedError
from chaintutte.invariants import ConstantEvaluations, EvaluationPair, constant_evaluations
from chaintutte.matroid import make_boolean, make_uniform
from tests.conftest import SMALL


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_every_evaluation_matches_its_count(matroids, name, k):
    record = constant_evaluations(matroids[name], k)
    assert record.disagreements() == {}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_boolean_chain_independent_sets(k):
    n = 3
    record = constant_evaluations(make_boolean(n), k)
    assert record.chain_independent.direct == str((k + 1) ** n)
    assert record.num_bases.tutte == "1"


def test_u24_counts():
    record = constant_evaluations(make_uniform(2, 4), 2)
    assert record.num_bases == EvaluationPair(tutte="6", direct="6")
    assert record.num_independent.direct == "11"
    assert record.eval_1100_parity_pair.direct == "1"


def test_parity_evaluation_with_a_loop(matroids):
    record = constant_evaluations(matroids["graph-with-loop"], 1)
    assert record.eval_1100_parity_pair == EvaluationPair(tutte="0", direct="0")


def test_disagreements_are_reported():
    record = constant_evaluations(make_uniform(1, 2), 2)
    broken = record.model_copy(update={"num_bases": EvaluationPair(tutte="2", direct="3")})
    assert isinstance(broken, ConstantEvaluations)
    assert list(broken.disagreements()) == ["num_bases"]


def test_arguments_are_checked(polymatroid):
    with pytest.raises(InvalidParametersError):
        constant_evaluations(make_uniform(1, 2), 0)
    with pytest.raises(UnsupportedError):
        constant_evaluations(polymatroid, 2)
