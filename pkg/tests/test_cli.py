import json

import pytest

from chaintutte.cli import main

U12 = '{"type": "uniform", "r": 1, "n": 2}'
U23 = '{"type": "uniform", "r": 2, "n": 3}'
K4 = '{"type": "graph", "vertices": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_chain_tutte_text(capsys):
    code, out, _ = run(capsys, "--matroid", U12, "--format", "text", "chain-tutte", "-k", "2")
    assert code == 0
    assert out.strip() == "x1*x2 + x1*y2 + y1*y2 - x2 - y1 + 1"


def test_chain_tutte_json(capsys):
    code, out, _ = run(capsys, "--matroid", U12, "chain-tutte", "-k", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["form"] == "tutte"
    assert payload["poly"]["terms"] == [
        {"exp": {"x1": 1}, "coeff": "1"},
        {"exp": {"y1": 1}, "coeff": "1"},
    ]


def test_recursive_and_whitney_flags(capsys):
    _, direct, _ = run(capsys, "--matroid", U23, "--format", "text", "chain-tutte", "-k", "2")
    _, recursive, _ = run(capsys, "--matroid", U23, "--format", "text", "chain-tutte", "-k", "2", "--recursive")
    assert direct == recursive
    _, whitney, _ = run(capsys, "--matroid", U12, "--format", "text", "chain-tutte", "-k", "1", "--whitney")
    assert whitney.strip() == "a1 + b1 + 2"
    _, universal, _ = run(capsys, "--matroid", U12, "chain-tutte", "-k", "1", "--universal")
    assert json.loads(universal)["form"] == "universal"


def test_whitney_and_universal_are_exclusive(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--matroid", U12, "chain-tutte", "-k", "1", "--whitney", "--universal"])
    assert info.value.code == 2


def test_evaluate(capsys):
    point = '{"x1": 2, "x2": 1, "y1": 1, "y2": 2}'
    code, out, _ = run(capsys, "--matroid", K4, "evaluate", "-k", "2", "--point", point)
    assert code == 0
    assert json.loads(out)["value"] == "523"


def test_invariants(capsys):
    _, out, _ = run(capsys, "--matroid", U23, "--format", "text", "invariant", "--name", "char-poly")
    assert out.strip() == "t^2 - 3*t + 2"
    _, out, _ = run(capsys, "--matroid", U23, "--format", "text", "invariant", "--name", "g-invariant")
    assert out.strip() == "1,1,0: 6"
    _, out, _ = run(
        capsys,
        "--matroid",
        '{"type": "direct_sum", "parts": [{"type": "uniform", "r": 1, "n": 2}, {"type": "uniform", "r": 1, "n": 1}]}',
        "invariant",
        "--name",
        "expected-codim",
        "--route",
        "recursion",
    )
    assert json.loads(out) == {"invariant": "expected-codim", "route": "recursion", "value": "1"}
    code, out, _ = run(capsys, "--matroid", U23, "invariant", "--name", "constant-evals", "-k", "2")
    assert code == 0
    assert json.loads(out)["num_bases"] == {"tutte": "3", "direct": "3"}


def test_validate(capsys):
    code, out, _ = run(capsys, "--matroid", K4, "validate")
    assert code == 0
    payload = json.loads(out)
    assert payload["num_bases"] == 16
    assert payload["rank"] == 3
    assert payload["simple"] is True


def test_check_valuation_from_file(capsys, tmp_path):
    pairs = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    nerve = {
        "big": {"type": "uniform", "r": 2, "n": 4},
        "cells": [
            {"type": "bases", "n": 4, "bases": [p for p in pairs if p != [0, 1]]},
            {"type": "bases", "n": 4, "bases": [p for p in pairs if p != [2, 3]]},
        ],
        "intersections": {"1,2": {"type": "bases", "n": 4, "bases": [[0, 2], [0, 3], [1, 2], [1, 3]]}},
    }
    path = tmp_path / "split.json"
    path.write_text(json.dumps(nerve), encoding="utf-8")
    code, out, _ = run(capsys, "check-valuation", "--nerve", str(path), "--invariant", "chain-tutte", "-k", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["faces"] == 3


def test_malformed_nerve(capsys):
    code, _, err = run(capsys, "check-valuation", "--nerve", '{"cells": []}', "--invariant", "tutte")
    assert code == 1
    assert json.loads(err.strip().splitlines()[-1])["error"] == "invalid-parameters"


def test_error_json_on_stderr(capsys):
    code, out, err = run(capsys, "--matroid", '{"type": "uniform", "r": 3, "n": 2}', "validate")
    assert code == 1
    assert out == ""
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"] == "invalid-parameters"
    assert payload["details"] == {"r": 3, "n": 2}


def test_missing_matroid(capsys):
    code, _, err = run(capsys, "validate")
    assert code == 1
    assert json.loads(err.strip().splitlines()[-1])["error"] == "invalid-parameters"


def test_budget_exceeded(capsys):
    code, _, err = run(capsys, "--matroid", U23, "--max-chains", "10", "chain-tutte", "-k", "2")
    assert code == 1
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"] == "budget-exceeded"
    assert payload["details"]["chains"] == 27


def test_unknown_invariant(capsys):
    code, _, err = run(capsys, "check-valuation", "--nerve", '{"big": {"type": "uniform", "r": 1, "n": 1}, "cells": []}', "--invariant", "nope")
    assert code == 1
    assert json.loads(err.strip().splitlines()[-1])["error"] == "unknown-invariant"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["chain-tutte"],
        ["--format", "xml", "validate"],
        ["invariant", "--name", "kazhdan-lusztig"],
    ],
)
def test_usage_errors_exit_with_two(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_output_is_identical_for_any_thread_count(capsys, tmp_path):
    config = tmp_path / "limits.yaml"
    config.write_text("chunk_size: 16\n", encoding="utf-8")
    outputs = set()
    for threads in ("1", "2", "8"):
        code, out, _ = run(capsys, "--matroid", K4, "--config", str(config), "--threads", threads, "chain-tutte", "-k", "2")
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_evaluate_keeps_decimals_exact(capsys):
    code, out, _ = run(capsys, "--matroid", U12, "evaluate", "-k", "1", "--point", '{"x1": 0.1, "y1": 1}')
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "11/10"
    assert payload["point"]["x1"] == "1/10"


def test_evaluate_rejects_non_numbers(capsys):
    code, _, err = run(capsys, "--matroid", U12, "evaluate", "-k", "1", "--point", '{"x1": "abc"}')
    assert code == 1
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"] == "invalid-parameters"
    assert payload["details"] == {"variable": "x1"}


def test_large_ground_set_is_refused(capsys):
    big = '{"type": "uniform", "r": 1, "n": 30}'
    code, _, err = run(capsys, "--matroid", big, "invariant", "--name", "mobius-poly")
    assert code == 1
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"] == "budget-exceeded"
    assert payload["details"]["unit"] == "rank queries"
