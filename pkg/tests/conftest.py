from __future__ import annotations

import pytest

from chaintutte.config import set_limits
from chaintutte.matroid import (
    direct_sum,
    make_boolean,
    make_complete_graph,
    make_cycle_graph,
    make_from_rank_table,
    make_graphic,
    make_uniform,
)
from chaintutte.polynomial import var
from chaintutte.worker_pool import stop_worker_pool


@pytest.fixture(autouse=True)
def _fresh_limits():
    """Every test starts from the default limits and an idle pool."""
    set_limits(None)
    yield
    stop_worker_pool()
    set_limits(None)


def corpus():
    """Small matroids covering loops, coloops, parallel classes and graphs."""
    return {
        "U01": make_uniform(0, 1),
        "U11": make_uniform(1, 1),
        "U12": make_uniform(1, 2),
        "U13": make_uniform(1, 3),
        "U22": make_uniform(2, 2),
        "U23": make_uniform(2, 3),
        "U24": make_uniform(2, 4),
        "B3": make_boolean(3),
        "C4": make_cycle_graph(4),
        "K4": make_complete_graph(4),
        "loop+coloop": direct_sum(make_uniform(1, 1), make_uniform(0, 1)),
        "parallel+coloop": direct_sum(make_uniform(1, 2), make_uniform(1, 1)),
        "graph-with-loop": make_graphic(3, [(0, 1), (1, 2), (0, 2), (1, 1)]),
    }


SMALL = ["U01", "U11", "U12", "U13", "U22", "U23", "U24", "B3", "C4", "loop+coloop", "parallel+coloop", "graph-with-loop"]
ALL = SMALL + ["K4"]


def wide_corpus():
    """Every U_{r,n} with n <= 6 (so B_n = U_{n,n} for n <= 6), K4, K4 - e,
    the cycles C5..C7 and two direct sums."""
    wide = {f"U{r}{n}": make_uniform(r, n) for n in range(1, 7) for r in range(n + 1)}
    wide["K4"] = make_complete_graph(4)
    wide["K4-e"] = make_graphic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    for n in (5, 6, 7):
        wide[f"C{n}"] = make_cycle_graph(n)
    wide["U12+U23"] = direct_sum(make_uniform(1, 2), make_uniform(2, 3))
    wide["U01+U22"] = direct_sum(make_uniform(0, 1), make_uniform(2, 2))
    return wide


WIDE = list(wide_corpus())
WIDE_UPTO_5 = [name for name, M in wide_corpus().items() if M.n <= 5]


@pytest.fixture(scope="session")
def matroids():
    return corpus()


@pytest.fixture(scope="session")
def wide():
    return wide_corpus()


@pytest.fixture
def polymatroid():
    # element 0 has rank 2
    return make_from_rank_table(2, [0, 2, 1, 2])


@pytest.fixture
def xy():
    """``(x1, x2, y1, y2)`` as polynomials."""
    return var("x1"), var("x2"), var("y1"), var("y2")
