import gzip
from pathlib import Path

import pytest

from unavoidable.graphs import Graph
from unavoidable.io import decode_graph6

DATA = Path(__file__).parent / "data"


def corpus_lines(name: str) -> list[str]:
    path = DATA / name
    if not path.exists():
        pytest.skip(f"vendored corpus {name} missing; run tools/make_corpus.py")
    opener = gzip.open if name.endswith(".gz") else open
    with opener(path, "rt") as fh:
        return [ln.strip() for ln in fh if ln.strip()]


def corpus_graphs(name: str) -> list[Graph]:
    return [decode_graph6(ln) for ln in corpus_lines(name)]


@pytest.fixture(scope="session")
def all_graphs_upto7():
    return corpus_graphs("allgraphs_upto7.g6")


@pytest.fixture(scope="session")
def two_connected_upto8():
    return corpus_graphs("corpus_2conn_upto8.g6")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def explicit_ladder(lx: int, ly: int, rungs):
    """Host graph whose rails are 0..lx-1 and lx..lx+ly-1 with sigma, tau,
    and the given extra (x_index, y_index) rungs."""
    from unavoidable.ladders import MessyLadder

    X = list(range(lx))
    Y = list(range(lx, lx + ly))
    edges = [(a, b) for a, b in zip(X, X[1:])] + [(a, b) for a, b in zip(Y, Y[1:])]
    edges += [(X[0], Y[0]), (X[-1], Y[-1])]
    edges += [(X[i], Y[j]) for i, j in rungs]
    G = Graph.from_edges(lx + ly, edges)
    return MessyLadder(G, tuple(X), tuple(Y))


def tight_cross_ladder(k: int):
    """Rails of length 2k+1 carrying k pairwise independent full
    non-degenerate crosses packed back to back: cross i pairs the rungs
    (x_{2i}, y_{2i+2}) and (x_{2i+2}, y_{2i}); every span has two edges.
    Cross-free windows stay small, so cleaning must resolve."""
    rungs = []
    for i in range(k):
        rungs.append((2 * i, 2 * i + 2))
        rungs.append((2 * i + 2, 2 * i))
    return explicit_ladder(2 * k + 1, 2 * k + 1, rungs)
