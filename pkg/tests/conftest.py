import itertools

import pytest

from trimatch import make_bipartite, make_graph, make_hypergraph

FANO_LINES = [
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
]


@pytest.fixture
def triple():
    """The hyperedge {0,1,2} with multiplicity 3."""
    return make_hypergraph(3, [(0, 1, 2)] * 3, k=3)


@pytest.fixture
def four_triples():
    """All four 3-subsets of {0,1,2,3}."""
    return make_hypergraph(4, list(itertools.combinations(range(4), 3)), k=3)


@pytest.fixture
def fano():
    """The Fano plane: 7 points, 7 lines, 3-uniform 3-regular."""
    return make_hypergraph(7, FANO_LINES, k=3)


@pytest.fixture
def fano_incidence():
    """Point/line incidence bipartite graph of the Fano plane (A = lines)."""
    edges = [(a, v) for a, line in enumerate(FANO_LINES) for v in line]
    return make_bipartite(7, 7, edges)


def cycle_graph(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return make_graph(n, list(itertools.combinations(range(n), 2)))
