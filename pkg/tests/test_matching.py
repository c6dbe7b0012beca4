"""Matching engine against brute force, plus the bipartite toolbox."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimatch import (
    all_perfect_matchings,
    bipartite_perfect_matching,
    component_bound_check,
    extract_disjoint_perfect_matchings,
    factor_critical_by_enumeration,
    is_factor_critical,
    make_bipartite,
    make_graph,
    maximum_matching,
    perfect_matching,
    perfect_matching_avoiding,
    random_triple_system,
    shadow_graph,
)
from trimatch.errors import ParallelEdges, PreconditionViolated
from trimatch.matching import AlternatingTree, near_perfect_matching

from conftest import complete_graph, cycle_graph


def brute_max_size(g):
    best = 0

    def rec(i, used, size):
        nonlocal best
        best = max(best, size)
        for j in range(i, len(g.edges)):
            u, v = g.edges[j]
            if u not in used and v not in used:
                rec(j + 1, used | {u, v}, size + 1)

    rec(0, frozenset(), 0)
    return best


def assert_valid_matching(g, m):
    covered = [v for p in m.pairs for v in p]
    assert len(set(covered)) == len(covered)
    for u, v in m.pairs:
        assert g.has_edge(u, v)


def test_maximum_matching_examples():
    assert len(maximum_matching(cycle_graph(5))) == 2
    assert len(maximum_matching(complete_graph(4))) == 2
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert len(maximum_matching(star)) == 1


def test_perfect_matching_examples():
    assert perfect_matching(complete_graph(4)).pairs == ((0, 1), (2, 3))
    assert perfect_matching(cycle_graph(5)) is None
    c6 = perfect_matching(cycle_graph(6))
    assert c6.pairs == ((0, 1), (2, 3), (4, 5))


def test_perfect_matching_avoiding_examples():
    assert perfect_matching_avoiding(cycle_graph(5), 0).pairs == ((1, 2), (3, 4))
    assert perfect_matching_avoiding(complete_graph(4), 0) is None
    assert perfect_matching_avoiding(complete_graph(3), 2).pairs == ((0, 1),)
    with pytest.raises(ValueError):
        perfect_matching_avoiding(cycle_graph(5), 7)


def test_is_factor_critical_examples():
    assert is_factor_critical(complete_graph(3))
    assert is_factor_critical(cycle_graph(5))
    assert not is_factor_critical(complete_graph(4))


def test_factor_critical_implies_odd_and_connected():
    for n in (3, 5, 7):
        g = random_shadow(n, seed=n)
        if is_factor_critical(g):
            assert g.n % 2 == 1


def random_shadow(n, seed):
    return shadow_graph(random_triple_system(n, seed, require_connected=True))


def test_exhaustive_small_graphs_match_brute_force():
    for n in range(2, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = make_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            m = maximum_matching(g)
            assert_valid_matching(g, m)
            assert len(m) == brute_max_size(g)


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=2, max_value=10))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return make_graph(n, chosen)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_maximum_matching_matches_brute_force(g):
    m = maximum_matching(g)
    assert_valid_matching(g, m)
    assert len(m) == brute_max_size(g)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_factor_critical_matches_oracle(g):
    assert is_factor_critical(g) == factor_critical_by_enumeration(g)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_avoiding_matches_oracle(g):
    for v in range(g.n):
        engine = perfect_matching_avoiding(g, v)
        reference = all_perfect_matchings(g, avoid=v)
        assert (engine is not None) == bool(reference)
        if engine is not None:
            assert engine.pairs in reference


def test_even_path_tracer_on_factor_critical_graphs():
    for n, seed in [(5, 1), (7, 2), (9, 3), (11, 4), (13, 5)]:
        g = random_shadow(n, seed)
        match = near_perfect_matching(g, 0)
        assert match is not None
        tree = AlternatingTree(g, match, 0)
        for v in range(n):
            assert tree.is_outer(v)
            path = tree.even_path_to(v)  # validity checked internally
            assert path[0] == 0 and path[-1] == v


def test_bipartite_perfect_matching_examples():
    k33 = make_bipartite(3, 3, [(a, b) for a in range(3) for b in range(3)])
    m = bipartite_perfect_matching(k33)
    assert len(m) == 3
    assert len({a for a, _ in m.pairs}) == 3 and len({b for _, b in m.pairs}) == 3
    single = make_bipartite(1, 1, [(0, 0)])
    assert bipartite_perfect_matching(single).pairs == ((0, 0),)
    lonely = make_bipartite(1, 1, [])
    assert bipartite_perfect_matching(lonely) is None


def test_bipartite_rejects_parallel_edges():
    with pytest.raises(ParallelEdges):
        make_bipartite(2, 2, [(0, 0), (0, 0)])


def test_extract_zero_matchings():
    k33 = make_bipartite(3, 3, [(a, b) for a in range(3) for b in range(3)])
    assert extract_disjoint_perfect_matchings(k33, 0) == []


def test_extract_all_three_from_k33():
    k33 = make_bipartite(3, 3, [(a, b) for a in range(3) for b in range(3)])
    ms = extract_disjoint_perfect_matchings(k33, 3)
    assert len(ms) == 3
    union = sorted(p for m in ms for p in m.pairs)
    assert union == sorted(k33.edges)


def test_extract_from_overlaid_cycles():
    # two edge-disjoint 8-cycles on 4+4 vertices overlay to K4,4
    edges = [(i, (i + s) % 4) for s in range(4) for i in range(4)]
    bg = make_bipartite(4, 4, edges)
    (m,) = extract_disjoint_perfect_matchings(bg, 1)
    removed = set(m.pairs)
    deg_a = [0] * 4
    deg_b = [0] * 4
    for a, b in bg.edges:
        if (a, b) not in removed:
            deg_a[a] += 1
            deg_b[b] += 1
    assert deg_a == [3] * 4 and deg_b == [3] * 4


def test_extract_requires_regularity():
    bad = make_bipartite(2, 2, [(0, 0), (0, 1), (1, 0)])
    with pytest.raises(Exception):
        extract_disjoint_perfect_matchings(bad, 1)


def test_extract_disjointness_across_matchings():
    edges = [(i, (i + s) % 5 ) for s in range(4) for i in range(5)]
    bg = make_bipartite(5, 5, edges)
    ms = extract_disjoint_perfect_matchings(bg, 2)
    seen = set()
    for m in ms:
        assert len(m) == 5
        assert not seen & set(m.pairs)
        seen.update(m.pairs)


def test_component_bound_examples(triple, fano, four_triples):
    assert component_bound_check(triple, [0]) == (1, 1)
    count, card = component_bound_check(fano, [0, 1, 2])
    assert card == 3 and count <= 3
    assert component_bound_check(four_triples, [0, 1]) == (1, 2)


def test_component_bound_rejects_empty(triple):
    with pytest.raises(PreconditionViolated):
        component_bound_check(triple, [])


def test_component_bound_exhaustive_small():
    for n, seed in [(7, 1), (8, 2), (9, 3)]:
        h = random_triple_system(n, seed, require_connected=True)
        for size in range(1, 5):
            for xs in itertools.combinations(range(n), size):
                count, card = component_bound_check(h, xs)
                assert count <= card
