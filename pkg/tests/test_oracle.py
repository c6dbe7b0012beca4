"""Brute-force oracle behavior and counts."""

import pytest

from trimatch import (
    OracleBudget,
    all_perfect_matchings,
    all_tri_partitions,
    factor_critical_by_enumeration,
    make_hypergraph,
)
from trimatch.errors import BudgetExceeded

from conftest import complete_graph, cycle_graph


def test_perfect_matching_counts():
    assert len(all_perfect_matchings(complete_graph(4))) == 3
    assert len(all_perfect_matchings(cycle_graph(6))) == 2
    assert all_perfect_matchings(cycle_graph(5)) == []


def test_perfect_matchings_are_canonical_and_distinct():
    ms = all_perfect_matchings(complete_graph(6))
    assert ms == sorted(set(ms))
    assert len(ms) == 15


def test_tri_partition_of_triple(triple):
    parts = all_tri_partitions(triple)
    assert parts == [((0, 1, 2), ())]


def test_tri_partitions_of_four_triples(four_triples):
    parts = all_tri_partitions(four_triples)
    matchings = [p for tri, p in parts if tri is None]
    assert len(matchings) == 3  # the perfect matchings of K4
    assert len(parts) == 3  # a triangle would strand the fourth vertex


def test_tri_partitions_of_fano_nonempty(fano):
    assert all_tri_partitions(fano)


def test_factor_critical_oracle():
    assert factor_critical_by_enumeration(cycle_graph(5))
    assert not factor_critical_by_enumeration(cycle_graph(4))
    assert factor_critical_by_enumeration(complete_graph(3))


def test_budget_enforced():
    big = complete_graph(15)
    with pytest.raises(BudgetExceeded):
        all_perfect_matchings(big)
    with pytest.raises(BudgetExceeded):
        factor_critical_by_enumeration(big)
    h = make_hypergraph(15, [(0, 1, 2)], k=3)
    with pytest.raises(BudgetExceeded):
        all_tri_partitions(h)
    raised = all_perfect_matchings(cycle_graph(16), OracleBudget(max_vertices=16))
    assert len(raised) == 2
