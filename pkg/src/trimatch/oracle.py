"""Brute-force oracles for desk-scale ground truth.

Naive backtracking over the lowest unmatched vertex, no memoization; the
point of an oracle is that it is too simple to be wrong.  Budgets keep the
enumeration from running unbounded on oversized inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Hypergraph, SimpleGraph, VertexId, shadow_graph
from .errors import BudgetExceeded


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 14
    max_branch: int = 5_000_000


DEFAULT_BUDGET = OracleBudget()


class _Nodes:
    __slots__ = ("count", "cap")

    def __init__(self, cap):
        self.count = 0
        self.cap = cap

    def tick(self):
        self.count += 1
        if self.count > self.cap:
            raise BudgetExceeded(f"backtracking exceeded {self.cap} nodes")


def _check_size(n, budget):
    if n > budget.max_vertices:
        raise BudgetExceeded(
            f"instance has {n} vertices, oracle cap is {budget.max_vertices}"
        )


def _enumerate_matchings(adj, active, nodes):
    """Yield every perfect matching of the active induced subgraph."""
    todo = sorted(active)
    if len(todo) % 2 == 1:
        return

    def rec(alive, acc):
        nodes.tick()
        if not alive:
            yield tuple(sorted(acc))
            return
        v = min(alive)
        for u in adj[v]:
            if u in alive and u != v:
                rest = alive - {v, u}
                acc.append((v, u) if v < u else (u, v))
                yield from rec(rest, acc)
                acc.pop()

    yield from rec(set(todo), [])


def all_perfect_matchings(
    g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET, avoid: VertexId | None = None
) -> list[tuple[tuple[int, int], ...]]:
    """Complete, canonically sorted list of perfect matchings of g (of g-v
    when `avoid` is given)."""
    _check_size(g.n, budget)
    active = set(range(g.n))
    if avoid is not None:
        active.discard(avoid)
    nodes = _Nodes(budget.max_branch)
    return sorted(set(_enumerate_matchings(g.adjacency, active, nodes)))


def all_tri_partitions(
    h: Hypergraph, budget: OracleBudget = DEFAULT_BUDGET
) -> list[tuple[tuple[int, ...] | None, tuple[tuple[int, int], ...]]]:
    """All partitions of the vertex set into at most one triangle plus
    shadow-edge pairs.

    For a 3-uniform instance the triangle must be a full hyperedge; for
    larger uniformity any 3-subset of a hyperedge qualifies.
    """
    _check_size(h.n, budget)
    g = shadow_graph(h)
    nodes = _Nodes(budget.max_branch)
    triangles: set[tuple[int, ...]] = set()
    for e in h.hyperedges:
        if h.k == 3:
            if len(e) == 3:
                triangles.add(e)
        else:
            triangles.update(itertools.combinations(e, 3))
    out = []
    for tri in [None] + sorted(triangles):
        active = set(range(h.n))
        if tri is not None:
            active -= set(tri)
        for pm in _enumerate_matchings(g.adjacency, active, nodes):
            out.append((tri, pm))
    return sorted(out, key=lambda tp: (tp[0] is not None, tp[0] or (), tp[1]))


def factor_critical_by_enumeration(
    g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Ground-truth factor-criticality, independent of the matching engine."""
    _check_size(g.n, budget)
    if g.n % 2 == 0:
        return False
    nodes = _Nodes(budget.max_branch)
    for v in range(g.n):
        active = set(range(g.n)) - {v}
        found = False
        for _ in _enumerate_matchings(g.adjacency, active, nodes):
            found = True
            break
        if not found:
            return False
    return True
