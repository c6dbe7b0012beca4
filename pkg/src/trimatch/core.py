"""Hypergraph and simple-graph data model.

A hypergraph is a set of vertices 0..n-1 plus hyperedges (sets of distinct
vertices) carried with positive multiplicities.  The shadow graph of a
hypergraph is the simple graph whose edges are exactly the 2-element subsets
of hyperedges; components, degrees and uniformity/regularity validation all
live here.  Every type is immutable after construction and every operation is
a pure function, so values can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import InvariantViolation

VertexId = int


@dataclass(frozen=True)
class Hypergraph:
    """Vertex/hyperedge incidence structure with hyperedge multiplicities.

    Hyperedges are stored as sorted tuples of distinct vertices in first-seen
    order; repeated hyperedges fold into `multiplicities`.  ``k`` is the
    declared uniformity parameter (hyperedges of other sizes are allowed in
    the data model so that `validate` can report on them).
    """

    n: int
    hyperedges: tuple[tuple[VertexId, ...], ...]
    multiplicities: tuple[int, ...]
    k: int

    @property
    def total_multiplicity(self) -> int:
        return sum(self.multiplicities)


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[VertexId, VertexId], ...]
    adjacency: tuple[tuple[VertexId, ...], ...]
    edge_set: frozenset[tuple[VertexId, VertexId]]

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components as disjoint sorted blocks covering 0..n-1."""

    blocks: tuple[tuple[VertexId, ...], ...]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the uniformity/regularity check against a parameter k."""

    k: int
    uniform: bool
    regular: bool
    first_nonuniform_hyperedge: int | None
    first_irregular_vertex: int | None

    @property
    def ok(self) -> bool:
        return self.uniform and self.regular


def canonical_edge(u: VertexId, v: VertexId) -> tuple[VertexId, VertexId]:
    return (u, v) if u < v else (v, u)


def make_hypergraph(n, hyperedges, k=None, multiplicities=None) -> Hypergraph:
    """Build a canonical Hypergraph, folding repeated hyperedges.

    Raises ValueError on out-of-range vertices or a repeated vertex inside a
    hyperedge (hyperedges are vertex sets).
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    hyperedges = [tuple(e) for e in hyperedges]
    if multiplicities is None:
        multiplicities = [1] * len(hyperedges)
    elif len(multiplicities) != len(hyperedges):
        raise ValueError("multiplicities do not match hyperedges")
    folded: dict[tuple[int, ...], int] = {}
    for e, mult in zip(hyperedges, multiplicities):
        if mult < 1:
            raise ValueError("multiplicities must be positive")
        for v in e:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range [0, {n})")
        ce = tuple(sorted(e))
        if len(set(ce)) != len(ce):
            raise ValueError(f"hyperedge {e} repeats a vertex")
        folded[ce] = folded.get(ce, 0) + mult
    if k is None:
        k = len(next(iter(folded), ()))
    return Hypergraph(
        n=n,
        hyperedges=tuple(folded.keys()),
        multiplicities=tuple(folded.values()),
        k=k,
    )


def make_graph(n, edges) -> SimpleGraph:
    """Build a canonical SimpleGraph; loops rejected, parallel edges folded."""
    canon = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
        canon.add(canonical_edge(u, v))
    ordered = tuple(sorted(canon))
    adj = [[] for _ in range(n)]
    for u, v in ordered:
        adj[u].append(v)
        adj[v].append(u)
    return SimpleGraph(
        n=n,
        edges=ordered,
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        edge_set=frozenset(ordered),
    )


def shadow_graph(h: Hypergraph) -> SimpleGraph:
    """Simple graph on the same vertices whose edges are the within-hyperedge
    pairs; multiplicities collapse to one."""
    pairs = set()
    for e in h.hyperedges:
        pairs.update(itertools.combinations(e, 2))
    return make_graph(h.n, pairs)


def degree(h: Hypergraph, v: VertexId) -> int:
    """Number of hyperedges containing v, counted with multiplicity."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range [0, {h.n})")
    return sum(m for e, m in zip(h.hyperedges, h.multiplicities) if v in e)


def validate(h: Hypergraph, k: int) -> ValidationReport:
    """Report whether h is k-uniform and k-regular, with first violations."""
    bad_edge = None
    for i, e in enumerate(h.hyperedges):
        if len(e) != k:
            bad_edge = i
            break
    deg = [0] * h.n
    for e, m in zip(h.hyperedges, h.multiplicities):
        for v in e:
            deg[v] += m
    bad_vertex = None
    for v in range(h.n):
        if deg[v] != k:
            bad_vertex = v
            break
    return ValidationReport(
        k=k,
        uniform=bad_edge is None,
        regular=bad_vertex is None,
        first_nonuniform_hyperedge=bad_edge,
        first_irregular_vertex=bad_vertex,
    )


def components(g: SimpleGraph) -> ComponentPartition:
    """Connected components, singleton blocks for isolated vertices.

    Blocks are sorted internally and ordered by smallest member.
    """
    seen = [False] * g.n
    blocks = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        block = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append(tuple(sorted(block)))
    return ComponentPartition(blocks=tuple(blocks))


def hereditary_members(h: Hypergraph, size: int) -> list[tuple[VertexId, ...]]:
    """All size-element subsets of hyperedges, deduplicated (multiplicity one)."""
    if size > h.k:
        raise ValueError(f"subset size {size} exceeds uniformity {h.k}")
    if size < 1:
        raise ValueError("subset size must be positive")
    members = set()
    for e in h.hyperedges:
        members.update(itertools.combinations(e, size))
    return sorted(members)


def induced_hypergraph(h: Hypergraph, block) -> tuple[Hypergraph, list[VertexId]]:
    """Sub-hypergraph induced by a component block, reindexed to 0..|block|-1.

    Returns the sub-hypergraph and the list mapping new ids back to old ones.
    Hyperedges must not straddle the block boundary; a straddling hyperedge
    means `block` is not a union of components.
    """
    old_ids = sorted(block)
    new_of = {old: new for new, old in enumerate(old_ids)}
    edges = []
    mults = []
    inside = set(old_ids)
    for e, m in zip(h.hyperedges, h.multiplicities):
        hit = sum(1 for v in e if v in inside)
        if hit == 0:
            continue
        if hit != len(e):
            raise InvariantViolation(
                f"hyperedge {e} straddles the component boundary"
            )
        edges.append(tuple(new_of[v] for v in e))
        mults.append(m)
    sub = make_hypergraph(len(old_ids), edges, k=h.k, multiplicities=mults)
    return sub, old_ids
