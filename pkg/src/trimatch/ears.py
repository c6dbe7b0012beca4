"""Odd ear decompositions of factor-critical graphs.

A decomposition is an odd circuit followed by ears: paths (or closed walks)
whose endpoints lie on earlier ears, whose interior vertices are new, and
whose edge counts are odd.  The ear edge sets partition the host's edges;
leftover single edges ride along as trivial ears at the tail.

`odd_ear_decomposition` builds one constructively from a near-perfect
matching, and `maximalize` runs the slicing loop until every odd edge lies on
its own ear.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .core import SimpleGraph, VertexId, canonical_edge
from .errors import (
    InternalError,
    InvariantViolation,
    NotFactorCritical,
    PreconditionViolated,
)
from .matching import AlternatingTree, near_perfect_matching


@dataclass(frozen=True)
class Ear:
    """One ear as its vertex walk.

    Closed ears (including the initial circuit) repeat their start vertex at
    the end of the walk, so edges are always consecutive walk pairs.
    """

    vertices: tuple[VertexId, ...]

    @property
    def u1(self) -> VertexId:
        return self.vertices[0]

    @property
    def u2(self) -> VertexId:
        return self.vertices[-1]

    @property
    def trivial(self) -> bool:
        return len(self.vertices) == 2

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def n_edges(self) -> int:
        return len(self.vertices) - 1

    def edge_walk(self):
        w = self.vertices
        return [canonical_edge(w[i], w[i + 1]) for i in range(len(w) - 1)]


@dataclass(frozen=True)
class EarDecomposition:
    """Ordered ears plus the first-ear label and in-ear position per vertex."""

    host: SimpleGraph
    ears: tuple[Ear, ...]
    labels: tuple[int, ...]
    positions: tuple[int, ...]


def _assemble(host: SimpleGraph, walks) -> EarDecomposition:
    labels = [-1] * host.n
    positions = [-1] * host.n
    ears = []
    for i, w in enumerate(walks):
        for j, v in enumerate(w):
            if labels[v] == -1:
                labels[v] = i
                positions[v] = j
        ears.append(Ear(vertices=tuple(w)))
    return EarDecomposition(
        host=host,
        ears=tuple(ears),
        labels=tuple(labels),
        positions=tuple(positions),
    )


def validate_decomposition(d: EarDecomposition) -> list[str]:
    """All invariant violations of d (empty list means valid)."""
    host = d.host
    errs = []
    if not d.ears:
        return ["decomposition has no ears"]
    used = set()
    placed = set()
    for i, ear in enumerate(d.ears):
        w = ear.vertices
        if len(w) < 2:
            errs.append(f"ear {i} has no edges")
            continue
        if ear.n_edges % 2 == 0:
            errs.append(f"ear {i} has an even number of edges")
        for j in range(len(w) - 1):
            u, v = w[j], w[j + 1]
            if u == v or not host.has_edge(u, v):
                errs.append(f"ear {i} uses non-edge ({u}, {v})")
                continue
            ce = canonical_edge(u, v)
            if ce in used:
                errs.append(f"edge {ce} appears on more than one ear")
            used.add(ce)
        if i == 0:
            if w[0] != w[-1]:
                errs.append("the initial ear is not a closed circuit")
            if ear.n_edges < 3:
                errs.append("the initial circuit has fewer than 3 edges")
            if len(set(w[:-1])) != ear.n_edges:
                errs.append("the initial circuit repeats a vertex")
            placed.update(w[:-1])
        else:
            if w[0] not in placed or w[-1] not in placed:
                errs.append(f"ear {i} endpoints do not lie on earlier ears")
            internal = w[1:-1]
            if len(set(internal)) != len(internal):
                errs.append(f"ear {i} repeats an interior vertex")
            if any(v in placed for v in internal):
                errs.append(f"ear {i} interior revisits a placed vertex")
            placed.update(internal)
    if placed != set(range(host.n)):
        errs.append("ears do not cover the vertex set")
    if used != set(host.edges):
        errs.append("ear edges do not partition the host edge set")
    # label/position book-keeping must match the walks
    labels = [-1] * host.n
    positions = [-1] * host.n
    for i, ear in enumerate(d.ears):
        for j, v in enumerate(ear.vertices):
            if labels[v] == -1:
                labels[v] = i
                positions[v] = j
    if tuple(labels) != d.labels or tuple(positions) != d.positions:
        errs.append("stored labels/positions disagree with the ears")
    return errs


def ear_label(d: EarDecomposition, v: VertexId) -> int:
    """Index of the first ear on which v occurs."""
    if not 0 <= v < d.host.n:
        raise ValueError(f"vertex {v} out of range [0, {d.host.n})")
    return d.labels[v]


def last_nontrivial_ear(d: EarDecomposition) -> int:
    """Largest index of an ear with more than one edge (the circuit counts)."""
    best = 0
    for i, ear in enumerate(d.ears):
        if not ear.trivial:
            best = i
    return best


def is_odd_edge(d: EarDecomposition, edge) -> bool:
    """Odd-edge predicate for an edge ab of the host.

    Both endpoints must first appear on the same ear i; on the circuit that
    is the whole condition, on a later ear both endpoints must additionally
    sit at odd distance from the ear ends on the side away from each other.
    """
    u, v = edge
    if not d.host.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the host")
    if d.labels[u] != d.labels[v]:
        return False
    i = d.labels[u]
    if i == 0:
        return True
    length = d.ears[i].n_edges
    p, q = sorted((d.positions[u], d.positions[v]))
    return p % 2 == 1 and (length - q) % 2 == 1


def dump_decomposition(d: EarDecomposition) -> str:
    lines = []
    for i, ear in enumerate(d.ears):
        kind = "trivial" if ear.trivial else "nontrivial"
        verts = " ".join(str(v) for v in ear.vertices)
        lines.append(f"ear {i} {kind} : {verts}")
    return "\n".join(lines) + "\n"


def odd_ear_decomposition(g: SimpleGraph) -> EarDecomposition:
    """Ear decomposition of a factor-critical graph with all ears odd.

    Uses one near-perfect matching M of G-0 and one alternating search from
    vertex 0.  The circuit is the even alternating path to 0's lowest
    neighbor closed by that edge; each later ear takes the lowest unplaced
    vertex v adjacent to the placed set, follows the alternating path from v
    back into the placed set, and closes with the lowest placed neighbor.
    Remaining edges become trivial ears.
    """
    n = g.n
    if n % 2 == 0:
        raise NotFactorCritical(
            "graphs of even order are not factor-critical", witness=0
        )
    if n == 1:
        raise PreconditionViolated(
            "an ear decomposition needs at least 3 vertices"
        )
    match = near_perfect_matching(g, 0)
    if match is None:
        raise NotFactorCritical("no perfect matching avoiding vertex", witness=0)
    tree = AlternatingTree(g, match, 0)
    w = tree.first_non_outer()
    if w is not None:
        raise NotFactorCritical("no perfect matching avoiding vertex", witness=w)

    start = g.adjacency[0][0]
    circuit = tree.even_path_to(start) + [0]
    walks = [circuit]
    placed = [False] * n
    frontier: list[int] = []

    def place(v):
        placed[v] = True
        for y in g.adjacency[v]:
            if not placed[y]:
                heapq.heappush(frontier, y)

    for v in circuit[:-1]:
        placed[v] = True
    for v in circuit[:-1]:
        for y in g.adjacency[v]:
            if not placed[y]:
                heapq.heappush(frontier, y)
    remaining = n - (len(circuit) - 1)

    while remaining > 0:
        while frontier and placed[frontier[0]]:
            heapq.heappop(frontier)
        if not frontier:
            raise InternalError("ran out of frontier before covering all vertices")
        v = heapq.heappop(frontier)
        path = tree.even_path_to(v)
        j = len(path) - 1
        while not placed[path[j]]:
            j -= 1
        suffix = path[j:]
        if len(suffix) % 2 == 0:
            raise InternalError("ear suffix has odd length; matching closure broken")
        close = min(y for y in g.adjacency[v] if placed[y])
        walks.append(suffix + [close])
        for x in suffix[1:]:
            place(x)
        remaining -= len(suffix) - 1

    covered = set()
    for walk in walks:
        for i in range(len(walk) - 1):
            covered.add(canonical_edge(walk[i], walk[i + 1]))
    for e in g.edges:
        if e not in covered:
            walks.append([e[0], e[1]])

    d = _assemble(g, walks)
    errs = validate_decomposition(d)
    if errs:
        raise InternalError("constructed decomposition invalid: " + "; ".join(errs))
    return d


def maximalize(d: EarDecomposition) -> EarDecomposition:
    """Slice until every odd edge lies on its own ear.

    Trivial ears are normalized to the tail (sorted).  Each round picks the
    lowest ear carrying an off-ear odd edge and within it the lowest such
    edge, and replaces that ear plus the edge's trivial ear by two odd ears.
    The count of nontrivial ears grows by one per round, so the loop ends.
    """
    errs = validate_decomposition(d)
    if errs:
        raise InvariantViolation("; ".join(errs))
    host = d.host
    adj = host.adjacency
    n = host.n

    trivial_set = {
        canonical_edge(e.vertices[0], e.vertices[1])
        for e in d.ears
        if e.trivial
    }
    label = [-1] * n
    pos = [-1] * n
    tok_walk: list[list[int]] = []
    tok_len: list[int] = []
    tok_intro: list[list[int]] = []

    def make_token(walk, is_circuit):
        tok = len(tok_walk)
        tok_walk.append(walk)
        tok_len.append(len(walk) - 1)
        intro = walk[:-1] if is_circuit else walk[1:-1]
        offset = 0 if is_circuit else 1
        for off, v in enumerate(intro):
            label[v] = tok
            pos[v] = offset + off
        tok_intro.append(list(intro))
        return tok

    order = []
    for i, ear in enumerate(e for e in d.ears if not e.trivial):
        order.append(make_token(list(ear.vertices), i == 0))

    idx = 0
    while idx < len(order):
        tok = order[idx]
        length = tok_len[tok]
        best = None
        for w in tok_intro[tok]:
            pw = pos[w]
            for y in adj[w]:
                if y <= w or label[y] != tok:
                    continue
                py = pos[y]
                if idx == 0:
                    diff = (py - pw) % length
                    if diff == 1 or diff == length - 1:
                        continue
                else:
                    lo, hi = (pw, py) if pw < py else (py, pw)
                    if hi - lo == 1:
                        continue
                    if lo % 2 == 0 or (length - hi) % 2 == 0:
                        continue
                e = (w, y)
                if best is None or e < best:
                    best = e
        if best is None:
            idx += 1
            continue

        a, b = best
        if best not in trivial_set:
            raise InternalError(f"off-ear odd edge {best} is not a trivial ear")
        trivial_set.remove(best)
        pa, pb = sorted((pos[a], pos[b]))
        if idx == 0:
            cycle = tok_walk[tok][:-1]
            if (pb - pa) % 2 == 0:
                circuit_walk = cycle[pa : pb + 1] + [cycle[pa]]
                branch_walk = cycle[pb:] + cycle[: pa + 1]
            else:
                circuit_walk = cycle[pb:] + cycle[: pa + 1] + [cycle[pb]]
                branch_walk = cycle[pa : pb + 1]
            t_a = make_token(circuit_walk, True)
            t_b = make_token(branch_walk, False)
        else:
            walk = tok_walk[tok]
            t_a = make_token(walk[: pa + 1] + walk[pb:], False)
            t_b = make_token(walk[pa : pb + 1], False)
        order[idx : idx + 1] = [t_a, t_b]
        # stay on idx: the replacement ear may still carry off-ear odd edges

    final_walks = [tok_walk[t] for t in order]
    final_walks.extend([u, v] for u, v in sorted(trivial_set))
    out = _assemble(host, final_walks)
    errs = validate_decomposition(out)
    if errs:
        raise InternalError("sliced decomposition invalid: " + "; ".join(errs))
    _assert_maximal(out)
    return out


def _assert_maximal(d: EarDecomposition) -> None:
    on_ear = [set(e.edge_walk()) for e in d.ears]
    for e in d.host.edges:
        if is_odd_edge(d, e) and e not in on_ear[d.labels[e[0]]]:
            raise InternalError(f"odd edge {e} is off its ear after slicing")
