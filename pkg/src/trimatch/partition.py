"""Triangle-plus-matching partitions and the regular-bipartite subgraph map.

The vertex set of a 3-uniform 3-regular connected hypergraph splits into a
perfect matching of its shadow graph when |V| is even, and into exactly one
triangle (a hyperedge) plus such a matching when |V| is odd.  The odd case
is driven by a maximal odd ear decomposition: pick an odd edge on the last
nontrivial ear, complete it with a hyperedge to a triangle, and either build
a forced-edge matching from the earlier ears (apex on an earlier ear) or
walk the ear with alternating edges (apex on the same ear).

The same construction keeps, inside a k-regular bipartite graph, an edge set
with all B-degrees 1 and A-degrees 0 or 2 except at most one A-vertex of
degree 3, and reads back on k-uniform k-regular hypergraphs as a partition
into hyperedge 2-subsets plus at most one 3-subset.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    Hypergraph,
    SimpleGraph,
    VertexId,
    canonical_edge,
    components,
    induced_hypergraph,
    make_hypergraph,
    shadow_graph,
    validate,
)
from .ears import (
    EarDecomposition,
    is_odd_edge,
    last_nontrivial_ear,
    maximalize,
    odd_ear_decomposition,
)
from .errors import (
    Disconnected,
    InternalError,
    NotFactorCritical,
    NotRegular,
    NotUniform,
    PreconditionViolated,
)
from .matching import (
    BipartiteGraph,
    Matching,
    extract_disjoint_perfect_matchings,
    make_bipartite,
    matching_on_subgraph,
    perfect_matching,
    require_regular_bipartite,
)


@dataclass(frozen=True)
class TriMatchingPartition:
    """At most one triangle plus disjoint pairs covering the vertex set.

    Certificates produced per component (solve_components) cover only their
    component; coverage of the full vertex set is then checked jointly.
    """

    triangle: tuple[VertexId, VertexId, VertexId] | None
    pairs: tuple[tuple[VertexId, VertexId], ...]
    host: Hypergraph = field(repr=False, compare=False)


@dataclass(frozen=True)
class LuSubgraph:
    """Kept bipartite edges: B-degrees 1, A-degrees 0/2 plus at most one 3."""

    kept: tuple[tuple[VertexId, VertexId], ...]
    host: BipartiteGraph = field(repr=False, compare=False)


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _canon_pairs(pairs):
    return tuple(sorted(canonical_edge(u, v) for u, v in pairs))


def _require_uniform(h: Hypergraph, k: int) -> None:
    for i, e in enumerate(h.hyperedges):
        if len(e) != k:
            raise NotUniform(f"hyperedge {i} has {len(e)} vertices, expected {k}")


def _alternating_cover(walk, t):
    """Every-second edges of walk[0..t] plus odd edges of walk[t..L].

    Covers walk[0..t-1] and walk[t+1..L-1], leaving walk[t] and the far end
    uncovered; t must be even and the walk length odd.
    """
    length = len(walk) - 1
    pairs = [(walk[i], walk[i + 1]) for i in range(0, t, 2)]
    pairs.extend((walk[i], walk[i + 1]) for i in range(t + 1, length - 1, 2))
    return pairs


def matching_with_edge_avoiding(
    d: EarDecomposition, edge, avoid: VertexId
) -> Matching:
    """Perfect matching of host - avoid containing `edge`.

    Requires: edge is an odd edge lying on its (nontrivial) ear, and `avoid`
    first appears on a strictly earlier ear.  Built from a perfect matching
    of the union of the earlier ears minus `avoid`, plus the odd edges of the
    edge's ear and of every later nontrivial ear.
    """
    a, b = edge
    g = d.host
    if not g.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not an edge of the host")
    if d.labels[a] != d.labels[b]:
        raise PreconditionViolated(
            "edge endpoints first appear on different ears"
        )
    k = d.labels[a]
    if not is_odd_edge(d, edge):
        raise PreconditionViolated("not an odd edge")
    ce = canonical_edge(a, b)
    if ce not in set(d.ears[k].edge_walk()):
        raise PreconditionViolated("odd edge does not lie on its ear")
    if not 0 <= avoid < g.n:
        raise ValueError(f"vertex {avoid} out of range [0, {g.n})")
    if d.labels[avoid] >= k:
        raise PreconditionViolated(
            "avoided vertex does not precede the edge's ear"
        )

    prefix_edges = []
    prefix_vertices = set()
    for ear in d.ears[:k]:
        prefix_edges.extend(ear.edge_walk())
        prefix_vertices.update(ear.vertices)
    base = matching_on_subgraph(g, prefix_edges, prefix_vertices, avoid=avoid)
    if base is None:
        raise InternalError(
            "prefix of the decomposition is not factor-critical"
        )
    pairs = list(base.pairs)
    for ear in d.ears[k:]:
        if ear.trivial:
            continue
        walk = ear.vertices
        pairs.extend(
            (walk[i], walk[i + 1]) for i in range(1, ear.n_edges - 1, 2)
        )
    result = Matching(pairs=_canon_pairs(pairs), host=g)
    _check_near_perfect(result, g, avoid, ce)
    return result


def _check_near_perfect(m: Matching, g: SimpleGraph, avoid, must_contain):
    cov = []
    for u, v in m.pairs:
        if not g.has_edge(u, v):
            raise InternalError(f"matching pair ({u}, {v}) is not an edge")
        cov.extend((u, v))
    if len(set(cov)) != len(cov):
        raise InternalError("matching pairs overlap")
    if set(cov) != set(range(g.n)) - {avoid}:
        raise InternalError("matching does not cover exactly host minus one vertex")
    if must_contain is not None and must_contain not in set(m.pairs):
        raise InternalError("matching lost its forced edge")


def _cut_circuit(d: EarDecomposition, e):
    """Open the circuit for the circuit-only case of the odd construction.

    Chooses the first circuit vertex (in cyclic order) at odd distance from
    both ends of e along the arcs avoiding the other end, and cuts there;
    both traversal directions are returned.
    """
    a, b = e
    cycle = list(d.ears[0].vertices[:-1])
    length = len(cycle)
    pa = d.positions[a]
    pb = d.positions[b]
    if (pb - pa) % length != 1:
        # normalize so b follows a in cyclic order
        a, b = b, a
        pa, pb = pb, pa
    if (pb - pa) % length != 1:
        raise InternalError("circuit edge endpoints are not adjacent")
    # path from b forward around to a, avoiding the edge itself
    span = cycle[pb:] + cycle[:pb]
    dist_to_b = {v: i for i, v in enumerate(span)}
    chosen = None
    for u in cycle:
        if u in (a, b):
            continue
        db = dist_to_b[u]
        da = (length - 1) - db
        if da % 2 == 1 and db % 2 == 1:
            chosen = u
            break
    if chosen is None:
        raise InternalError("no circuit vertex at odd distance from both ends")
    j = d.positions[chosen]
    forward = cycle[j:] + cycle[:j] + [chosen]
    # the caller keeps whichever direction puts the apex before a and b
    return forward, forward[::-1]


def _parity_pairs(d: EarDecomposition, k: int, e, apex: VertexId):
    """Matching of host - apex containing e when the apex shares e's ear.

    Orients the ear as u1 .. apex .. a b .. u2 (cutting the circuit when
    k = 0), takes a perfect matching of the earlier ears avoiding u1,
    every-second edges up to the apex, and the odd edges of the rest.
    """
    g = d.host
    ear = d.ears[k]
    if k >= 1:
        candidates = [list(ear.vertices)[::-1]]
    else:
        fwd, bwd = _cut_circuit(d, e)
        candidates = [fwd, bwd]
    walk = None
    for q in candidates:
        # the apex must come first; a cut at the apex itself gives index 0
        if _first_index(q, apex) < min(_first_index(q, e[0]), _first_index(q, e[1])):
            walk = q
            break
    if walk is None:
        raise InternalError("could not orient the ear around the triangle apex")
    ia = _first_index(walk, e[0])
    ib = _first_index(walk, e[1])
    qa, qb = min(ia, ib), max(ia, ib)
    length = len(walk) - 1
    t = _first_index(walk, apex)
    if qb != qa + 1:
        raise InternalError("chosen edge is not consecutive on the oriented ear")
    if t % 2 != 0:
        raise InternalError(
            "even-length guarantee failed: the decomposition is not maximal"
        )
    if (qa - t) % 2 != 1 or (length - qb) % 2 != 1:
        raise InternalError("ear orientation lost the odd-edge parity")

    pairs = []
    if k >= 1:
        prefix_edges = []
        prefix_vertices = set()
        for prev in d.ears[:k]:
            prefix_edges.extend(prev.edge_walk())
            prefix_vertices.update(prev.vertices)
        base = matching_on_subgraph(
            g, prefix_edges, prefix_vertices, avoid=walk[0]
        )
        if base is None:
            raise InternalError(
                "prefix of the decomposition is not factor-critical"
            )
        pairs.extend(base.pairs)
    pairs.extend(_alternating_cover(walk, t))
    return pairs


def _first_index(walk, v):
    for i, x in enumerate(walk):
        if x == v:
            return i
    raise InternalError(f"vertex {v} missing from the oriented ear")


def triangle_partition(h: Hypergraph) -> TriMatchingPartition:
    """One hyperedge as the triangle plus a perfect matching of the rest.

    Needs a 3-uniform hypergraph whose shadow graph is connected and
    factor-critical (NotFactorCritical carries a witness otherwise).
    """
    _require_uniform(h, 3)
    g = shadow_graph(h)
    d = maximalize(odd_ear_decomposition(g))
    return _partition_from_decomposition(h, g, d)


def _partition_from_decomposition(h, g, d) -> TriMatchingPartition:
    k = last_nontrivial_ear(d)
    walk = d.ears[k].vertices
    e = (walk[1], walk[2]) if k >= 1 else (walk[0], walk[1])
    a, b = e
    apex = None
    for he in h.hyperedges:
        if a in he and b in he:
            apex = next(v for v in he if v not in (a, b))
            break
    if apex is None:
        raise InternalError("shadow edge not inside any hyperedge")
    if d.labels[apex] < k:
        m = matching_with_edge_avoiding(d, e, apex)
        ce = canonical_edge(a, b)
        pairs = [p for p in m.pairs if p != ce]
    else:
        pairs = _parity_pairs(d, k, e, apex)
        ce = canonical_edge(a, b)
        pairs = [canonical_edge(u, v) for u, v in pairs if canonical_edge(u, v) != ce]
    cert = TriMatchingPartition(
        triangle=tuple(sorted((a, b, apex))),
        pairs=_canon_pairs(pairs),
        host=h,
    )
    report = verify_partition(h, cert)
    if not report.ok:
        raise InternalError(
            "constructed partition failed verification: "
            + "; ".join(report.violations)
        )
    return cert


def solve(h: Hypergraph) -> TriMatchingPartition:
    """Certificate for a connected 3-uniform 3-regular hypergraph.

    Even vertex count: a perfect matching of the shadow graph (no triangle).
    Odd vertex count: exactly one triangle plus a perfect matching of the
    rest; the shadow graph is factor-critical in that case, and a failure of
    that guarantee is an internal error carrying the witness vertex.
    """
    rep = validate(h, 3)
    if not rep.uniform:
        raise NotUniform(
            f"hyperedge {rep.first_nonuniform_hyperedge} is not a triple"
        )
    if not rep.regular:
        raise NotRegular(f"vertex {rep.first_irregular_vertex} has degree != 3")
    g = shadow_graph(h)
    if len(components(g).blocks) > 1:
        raise Disconnected(
            "the hypergraph is disconnected; solve each component separately"
        )
    if h.n % 2 == 0:
        pm = perfect_matching(g)
        if pm is None:
            raise InternalError(
                "even-order 3-uniform 3-regular shadow without a perfect matching"
            )
        cert = TriMatchingPartition(triangle=None, pairs=pm.pairs, host=h)
        report = verify_partition(h, cert)
        if not report.ok:
            raise InternalError("; ".join(report.violations))
        return cert
    try:
        d = maximalize(odd_ear_decomposition(g))
    except NotFactorCritical as exc:
        raise InternalError(
            f"shadow graph not factor-critical despite regularity: {exc}"
        ) from exc
    return _partition_from_decomposition(h, g, d)


def solve_components(h: Hypergraph, k: int = 3) -> list[TriMatchingPartition]:
    """Per-component certificates (one triangle per odd component)."""
    rep = validate(h, k)
    if not rep.uniform:
        raise NotUniform(
            f"hyperedge {rep.first_nonuniform_hyperedge} has size != {k}"
        )
    if not rep.regular:
        raise NotRegular(
            f"vertex {rep.first_irregular_vertex} has degree != {k}"
        )
    certs = []
    for block in components(shadow_graph(h)).blocks:
        sub, old_ids = induced_hypergraph(h, block)
        sub_cert = solve(sub) if k == 3 else solve_k_uniform(sub, k)
        tri = (
            tuple(sorted(old_ids[v] for v in sub_cert.triangle))
            if sub_cert.triangle is not None
            else None
        )
        pairs = _canon_pairs(
            (old_ids[u], old_ids[v]) for u, v in sub_cert.pairs
        )
        certs.append(TriMatchingPartition(triangle=tri, pairs=pairs, host=h))
    return certs


def _residual_odd_components(bg: BipartiteGraph, removed_pairs) -> int:
    """Number of residual components with an odd number of B-vertices."""
    removed = set(removed_pairs)
    adj = {}
    for a in range(bg.n_a):
        adj[("a", a)] = [
            ("b", b) for b in bg.adj_a[a] if (a, b) not in removed
        ]
    for b in range(bg.n_b):
        adj[("b", b)] = [
            ("a", a) for a in bg.adj_b[b] if (a, b) not in removed
        ]
    seen = set()
    odd = 0
    for node in adj:
        if node in seen:
            continue
        stack = [node]
        seen.add(node)
        b_count = 0
        while stack:
            cur = stack.pop()
            if cur[0] == "b":
                b_count += 1
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if b_count % 2 == 1:
            odd += 1
    return odd


def lu_subgraph(bg: BipartiteGraph, k: int) -> LuSubgraph:
    """Kept edge set with B-degrees 1 and A-degrees 0/2 plus at most one 3.

    Deletes k-3 disjoint perfect matchings, reads the residual as a 3-uniform
    3-regular hypergraph on B (one hyperedge per A-vertex), solves it
    componentwise, and keeps the 2 or 3 edges of the A-vertex assigned to
    each block.  Extraction retries rotated scan orders when the residual
    would split into more odd components than |B| forces.
    """
    deg_k = require_regular_bipartite(bg)
    if deg_k != k:
        raise NotRegular(f"graph is {deg_k}-regular, expected {k}-regular")
    if k < 3:
        raise PreconditionViolated("degree must be at least 3")

    t = k - 3
    target_odd = bg.n_b % 2
    removed: list[Matching] = []
    if t > 0:
        for rotation in range(min(bg.n_a, 24)):
            attempt = extract_disjoint_perfect_matchings(bg, t, _rotation=rotation)
            flat = [p for m in attempt for p in m.pairs]
            if _residual_odd_components(bg, flat) == target_odd:
                removed = attempt
                break
        else:
            removed = extract_disjoint_perfect_matchings(bg, t)
    removed_pairs = {p for m in removed for p in m.pairs}

    slots = []
    for a in range(bg.n_a):
        nbrs = tuple(b for b in bg.adj_a[a] if (a, b) not in removed_pairs)
        if len(nbrs) != 3:
            raise InternalError("residual is not 3-regular on the A side")
        slots.append(nbrs)
    residual_h = make_hypergraph(bg.n_b, slots, k=3)
    certs = solve_components(residual_h)

    by_triple: dict[tuple, list[int]] = {}
    for a, nbrs in enumerate(slots):
        by_triple.setdefault(nbrs, []).append(a)
    slot_of_vertex: dict[int, list[int]] = {}
    for a, nbrs in enumerate(slots):
        for v in nbrs:
            slot_of_vertex.setdefault(v, []).append(a)

    used = [False] * bg.n_a
    kept = []

    def assign(block):
        if len(block) == 3:
            cands = by_triple.get(tuple(block), [])
        else:
            u, v = block
            cands = [a for a in slot_of_vertex.get(u, []) if v in slots[a]]
        for a in sorted(cands):
            if not used[a]:
                used[a] = True
                kept.extend((a, x) for x in block)
                return
        raise InternalError(f"no free A-vertex carries block {block}")

    blocks = []
    for cert in certs:
        if cert.triangle is not None:
            blocks.append(tuple(cert.triangle))
        blocks.extend(cert.pairs)
    for block in sorted(blocks, key=lambda blk: blk[0]):
        assign(block)

    lu = LuSubgraph(kept=tuple(sorted(kept)), host=bg)
    report = verify_lu(bg, lu)
    if not report.ok:
        raise InternalError("; ".join(report.violations))
    return lu


def solve_k_uniform(h: Hypergraph, k: int) -> TriMatchingPartition:
    """Partition into hyperedge 2-subsets plus at most one 3-subset.

    Valid for connected k-uniform k-regular hypergraphs with k >= 3; routed
    through the bipartite construction on the vertex/hyperedge incidence
    graph (one A-vertex per hyperedge multiplicity copy).
    """
    if k < 3:
        raise PreconditionViolated("uniformity must be at least 3")
    rep = validate(h, k)
    if not rep.uniform:
        raise NotUniform(
            f"hyperedge {rep.first_nonuniform_hyperedge} has size != {k}"
        )
    if not rep.regular:
        raise NotRegular(f"vertex {rep.first_irregular_vertex} has degree != {k}")
    if len(components(shadow_graph(h)).blocks) > 1:
        raise Disconnected(
            "the hypergraph is disconnected; solve each component separately"
        )
    edges = []
    slot = 0
    for he, mult in zip(h.hyperedges, h.multiplicities):
        for _ in range(mult):
            edges.extend((slot, v) for v in he)
            slot += 1
    bg = make_bipartite(slot, h.n, edges)
    lu = lu_subgraph(bg, k)

    by_slot: dict[int, list[int]] = {}
    for a, b in lu.kept:
        by_slot.setdefault(a, []).append(b)
    triangle = None
    pairs = []
    for a, block in sorted(by_slot.items()):
        if len(block) == 2:
            pairs.append(tuple(sorted(block)))
        elif len(block) == 3:
            if triangle is not None:
                raise InternalError(
                    "construction produced two 3-blocks on a connected instance"
                )
            triangle = tuple(sorted(block))
        else:
            raise InternalError("kept degrees outside {2, 3}")
    cert = TriMatchingPartition(
        triangle=triangle, pairs=_canon_pairs(pairs), host=h
    )
    report = verify_partition(h, cert)
    if not report.ok:
        raise InternalError("; ".join(report.violations))
    return cert


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def verify_partition(h: Hypergraph, cert) -> VerificationReport:
    """Check a partition certificate against its instance.

    Accepts a TriMatchingPartition, a list of them (componentwise), or a raw
    (triangles, pairs) tuple as parsed from a certificate file.
    """
    if isinstance(cert, TriMatchingPartition):
        triangles = [cert.triangle] if cert.triangle is not None else []
        pairs = list(cert.pairs)
    elif isinstance(cert, (list, tuple)) and all(
        isinstance(c, TriMatchingPartition) for c in cert
    ) and cert:
        triangles = [c.triangle for c in cert if c.triangle is not None]
        pairs = [p for c in cert for p in c.pairs]
    else:
        triangles, pairs = cert
        triangles = list(triangles)
        pairs = list(pairs)

    violations = []
    for block in list(triangles) + list(pairs):
        for v in block:
            if not 0 <= v < h.n:
                raise ValueError(f"certificate vertex {v} out of range [0, {h.n})")

    seen: set[int] = set()
    dup = False
    for block in list(triangles) + list(pairs):
        for v in block:
            if v in seen:
                dup = True
            seen.add(v)
    if dup:
        violations.append("blocks are not disjoint")
    if seen != set(range(h.n)):
        missing = sorted(set(range(h.n)) - seen)
        violations.append(f"blocks do not cover the vertex set (missing {missing[:5]})")

    hyperedge_sets = [frozenset(e) for e in h.hyperedges]
    for tri in triangles:
        tset = set(tri)
        if len(tset) != 3:
            violations.append(f"triangle {tri} does not have 3 distinct vertices")
            continue
        if h.k == 3:
            if frozenset(tset) not in hyperedge_sets:
                violations.append(f"triangle {tuple(sorted(tri))} is not a hyperedge")
        else:
            if not any(tset <= hs for hs in hyperedge_sets):
                violations.append(
                    f"triangle {tuple(sorted(tri))} is not inside any hyperedge"
                )
    for u, v in pairs:
        if u == v or not any({u, v} <= hs for hs in hyperedge_sets):
            violations.append(f"pair ({u}, {v}) is not inside any hyperedge")

    # at most one triangle per shadow component
    comp_of = {}
    for i, block in enumerate(components(shadow_graph(h)).blocks):
        for v in block:
            comp_of[v] = i
    per_comp: dict[int, int] = {}
    for tri in triangles:
        cids = {comp_of.get(v) for v in tri}
        if len(cids) == 1:
            cid = cids.pop()
            per_comp[cid] = per_comp.get(cid, 0) + 1
    for cid, cnt in per_comp.items():
        if cnt > 1:
            violations.append(f"component {cid} carries {cnt} triangles")
    return VerificationReport(violations=tuple(violations))


def verify_lu(bg: BipartiteGraph, cert) -> VerificationReport:
    """Check kept-edge degrees: B all 1; A in {0, 2} plus at most one 3 per
    component of the input graph."""
    kept = cert.kept if isinstance(cert, LuSubgraph) else tuple(cert)
    violations = []
    edge_set = set(bg.edges)
    deg_a = [0] * bg.n_a
    deg_b = [0] * bg.n_b
    seen = set()
    for a, b in kept:
        if not (0 <= a < bg.n_a and 0 <= b < bg.n_b):
            raise ValueError(f"kept edge ({a}, {b}) out of range")
        if (a, b) not in edge_set:
            violations.append(f"kept edge ({a}, {b}) is not an edge of the graph")
            continue
        if (a, b) in seen:
            violations.append(f"kept edge ({a}, {b}) repeated")
        seen.add((a, b))
        deg_a[a] += 1
        deg_b[b] += 1
    for b, dv in enumerate(deg_b):
        if dv != 1:
            violations.append(f"B-vertex {b} has kept degree {dv}, expected 1")
    comp = _bipartite_components(bg)
    three_per_comp: dict[int, int] = {}
    for a, dv in enumerate(deg_a):
        if dv == 3:
            cid = comp[("a", a)]
            three_per_comp[cid] = three_per_comp.get(cid, 0) + 1
        elif dv not in (0, 2):
            violations.append(f"A-vertex {a} has kept degree {dv}")
    for cid, cnt in three_per_comp.items():
        if cnt > 1:
            violations.append(f"component {cid} has {cnt} degree-3 A-vertices")
    return VerificationReport(violations=tuple(violations))


def _bipartite_components(bg: BipartiteGraph) -> dict:
    comp = {}
    cid = 0
    for start_a in range(bg.n_a):
        if ("a", start_a) in comp:
            continue
        stack = [("a", start_a)]
        comp[("a", start_a)] = cid
        while stack:
            side, v = stack.pop()
            nbrs = bg.adj_a[v] if side == "a" else bg.adj_b[v]
            other = "b" if side == "a" else "a"
            for w in nbrs:
                if (other, w) not in comp:
                    comp[(other, w)] = cid
                    stack.append((other, w))
        cid += 1
    for b in range(bg.n_b):
        if ("b", b) not in comp:
            comp[("b", b)] = cid
            cid += 1
    return comp


def verify_certificate(instance, cert) -> VerificationReport:
    """Dispatch on certificate type (partition vs kept-edge)."""
    if isinstance(cert, LuSubgraph) or isinstance(instance, BipartiteGraph):
        return verify_lu(instance, cert)
    return verify_partition(instance, cert)
