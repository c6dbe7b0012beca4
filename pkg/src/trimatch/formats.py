"""Text formats for instances and certificates.

Hypergraph:  `p hyp <n> <m> <k>` then m lines `e v1 ... vk`; repeated
identical lines accumulate multiplicity.
Graph:       `p gr <n> <m>` then `e u v`.
Bipartite:   `p bip <nA> <nB> <m>` then `e a b` with a in A, b in B.
Certificate: optional `triangle v1 v2 v3` lines, `pair u v` lines, and for
kept-edge certificates `keep a b` lines.
Lines starting with `c` are comments; tokens are whitespace-separated and
output is newline-terminated.  Writers emit blocks sorted by smallest member.
"""

from __future__ import annotations

from .core import Hypergraph, SimpleGraph, make_graph, make_hypergraph
from .errors import ParseError
from .matching import BipartiteGraph, make_bipartite


def _tokenized(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {tokens!r}", line=lineno) from exc


def parse_hypergraph(text: str) -> Hypergraph:
    header = None
    edges = []
    for lineno, tokens in _tokenized(text):
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("duplicate problem line", line=lineno)
            if len(tokens) != 5 or tokens[1] != "hyp":
                raise ParseError("expected `p hyp <n> <m> <k>`", line=lineno)
            header = _ints(tokens[2:], lineno)
        elif tokens[0] == "e":
            if header is None:
                raise ParseError("hyperedge before problem line", line=lineno)
            verts = _ints(tokens[1:], lineno)
            if not verts:
                raise ParseError("empty hyperedge", line=lineno)
            edges.append((lineno, verts))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", line=lineno)
    if header is None:
        raise ParseError("missing `p hyp` problem line")
    n, m, k = header
    if len(edges) != m:
        raise ParseError(f"problem line promises {m} hyperedges, found {len(edges)}")
    try:
        return make_hypergraph(n, [v for _, v in edges], k=k)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_graph(text: str) -> SimpleGraph:
    header = None
    edges = []
    for lineno, tokens in _tokenized(text):
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "gr":
                raise ParseError("expected `p gr <n> <m>`", line=lineno)
            header = _ints(tokens[2:], lineno)
        elif tokens[0] == "e":
            vals = _ints(tokens[1:], lineno)
            if len(vals) != 2:
                raise ParseError("edge line needs 2 endpoints", line=lineno)
            edges.append((vals[0], vals[1]))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", line=lineno)
    if header is None:
        raise ParseError("missing `p gr` problem line")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"problem line promises {m} edges, found {len(edges)}")
    try:
        return make_graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_bipartite(text: str) -> BipartiteGraph:
    header = None
    edges = []
    for lineno, tokens in _tokenized(text):
        if tokens[0] == "p":
            if len(tokens) != 5 or tokens[1] != "bip":
                raise ParseError("expected `p bip <nA> <nB> <m>`", line=lineno)
            header = _ints(tokens[2:], lineno)
        elif tokens[0] == "e":
            vals = _ints(tokens[1:], lineno)
            if len(vals) != 2:
                raise ParseError("edge line needs 2 endpoints", line=lineno)
            edges.append((vals[0], vals[1]))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", line=lineno)
    if header is None:
        raise ParseError("missing `p bip` problem line")
    n_a, n_b, m = header
    if len(edges) != m:
        raise ParseError(f"problem line promises {m} edges, found {len(edges)}")
    try:
        return make_bipartite(n_a, n_b, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_certificate(text: str) -> tuple[list, list, list]:
    """Raw (triangles, pairs, keeps) from a certificate file."""
    triangles, pairs, keeps = [], [], []
    for lineno, tokens in _tokenized(text):
        kind, rest = tokens[0], _ints(tokens[1:], lineno)
        if kind == "triangle":
            if len(rest) != 3:
                raise ParseError("triangle needs 3 vertices", line=lineno)
            triangles.append(tuple(rest))
        elif kind == "pair":
            if len(rest) != 2:
                raise ParseError("pair needs 2 vertices", line=lineno)
            pairs.append(tuple(rest))
        elif kind == "keep":
            if len(rest) != 2:
                raise ParseError("keep needs 2 endpoints", line=lineno)
            keeps.append(tuple(rest))
        else:
            raise ParseError(f"unknown certificate line {kind!r}", line=lineno)
    return triangles, pairs, keeps


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"p hyp {h.n} {h.total_multiplicity} {h.k}"]
    for e, mult in zip(h.hyperedges, h.multiplicities):
        row = "e " + " ".join(str(v) for v in e)
        lines.extend([row] * mult)
    return "\n".join(lines) + "\n"


def format_graph(g: SimpleGraph) -> str:
    lines = [f"p gr {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def format_bipartite(bg: BipartiteGraph) -> str:
    lines = [f"p bip {bg.n_a} {bg.n_b} {bg.m}"]
    lines.extend(f"e {a} {b}" for a, b in bg.edges)
    return "\n".join(lines) + "\n"


def format_partition(certs) -> str:
    """Certificate text for one partition or a componentwise list of them.

    All blocks (the triangles included) are emitted sorted by smallest
    member.
    """
    if not isinstance(certs, (list, tuple)):
        certs = [certs]
    blocks = []
    for cert in certs:
        if cert.triangle is not None:
            blocks.append(("triangle", tuple(sorted(cert.triangle))))
        blocks.extend(("pair", p) for p in cert.pairs)
    blocks.sort(key=lambda kb: kb[1][0])
    lines = [f"{kind} " + " ".join(str(v) for v in block) for kind, block in blocks]
    return "\n".join(lines) + ("\n" if lines else "")


def format_lu(lu) -> str:
    lines = [f"keep {a} {b}" for a, b in lu.kept]
    return "\n".join(lines) + ("\n" if lines else "")


def partition_json_object(cert) -> dict:
    """Fixed-field-order JSON object for one partition certificate."""
    return {
        "kind": "partition",
        "triangle": list(cert.triangle) if cert.triangle is not None else None,
        "pairs": [list(p) for p in cert.pairs],
        "keep": None,
    }


def lu_json_object(lu) -> dict:
    return {
        "kind": "lu",
        "triangle": None,
        "pairs": [],
        "keep": [list(e) for e in lu.kept],
    }
