"""Text and JSON serialisation for graphs, signed graphs and alignments.

Text format::

    p <n> <m>
    v <label>        (one per vertex, in order; optional)
    e <label> <label>

Labels are written as compact JSON (so ``3``, ``"v#1"`` and ``[0,"2_s"]``
all survive); on input a token that is not valid JSON is read as a bare
string.  JSON arrays decode to tuples.  Without ``v`` lines the vertices
are ``1..n``, or ``0..n-1`` when some edge mentions ``0``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .graph import Alignment, Graph, GraphError, SignedGraph, VertexId

_DECODER = json.JSONDecoder()


def encode_label(v: VertexId) -> Any:
    if isinstance(v, tuple):
        return [encode_label(x) for x in v]
    return v


def decode_label(x: Any) -> VertexId:
    if isinstance(x, list):
        return tuple(decode_label(y) for y in x)
    return x


def _dump_token(v: VertexId) -> str:
    token = json.dumps(encode_label(v), separators=(",", ":"), ensure_ascii=False)
    if any(ch.isspace() for ch in token):
        raise GraphError(f"label {v!r} contains whitespace and cannot be written in text format")
    return token


def _split_tokens(text: str) -> list[VertexId]:
    out = []
    i, n = 0, len(text)
    while i < n:
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        try:
            value, end = _DECODER.raw_decode(text, i)
            if end < n and not text[end].isspace():
                raise ValueError
        except ValueError:
            end = i
            while end < n and not text[end].isspace():
                end += 1
            value = text[i:end]
        out.append(decode_label(value))
        i = end
    return out


def graph_to_text(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"v {_dump_token(v)}" for v in g.vertices]
    lines += [f"e {_dump_token(u)} {_dump_token(v)}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    header = None
    verts: list[VertexId] = []
    edges: list[tuple[VertexId, VertexId]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        kind, _, rest = line.partition(" ")
        toks = _split_tokens(rest)
        if kind == "p":
            nums = [t for t in toks if isinstance(t, int)]
            if len(nums) < 2:
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            header = (nums[-2], nums[-1])
        elif kind == "v":
            if len(toks) != 1:
                raise GraphError(f"line {lineno}: expected one label")
            verts.append(toks[0])
        elif kind == "e":
            if len(toks) != 2:
                raise GraphError(f"line {lineno}: expected two labels")
            edges.append((toks[0], toks[1]))
        else:
            raise GraphError(f"line {lineno}: unknown record {kind!r}")
    if header is None:
        raise GraphError("missing 'p <n> <m>' header")
    n, m = header
    if not verts:
        zero_based = any(0 in e for e in edges)
        verts = list(range(n)) if zero_based else list(range(1, n + 1))
    if len(verts) != n:
        raise GraphError(f"header says {n} vertices, found {len(verts)}")
    if len(edges) != m:
        raise GraphError(f"header says {m} edges, found {len(edges)}")
    return Graph(verts, edges)


def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": [encode_label(v) for v in g.vertices],
        "edges": [[encode_label(u), encode_label(v)] for u, v in g.edges],
    }


def graph_from_json(data: dict) -> Graph:
    verts = [decode_label(v) for v in data["vertices"]]
    return Graph(verts, [(decode_label(u), decode_label(v)) for u, v in data["edges"]])


def signed_to_json(sg: SignedGraph) -> dict:
    return {
        "vertices": [encode_label(v) for v in sg.vertices],
        "pos": [[encode_label(u), encode_label(v)] for u, v in sg.pos_edges],
        "neg": [[encode_label(u), encode_label(v)] for u, v in sg.neg_edges],
    }


def signed_from_json(data: dict) -> SignedGraph:
    def edges(key):
        return [(decode_label(u), decode_label(v)) for u, v in data.get(key, [])]

    return SignedGraph([decode_label(v) for v in data["vertices"]], edges("pos"), edges("neg"))


def alignment_to_json(pi: Alignment) -> list:
    return [[encode_label(u), encode_label(v)] for u, v in pi.items()]


def alignment_from_json(data: list) -> Alignment:
    return Alignment((decode_label(u), decode_label(v)) for u, v in data)


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_graph(path: str | Path) -> Graph:
    """Read a graph from ``.json`` or text format (chosen by content)."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(text))
    return graph_from_text(text)


def save_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("json" if path.suffix == ".json" else "text")
    path.write_text(dumps(graph_to_json(g)) if fmt == "json" else graph_to_text(g))
