"""Named graph families and small exhaustive catalogs used as fixtures."""

from __future__ import annotations

import itertools
import re
from typing import Callable

import numpy as np

from .graph import Graph
from .oracles import are_isomorphic


def complete_graph(n: int) -> Graph:
    return Graph(range(n), itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph(range(leaves + 1), ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} on ``0..a-1`` and ``a..a+b-1``."""
    return Graph(range(a + b), ((i, a + j) for i in range(a) for j in range(b)))


def prism_graph(k: int = 3) -> Graph:
    """Two k-cycles joined by a perfect matching (the triangular prism for k=3)."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(range(2 * k), edges)


def hypercube(d: int = 3) -> Graph:
    n = 1 << d
    return Graph(range(n), ((i, i ^ (1 << b)) for i in range(n) for b in range(d) if i < i ^ (1 << b)))


def moebius_ladder(n: int) -> Graph:
    """Cycle on n (even) vertices plus all long diagonals; n=8 is the Wagner graph."""
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)] + [(i, i + n // 2) for i in range(n // 2)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def _cayley_z4z4(connection: list[tuple[int, int]]) -> Graph:
    verts = [(a, b) for a in range(4) for b in range(4)]
    edges = set()
    for a, b in verts:
        for da, db in connection:
            w = ((a + da) % 4, (b + db) % 4)
            edges.add(frozenset(((a, b), w)))
    return Graph(verts, (tuple(sorted(e)) for e in edges))


def shrikhande_graph() -> Graph:
    return _cayley_z4z4([(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)])


def rook_graph(k: int = 4) -> Graph:
    """The k x k rook's graph: cells adjacent when they share a row or a column."""
    verts = [(a, b) for a in range(k) for b in range(k)]
    edges = [(u, v) for u, v in itertools.combinations(verts, 2) if u[0] == v[0] or u[1] == v[1]]
    return Graph(verts, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union relabelled to consecutive integers, components in argument order."""
    verts: list[int] = []
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        verts.extend(range(offset, offset + g.n))
        edges.extend((offset + i, offset + j) for i, j in g.index_edges)
        offset += g.n
    return Graph(verts, edges)


def figure_pair() -> tuple[Graph, Graph]:
    """Path u1-u2-u3 plus isolated u4, and path v2-v3-v4 plus isolated v1."""
    g = Graph(["u1", "u2", "u3", "u4"], [("u1", "u2"), ("u2", "u3")])
    h = Graph(["v1", "v2", "v3", "v4"], [("v2", "v3"), ("v3", "v4")])
    return g, h


# -- exhaustive catalog of connected cubic graphs ----------------------------

def _invariant(g: Graph) -> tuple:
    a = g.adjacency_matrix()
    a2 = a @ a
    a3 = a2 @ a
    tri = tuple(sorted(np.diag(a3) // 2))
    return (tri, tuple(np.round(np.linalg.eigvalsh(a.astype(float)), 6)))


def cubic_graphs(n: int, connected: bool = True) -> list[Graph]:
    """All cubic graphs on ``n`` vertices up to isomorphism, on labels ``0..n-1``.

    Orderly backtracking: always complete the lowest vertex with spare
    degree, and wire in untouched vertices in increasing order only.
    Duplicates are removed with the exact isomorphism oracle.
    """
    if n % 2 or n < 4:
        return []
    deg = [0] * n
    adj = [0] * n
    found: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []

    def emit():
        g = Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1])
        if connected and not g.is_connected():
            return
        bucket = found.setdefault(_invariant(g), [])
        if any(are_isomorphic(g, other, max_order=None) is not None for other in bucket):
            return
        bucket.append(g)
        out.append(g)

    def rec(touched: int):
        u = next((i for i in range(n) if deg[i] < 3), None)
        if u is None:
            emit()
            return
        # u may open a new component, in which case it counts as touched
        touched = max(touched, u + 1)
        # candidates: touched vertices after u plus the first untouched one
        cands = [v for v in range(u + 1, touched) if deg[v] < 3 and not adj[u] >> v & 1]
        if touched < n:
            cands.append(touched)
        for v in cands:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            rec(max(touched, v + 1))
            deg[u] -= 1
            deg[v] -= 1
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)

    rec(1)
    return out


# -- name registry ---------------------------------------------------------

_NAMED: dict[str, Callable[[], Graph]] = {
    "petersen": petersen_graph,
    "shrikhande": shrikhande_graph,
    "rook4": lambda: rook_graph(4),
    "cube": lambda: hypercube(3),
    "q3": lambda: hypercube(3),
    "prism": lambda: prism_graph(3),
    "wagner": lambda: moebius_ladder(8),
    "k33": lambda: complete_bipartite(3, 3),
}


def named_graph(name: str) -> Graph:
    """Resolve a fixture name such as ``k4``, ``c6``, ``p3``, ``star3``, ``k3,3`` or ``petersen``."""
    key = name.lower().strip()
    if key in _NAMED:
        return _NAMED[key]()
    patterns: list[tuple[str, Callable[..., Graph]]] = [
        (r"k(\d+),(\d+)", lambda a, b: complete_bipartite(int(a), int(b))),
        (r"k(\d+)", lambda a: complete_graph(int(a))),
        (r"c(\d+)", lambda a: cycle_graph(int(a))),
        (r"p(\d+)", lambda a: path_graph(int(a))),
        (r"star(\d+)", lambda a: star_graph(int(a))),
        (r"cubic(\d+)-(\d+)", lambda a, b: cubic_graphs(int(a))[int(b)]),
    ]
    for pat, make in patterns:
        m = re.fullmatch(pat, key)
        if m:
            return make(*m.groups())
    raise KeyError(f"unknown graph fixture {name!r}")


def fixture_corpus(max_order: int = 10) -> dict[str, Graph]:
    """Named small graphs used across checks, each isomorphism class listed once, by order."""
    g1, h1 = figure_pair()
    items: list[tuple[str, Graph]] = [("figure-g", g1), ("figure-h", h1)]
    for n in range(4, max_order + 1):
        items += [(f"c{n}", cycle_graph(n)), (f"p{n}", path_graph(n)), (f"star{n - 1}", star_graph(n - 1))]
        if n <= 6:
            items.append((f"k{n}", complete_graph(n)))
        if n % 2 == 0 and n <= 8:
            cubic = cubic_graphs(n)
            items += [(f"cubic{n}-{i}", c) for i, c in enumerate(cubic) if not (n == 4 and i == 0)]
    if max_order >= 10:
        items += [("petersen", petersen_graph()), ("prism5", prism_graph(5))]
    return {name: g for name, g in items if g.n <= max_order}


def regular_corpus() -> dict[str, Graph]:
    """Regular fixtures, including the 16-vertex strongly regular pair."""
    out = {name: g for name, g in fixture_corpus(10).items() if len(set(g.degrees())) == 1}
    out["2k4"] = disjoint_union(complete_graph(4), complete_graph(4))
    out["shrikhande"] = shrikhande_graph()
    out["rook4"] = rook_graph(4)
    return out
