"""Core graph types: simple graphs, signed graphs, alignments and norm values.

Vertex labels are arbitrary hashable values (ints, strings such as ``"v#3"``
for gadget vertices, or tuples for Latin-square cells).  Every graph keeps
its vertices in an explicit order fixed at construction; that order is the
deterministic total order used for tie-breaking everywhere in the package.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

import numpy as np

VertexId = Hashable

#: Absolute residual targeted by the symmetric eigensolver.
EIGEN_TOLERANCE = 1e-9


class GraphError(ValueError):
    """Raised when graph data violates a structural invariant."""


class AlignmentError(ValueError):
    """Raised when an alignment is not injective or does not fit its graphs."""


def _edge_key(index: Mapping[VertexId, int], u: VertexId, v: VertexId) -> tuple[int, int]:
    i, j = index[u], index[v]
    return (i, j) if i < j else (j, i)


class Graph:
    """Immutable simple undirected graph with ordered vertex labels."""

    __slots__ = ("_vertices", "_index", "_adj", "_edges", "_masks")

    def __init__(self, vertices: Iterable[VertexId], edges: Iterable[Sequence[VertexId]] = ()):
        verts = tuple(vertices)
        index: dict[VertexId, int] = {}
        for v in verts:
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        adj: list[set[int]] = [set() for _ in verts]
        keys: set[tuple[int, int]] = set()
        for e in edges:
            u, v = e
            if u not in index or v not in index:
                raise GraphError(f"edge ({u!r}, {v!r}) has an endpoint outside the vertex set")
            if u == v:
                raise GraphError(f"self-loop on {u!r}")
            key = _edge_key(index, u, v)
            if key in keys:
                raise GraphError(f"duplicate edge ({u!r}, {v!r})")
            keys.add(key)
            adj[key[0]].add(key[1])
            adj[key[1]].add(key[0])
        self._vertices = verts
        self._index = MappingProxyType(index)
        self._adj = tuple(frozenset(a) for a in adj)
        self._edges = tuple(sorted(keys))
        self._masks: tuple[int, ...] | None = None

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[VertexId, VertexId], ...]:
        vs = self._vertices
        return tuple((vs[i], vs[j]) for i, j in self._edges)

    @property
    def index_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(i, j)`` vertex-index pairs with ``i < j``, sorted."""
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def index(self, v: VertexId) -> int:
        return self._index[v]

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        i, j = self._index[u], self._index[v]
        return j in self._adj[i]

    def neighbors(self, v: VertexId) -> list[VertexId]:
        vs = self._vertices
        return [vs[j] for j in sorted(self._adj[self._index[v]])]

    def neighbor_indices(self, i: int) -> frozenset[int]:
        return self._adj[i]

    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as Python-int bitmasks over vertex indices."""
        if self._masks is None:
            self._masks = tuple(sum(1 << j for j in a) for a in self._adj)
        return self._masks

    def degree(self, v: VertexId) -> int:
        return len(self._adj[self._index[v]])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self._edges:
            ij = np.array(self._edges)
            a[ij[:, 0], ij[:, 1]] = 1
            a[ij[:, 1], ij[:, 0]] = 1
        return a

    def edge_set(self) -> frozenset[frozenset]:
        """Edges as a set of unordered label pairs (convenient for set algebra)."""
        return frozenset(frozenset(e) for e in self.edges)

    # -- derived graphs --------------------------------------------------
    def relabel(self, mapping: Mapping[VertexId, VertexId]) -> "Graph":
        """Image of this graph under a bijective relabelling."""
        new = [mapping[v] for v in self._vertices]
        return Graph(new, ((mapping[u], mapping[v]) for u, v in self.edges))

    def induced(self, keep: Iterable[VertexId]) -> "Graph":
        keep_set = set(keep)
        verts = [v for v in self._vertices if v in keep_set]
        return Graph(verts, ((u, v) for u, v in self.edges if u in keep_set and v in keep_set))

    def components(self) -> list[list[VertexId]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                i = queue.popleft()
                for j in sorted(self._adj[i]):
                    if not seen[j]:
                        seen[j] = True
                        comp.append(j)
                        queue.append(j)
            comps.append([self._vertices[i] for i in sorted(comp)])
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def two_coloring(self) -> dict[VertexId, int] | None:
        """Proper 2-colouring (colour 0 on the first vertex of each component), or None."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                i = queue.popleft()
                for j in self._adj[i]:
                    if color[j] < 0:
                        color[j] = 1 - color[i]
                        queue.append(j)
                    elif color[j] == color[i]:
                        return None
        return {v: c for v, c in zip(self._vertices, color)}

    def disjoint_union(self, other: "Graph", tags: tuple = ("L", "R")) -> "Graph":
        """Disjoint union with labels ``(tag, v)``."""
        a, b = tags
        verts = [(a, v) for v in self._vertices] + [(b, v) for v in other._vertices]
        edges = [((a, u), (a, v)) for u, v in self.edges] + [((b, u), (b, v)) for u, v in other.edges]
        return Graph(verts, edges)


class SignedGraph:
    """Graph with edge weights in {+1, -1}; the shape of a mismatch graph."""

    __slots__ = ("_vertices", "_index", "_pos", "_neg", "_signs")

    def __init__(
        self,
        vertices: Iterable[VertexId],
        pos_edges: Iterable[Sequence[VertexId]] = (),
        neg_edges: Iterable[Sequence[VertexId]] = (),
    ):
        verts = tuple(vertices)
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            raise GraphError("duplicate vertex in signed graph")

        def keys(edges, sign):
            out = set()
            for u, v in edges:
                if u not in index or v not in index:
                    raise GraphError(f"{sign} edge ({u!r}, {v!r}) leaves the vertex set")
                if u == v:
                    raise GraphError(f"self-loop on {u!r}")
                k = _edge_key(index, u, v)
                if k in out:
                    raise GraphError(f"duplicate {sign} edge ({u!r}, {v!r})")
                out.add(k)
            return out

        pos = keys(pos_edges, "positive")
        neg = keys(neg_edges, "negative")
        if pos & neg:
            raise GraphError("an edge cannot be both positive and negative")
        self._vertices = verts
        self._index = MappingProxyType(index)
        self._pos = tuple(sorted(pos))
        self._neg = tuple(sorted(neg))
        self._signs = {**{k: 1 for k in pos}, **{k: -1 for k in neg}}

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    @property
    def pos_edges(self) -> tuple[tuple[VertexId, VertexId], ...]:
        vs = self._vertices
        return tuple((vs[i], vs[j]) for i, j in self._pos)

    @property
    def neg_edges(self) -> tuple[tuple[VertexId, VertexId], ...]:
        vs = self._vertices
        return tuple((vs[i], vs[j]) for i, j in self._neg)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._pos) + len(self._neg)

    def index(self, v: VertexId) -> int:
        return self._index[v]

    def is_empty(self) -> bool:
        return not self._pos and not self._neg

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return (self._vertices, self._pos, self._neg) == (other._vertices, other._pos, other._neg)

    def __hash__(self) -> int:
        return hash((self._vertices, self._pos, self._neg))

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, pos={len(self._pos)}, neg={len(self._neg)})"

    def sign(self, u: VertexId, v: VertexId) -> int:
        return self._signs.get(_edge_key(self._index, u, v), 0)

    def degree(self, v: VertexId) -> int:
        return self.degrees()[self._index[v]]

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for i, j in self._pos + self._neg:
            d[i] += 1
            d[j] += 1
        return d

    def volume(self) -> int:
        return 2 * self.num_edges

    def neighbors(self, v: VertexId) -> list[tuple[VertexId, int]]:
        """``(neighbour, sign)`` pairs in vertex order."""
        i = self._index[v]
        out = []
        for edges, s in ((self._pos, 1), (self._neg, -1)):
            for a, b in edges:
                if a == i:
                    out.append((b, s))
                elif b == i:
                    out.append((a, s))
        out.sort()
        return [(self._vertices[j], s) for j, s in out]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        """The signed adjacency matrix (entries 0, +1, -1)."""
        a = np.zeros((self.n, self.n), dtype=dtype)
        for edges, s in ((self._pos, 1), (self._neg, -1)):
            if edges:
                ij = np.array(edges)
                a[ij[:, 0], ij[:, 1]] = s
                a[ij[:, 1], ij[:, 0]] = s
        return a

    def unsigned(self) -> Graph:
        return Graph(self._vertices, self.pos_edges + self.neg_edges)


class Alignment(Mapping):
    """Injective vertex map from a source graph to a target graph."""

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[VertexId, VertexId] | Iterable[tuple[VertexId, VertexId]]):
        m = dict(mapping)
        if len(set(m.values())) != len(m):
            raise AlignmentError("alignment is not injective")
        self._map = MappingProxyType(m)

    @classmethod
    def identity(cls, vertices: Iterable[VertexId]) -> "Alignment":
        return cls({v: v for v in vertices})

    @classmethod
    def from_indices(cls, g: Graph, h: Graph, perm: Sequence[int]) -> "Alignment":
        """Alignment sending ``g.vertices[i]`` to ``h.vertices[perm[i]]``."""
        hv = h.vertices
        return cls({v: hv[int(p)] for v, p in zip(g.vertices, perm)})

    def __getitem__(self, v: VertexId) -> VertexId:
        return self._map[v]

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __repr__(self) -> str:
        return f"Alignment({dict(self._map)!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Alignment):
            return dict(self._map) == dict(other._map)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    def inverse(self) -> "Alignment":
        return Alignment({t: s for s, t in self._map.items()})

    def restrict(self, domain: Iterable[VertexId]) -> "Alignment":
        return Alignment({v: self._map[v] for v in domain})

    def as_indices(self, g: Graph, h: Graph) -> list[int]:
        return [h.index(self._map[v]) for v in g.vertices]

    def check_bijection(self, g: Graph, h: Graph) -> None:
        """Raise unless this is a bijection ``V(g) -> V(h)``."""
        if g.n != h.n:
            raise AlignmentError(f"order mismatch: {g.n} vs {h.n}")
        if len(self._map) != g.n or any(v not in self._map for v in g.vertices):
            raise AlignmentError("alignment is not total on the source graph")
        if any(t not in h for t in self._map.values()):
            raise AlignmentError("alignment image leaves the target graph")


@dataclass(frozen=True)
class NormValue:
    """A norm value: exact (``lo == hi``) or a certified enclosure ``[lo, hi]``."""

    lo: float
    hi: float
    exact: bool

    def __post_init__(self):
        if self.lo < 0 or self.hi < 0:
            raise ValueError("norm values are non-negative")
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        if self.exact and self.lo != self.hi:
            raise ValueError("an exact value must have lo == hi")

    @classmethod
    def of(cls, value: float) -> "NormValue":
        return cls(value, value, True)

    @classmethod
    def interval(cls, lo: float, hi: float) -> "NormValue":
        return cls(lo, hi, lo == hi)

    @property
    def value(self) -> float:
        if not self.exact:
            raise ValueError("interval-valued norm has no point value")
        return self.lo

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol

    def to_dict(self) -> dict:
        def enc(x):
            if isinstance(x, float) and math.isinf(x):
                return "inf"
            return x

        return {"lo": enc(self.lo), "hi": enc(self.hi), "exact": self.exact}

    @classmethod
    def from_dict(cls, d: Mapping) -> "NormValue":
        def dec(x):
            return math.inf if x == "inf" else x

        return cls(dec(d["lo"]), dec(d["hi"]), bool(d["exact"]))


# -- operations ------------------------------------------------------------

def mismatch_graph(g: Graph, h: Graph, pi: Alignment) -> SignedGraph:
    """Signed graph on ``V(h)``: +1 on edges of ``g^pi`` not in ``h``, -1 on edges of ``h`` not in ``g^pi``.

    Shared (neutral) edges are omitted.
    """
    pi.check_bijection(g, h)
    h_edges = h.edge_set()
    g_image = frozenset(frozenset((pi[u], pi[v])) for u, v in g.edges)
    pos = [tuple(e) for e in g_image - h_edges]
    neg = [tuple(e) for e in h_edges - g_image]
    return SignedGraph(h.vertices, pos, neg)


def degree_profile(sg: SignedGraph) -> dict[VertexId, tuple[int, int]]:
    """Per-vertex ``(positive degree, negative degree)``."""
    pos = [0] * sg.n
    neg = [0] * sg.n
    for u, v in sg.pos_edges:
        pos[sg.index(u)] += 1
        pos[sg.index(v)] += 1
    for u, v in sg.neg_edges:
        neg[sg.index(u)] += 1
        neg[sg.index(v)] += 1
    return {v: (pos[i], neg[i]) for i, v in enumerate(sg.vertices)}


def regular_degree(g: Graph) -> int | None:
    """The common degree if ``g`` is regular, else None."""
    degs = set(g.degrees())
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def check_regular_balance(g: Graph, h: Graph, pi: Alignment) -> bool:
    """True iff every vertex of the mismatch graph has as many +1 as -1 edges.

    Both inputs must be regular of the same degree and order; for such inputs
    the answer is always True, which makes this a self-test.
    """
    dg, dh = regular_degree(g), regular_degree(h)
    if dg is None or dh is None or dg != dh or g.n != h.n:
        raise GraphError("inputs must be regular graphs of the same degree and order")
    profile = degree_profile(mismatch_graph(g, h, pi))
    return all(p == q for p, q in profile.values())


def spectrum(g: Graph) -> list[float]:
    """Adjacency eigenvalues in descending order."""
    if g.n == 0:
        return []
    vals = np.linalg.eigvalsh(g.adjacency_matrix(dtype=float))
    return [float(x) for x in vals[::-1]]


@dataclass(frozen=True)
class Predicates:
    is_bipartite: bool
    degree_sequence: tuple[int, ...]
    volume: int
    is_regular: bool


def basic_predicates(g: Graph) -> Predicates:
    degs = tuple(sorted(g.degrees(), reverse=True))
    return Predicates(
        is_bipartite=g.two_coloring() is not None,
        degree_sequence=degs,
        volume=2 * g.m,
        is_regular=len(set(degs)) <= 1,
    )
