"""Hardness gadgets and the structural checks that come with them.

Clique gadgets ``G[q]`` / ``D_{n,q}`` pad every core vertex with a pendant
(q+1)-clique; leaf gadgets pad the two colour classes with 5 and 12 pendant
leaves.  Gadget vertices are labelled ``f"{v}#{i}"``.  ``H_k`` is the
3-regular non-bipartite graph on ``0..2k-1`` built from the 2k-cycle plus a
parity-dependent chord set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .families import cycle_graph
from .graph import Graph, GraphError, SignedGraph, VertexId, regular_degree
from .norms import DECISION_MARGIN

LEAVES_A = 5
LEAVES_B = 12


def gadget_label(v: VertexId, i: int) -> str:
    return f"{v}#{i}"


@dataclass(frozen=True)
class CliqueGadget:
    """``G[q]``: every core vertex ``v`` gets a (q+1)-clique ``v#1..v#(q+1)`` attached at ``v#1``."""

    core: Graph
    q: int
    graph: Graph
    clique_of: Mapping[VertexId, tuple[str, ...]]

    def metadata(self) -> dict:
        return {
            "family": "gq",
            "q": self.q,
            "core": list(self.core.vertices),
            "clique_of": [[v, list(c)] for v, c in self.clique_of.items()],
        }


@dataclass(frozen=True)
class CycleCliqueGadget:
    """``D_{n,q}``: ``C_n[q]`` plus the edges ``(u#1, v#1)`` for ``(u, v)`` in the matching."""

    n: int
    q: int
    graph: Graph
    matching: tuple[tuple[int, int], ...]
    core: Graph
    clique_of: Mapping[VertexId, tuple[str, ...]]

    def metadata(self) -> dict:
        return {
            "family": "dnq",
            "n": self.n,
            "q": self.q,
            "matching": [list(e) for e in self.matching],
            "core": list(self.core.vertices),
            "clique_of": [[v, list(c)] for v, c in self.clique_of.items()],
        }


@dataclass(frozen=True)
class LeafGadget:
    """Core graph with 5 pendant leaves on each ``a_set`` vertex and 12 on each ``b_set`` vertex."""

    core: Graph
    a_set: tuple[VertexId, ...]
    b_set: tuple[VertexId, ...]
    graph: Graph
    leaves_of: Mapping[VertexId, tuple[str, ...]]

    def metadata(self) -> dict:
        return {
            "family": "hat",
            "core": list(self.core.vertices),
            "a_set": list(self.a_set),
            "b_set": list(self.b_set),
            "leaves_of": [[v, list(c)] for v, c in self.leaves_of.items()],
        }


@dataclass(frozen=True)
class HkGraph:
    k: int
    graph: Graph
    chords: tuple[tuple[int, int], ...]
    degenerate: bool = field(default=False)

    @property
    def even(self) -> tuple[int, ...]:
        return tuple(range(0, 2 * self.k, 2))

    @property
    def odd(self) -> tuple[int, ...]:
        return tuple(range(1, 2 * self.k, 2))


def build_gq(g: Graph, q: int) -> CliqueGadget:
    if q < 1:
        raise ValueError("q must be at least 1")
    verts: list[VertexId] = list(g.vertices)
    edges: list[tuple] = list(g.edges)
    clique_of = {}
    for v in g.vertices:
        clique = tuple(gadget_label(v, i) for i in range(1, q + 2))
        clique_of[v] = clique
        verts.extend(clique)
        edges.append((clique[0], v))
        edges.extend((clique[i], clique[j]) for i in range(q + 1) for j in range(i + 1, q + 1))
    return CliqueGadget(g, q, Graph(verts, edges), MappingProxyType(clique_of))


def build_dnq(n: int, q: int) -> CycleCliqueGadget:
    """``D_{n,q}`` with the matching ``{(2i, 2i+1)}`` on the cycle ``0-1-...-(n-1)-0``."""
    if n % 2:
        raise ValueError("D_{n,q} needs an even n")
    if n < 4:
        raise ValueError("D_{n,q} needs n >= 4")
    base = build_gq(cycle_graph(n), q)
    matching = tuple((2 * i, 2 * i + 1) for i in range(n // 2))
    extra = [(base.clique_of[u][0], base.clique_of[v][0]) for u, v in matching]
    graph = Graph(base.graph.vertices, list(base.graph.edges) + extra)
    return CycleCliqueGadget(n, q, graph, matching, base.core, base.clique_of)


def hk_chords(k: int) -> list[tuple[int, int]]:
    m = 2 * k
    if k % 2 == 0:
        return [(i, i + 2) for i in range(m) if i % 4 in (0, 1) and i + 2 < m]
    chords = [(i, i - 2) for i in range(m) if i % 4 == 2]
    chords += [(i, i + 2) for i in range(m) if i % 4 == 3 and i + 2 < m]
    chords.append((m - 2, 1))
    return chords


def build_hk(k: int) -> HkGraph:
    if k < 2:
        raise ValueError("H_k needs k >= 2")
    chords = hk_chords(k)
    cycle = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
    graph = Graph(range(2 * k), cycle + chords)
    if regular_degree(graph) != 3:
        raise GraphError(f"H_{k} construction is not 3-regular")
    return HkGraph(k, graph, tuple(chords), degenerate=k <= 3)


def build_hat(
    core: Graph,
    a_set: Sequence[VertexId],
    b_set: Sequence[VertexId],
    require_independent: bool = False,
) -> LeafGadget:
    """Attach 5 leaves to each vertex of ``a_set`` and 12 to each of ``b_set``.

    Independence of the two sets is only checked on request: the H-side
    partition (even/odd) is not independent and is accepted as is.
    """
    a, b = tuple(a_set), tuple(b_set)
    sa, sb = set(a), set(b)
    if len(sa) != len(a) or len(sb) != len(b):
        raise ValueError("partition classes contain duplicates")
    if sa & sb:
        raise ValueError("partition classes are not disjoint")
    if sa | sb != set(core.vertices):
        raise ValueError("partition classes do not cover the core")
    if len(a) != len(b):
        raise ValueError("partition classes differ in size")
    if require_independent:
        for u, v in core.edges:
            if (u in sa and v in sa) or (u in sb and v in sb):
                raise ValueError(f"edge ({u!r}, {v!r}) lies inside a partition class")
    verts: list[VertexId] = list(core.vertices)
    edges: list[tuple] = list(core.edges)
    leaves_of = {}
    for v in core.vertices:
        count = LEAVES_A if v in sa else LEAVES_B
        leaves = tuple(gadget_label(v, i) for i in range(1, count + 1))
        leaves_of[v] = leaves
        verts.extend(leaves)
        edges.extend((v, x) for x in leaves)
    return LeafGadget(core, a, b, Graph(verts, edges), MappingProxyType(leaves_of))


def canonical_ab(core: Graph) -> tuple[tuple[VertexId, ...], tuple[VertexId, ...]]:
    """Colour classes of a connected bipartite core; the class of the first vertex comes first."""
    if not core.is_connected():
        raise ValueError("core is not connected")
    coloring = core.two_coloring()
    if coloring is None:
        raise ValueError("core is not bipartite")
    first = coloring[core.vertices[0]]
    a = tuple(v for v in core.vertices if coloring[v] == first)
    b = tuple(v for v in core.vertices if coloring[v] != first)
    return a, b


def componentwise_ab(core: Graph) -> tuple[tuple[VertexId, ...], tuple[VertexId, ...]]:
    """Apply :func:`canonical_ab` to each component and merge (for disconnected cores)."""
    a: list[VertexId] = []
    b: list[VertexId] = []
    for comp in core.components():
        ca, cb = canonical_ab(core.induced(comp))
        a.extend(ca)
        b.extend(cb)
    order = {v: i for i, v in enumerate(core.vertices)}
    return tuple(sorted(a, key=order.__getitem__)), tuple(sorted(b, key=order.__getitem__))


# -- structure of mismatch graphs over restricted alignments -----------------

@dataclass
class StructureReport:
    k: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_mismatch_structure(sg: SignedGraph, k: int) -> StructureReport:
    """Check the parity structure of a mismatch graph ``G_k^sigma - H_k``.

    Every vertex outside the exceptional pair (only ``1`` and ``2k-2`` for
    odd k) has exactly one same-parity neighbour, that edge is negative, and
    its degree is 2, 4 or 6; the exceptional vertices have degree 0, 2, 4 or 6
    and only opposite-parity neighbours.
    """
    special = {1, 2 * k - 2} if k % 2 else set()
    violations = []
    expected = set(range(2 * k))
    if set(sg.vertices) != expected:
        return StructureReport(k, [f"vertex set is not 0..{2 * k - 1}"])
    for x in sg.vertices:
        nbrs = sg.neighbors(x)
        deg = len(nbrs)
        same = [(v, s) for v, s in nbrs if v % 2 == x % 2]
        if x in special:
            if deg not in (0, 2, 4, 6):
                violations.append(f"vertex {x}: degree {deg} not in {{0,2,4,6}}")
            if same:
                violations.append(f"vertex {x}: has same-parity neighbours {[v for v, _ in same]}")
            continue
        if deg not in (2, 4, 6):
            violations.append(f"vertex {x}: degree {deg} not in {{2,4,6}}")
        if len(same) != 1:
            violations.append(f"vertex {x}: {len(same)} same-parity neighbours, expected 1")
        elif same[0][1] != -1:
            violations.append(f"vertex {x}: same-parity edge to {same[0][0]} is not negative")
    return StructureReport(k, violations)


def walk_matrix_p(sg: SignedGraph) -> np.ndarray:
    """Square of the signed adjacency matrix: entry (x, v) sums the signs of 2-walks x -> v."""
    a = sg.adjacency_matrix()
    return a @ a


def degree_four_witnesses(sg: SignedGraph) -> dict[VertexId, VertexId | None]:
    """For each degree-4 vertex x, some v != x with a nonzero walk-matrix entry (or None)."""
    p = walk_matrix_p(sg)
    degs = sg.degrees()
    out = {}
    for i, x in enumerate(sg.vertices):
        if degs[i] != 4:
            continue
        row = p[i].copy()
        row[i] = 0
        nz = np.flatnonzero(row)
        out[x] = sg.vertices[int(nz[0])] if nz.size else None
    return out


def largest_root_2x2(pxx: float, pvv: float, pxv: float) -> float:
    """Largest root of ``(t - pxx)(t - pvv) - pxv**2``."""
    mean = (pxx + pvv) / 2.0
    return mean + float(np.sqrt(((pxx - pvv) / 2.0) ** 2 + pxv * pxv))


def spectral_gap_certificate(sg: SignedGraph) -> tuple[VertexId, VertexId, float] | None:
    """A 2x2 principal block of the walk matrix whose top eigenvalue exceeds 4, if one exists.

    The Rayleigh quotient of the block's eigenvector is a lower bound on the
    spectral norm of the walk matrix, hence on the squared norm of A.
    """
    p = walk_matrix_p(sg)
    best = None
    for i, x in enumerate(sg.vertices):
        if p[i, i] < 4:
            continue
        for j in np.flatnonzero(p[i]):
            if j == i:
                continue
            lam = largest_root_2x2(p[i, i], p[j, j], p[i, j])
            if best is None or lam > best[2]:
                best = (x, sg.vertices[int(j)], lam)
    return best


def check_spectral_gap(sg: SignedGraph, margin: float = DECISION_MARGIN) -> bool:
    """True iff the mismatch graph has max degree < 4 or ``||A||_2**2 > 4 + margin``."""
    degs = sg.degrees()
    if not degs or max(degs) < 4:
        return True
    vals = np.linalg.eigvalsh(sg.adjacency_matrix(dtype=float))
    norm = max(abs(vals[0]), abs(vals[-1]))
    return norm * norm > 4 + margin


# -- vectorised checks over many partition-respecting alignments -------------

@dataclass
class ResBatchSummary:
    """Aggregated outcome of the parity, walk-matrix and spectral checks for a batch of alignments."""

    checked: int = 0
    structure_failures: list[tuple[int, ...]] = field(default_factory=list)
    walk_failures: list[tuple[int, ...]] = field(default_factory=list)
    spectral_failures: list[tuple[int, ...]] = field(default_factory=list)
    min_mmc: int | None = None
    max_degree_hist: dict[int, int] = field(default_factory=dict)

    def merge(self, other: "ResBatchSummary") -> None:
        self.checked += other.checked
        self.structure_failures += other.structure_failures
        self.walk_failures += other.walk_failures
        self.spectral_failures += other.spectral_failures
        if other.min_mmc is not None:
            self.min_mmc = other.min_mmc if self.min_mmc is None else min(self.min_mmc, other.min_mmc)
        for d, c in other.max_degree_hist.items():
            self.max_degree_hist[d] = self.max_degree_hist.get(d, 0) + c


def res_batch_check(g: Graph, hk: HkGraph, perms: np.ndarray, margin: float = DECISION_MARGIN) -> ResBatchSummary:
    """Run the structure, walk-matrix and spectral-gap checks on a batch of core alignments.

    ``perms[b, i]`` is the H_k vertex receiving ``g.vertices[i]``.  Failure
    lists hold the offending permutations.
    """
    k = hk.k
    n = 2 * k
    perms = np.asarray(perms, dtype=np.int64)
    batch = perms.shape[0]
    inv = np.argsort(perms, axis=1)
    ag = g.adjacency_matrix(dtype=np.int8)
    ah = hk.graph.adjacency_matrix(dtype=np.int8)
    # mismatch matrices in H-order
    d = ag[inv[:, :, None], inv[:, None, :]].astype(np.int64) - ah[None, :, :]
    absd = np.abs(d)
    deg = absd.sum(axis=2)
    parity = np.arange(n) % 2
    same = parity[:, None] == parity[None, :]
    same_cnt = (absd * same).sum(axis=2)
    same_neg = ((d == -1) & same).sum(axis=2)
    special = np.zeros(n, dtype=bool)
    if k % 2:
        special[[1, 2 * k - 2]] = True
    even_deg = (deg % 2 == 0) & (deg <= 6)
    ok_regular = even_deg & (deg >= 2) & (same_cnt == 1) & (same_neg == 1)
    ok_special = even_deg & (same_cnt == 0)
    ok = np.where(special[None, :], ok_special, ok_regular).all(axis=1)

    walk = d @ d
    off = walk * (1 - np.eye(n, dtype=np.int64))[None, :, :]
    has_off = (off != 0).any(axis=2)
    walk_ok = (~(deg == 4) | has_off).all(axis=1)

    maxdeg = deg.max(axis=1)
    spec_ok = np.ones(batch, dtype=bool)
    big = np.flatnonzero(maxdeg >= 4)
    if big.size:
        vals = np.linalg.eigvalsh(d[big].astype(float))
        norm = np.maximum(np.abs(vals[:, 0]), np.abs(vals[:, -1]))
        spec_ok[big] = norm * norm > 4 + margin

    hist: dict[int, int] = {}
    for val, cnt in zip(*np.unique(maxdeg, return_counts=True)):
        hist[int(val)] = int(cnt)
    return ResBatchSummary(
        checked=batch,
        structure_failures=[tuple(map(int, perms[i])) for i in np.flatnonzero(~ok)],
        walk_failures=[tuple(map(int, perms[i])) for i in np.flatnonzero(~walk_ok)],
        spectral_failures=[tuple(map(int, perms[i])) for i in np.flatnonzero(~spec_ok)],
        min_mmc=int(maxdeg.min()) if batch else None,
        max_degree_hist=hist,
    )
