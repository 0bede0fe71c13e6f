"""Exact, capped ground-truth oracles: Hamiltonian cycles and graph isomorphism.

Both refuse (raise :class:`OracleCapError`) above their order cap instead of
guessing; they are used as ground truth by the solver and lemma checks.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .graph import Alignment, Graph, VertexId, spectrum

HAMILTONIAN_CAP = 20
ISOMORPHISM_CAP = 12


class OracleCapError(RuntimeError):
    """The instance exceeds the oracle's exhaustive-search cap."""


def hamiltonian_cycle(g: Graph, max_order: int | None = HAMILTONIAN_CAP) -> tuple[VertexId, ...] | None:
    """A Hamiltonian cycle as a vertex sequence (first vertex not repeated), or None.

    Backtracking from the first vertex; a branch is cut as soon as some
    unvisited vertex has fewer than two usable neighbours left.
    """
    n = g.n
    if max_order is not None and n > max_order:
        raise OracleCapError(f"order {n} exceeds Hamiltonian-cycle cap {max_order}")
    if n < 3 or min(g.degrees()) < 2 or not g.is_connected():
        return None
    adj = [sorted(g.neighbor_indices(i)) for i in range(n)]
    visited = [False] * n
    path = [0]
    visited[0] = True

    def usable(v: int) -> int:
        # neighbours that could still sit next to v on the cycle
        return sum(1 for w in adj[v] if not visited[w] or w == path[-1] or w == 0)

    def extend() -> bool:
        cur = path[-1]
        if len(path) == n:
            return 0 in adj[cur]
        for v in range(n):
            if not visited[v] and usable(v) < 2:
                return False
        # fewest onward options first
        options = [w for w in adj[cur] if not visited[w]]
        options.sort(key=lambda w: (sum(1 for x in adj[w] if not visited[x]), w))
        for w in options:
            visited[w] = True
            path.append(w)
            if extend():
                return True
            path.pop()
            visited[w] = False
        return False

    if not extend():
        return None
    return tuple(g.vertices[i] for i in path)


def is_hamiltonian_cycle(g: Graph, cycle) -> bool:
    cyc = list(cycle)
    if len(cyc) != g.n or set(cyc) != set(g.vertices):
        return False
    return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def color_refinement(graphs: list[Graph]) -> list[list[int]]:
    """Stable 1-WL colouring computed jointly, so colours are comparable across graphs."""
    colors = [[len(g.neighbor_indices(i)) for i in range(g.n)] for g in graphs]
    while True:
        sigs = []
        for g, col in zip(graphs, colors):
            sigs.append([
                (col[i], tuple(sorted(col[j] for j in g.neighbor_indices(i))))
                for i in range(g.n)
            ])
        palette = {s: k for k, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        new = [[palette[s] for s in ss] for ss in sigs]
        # signatures contain the old colour, so classes only split; stop when none do
        if len({c for cc in new for c in cc}) == len({c for cc in colors for c in cc}):
            return new
        colors = new


def _spectra_match(g: Graph, h: Graph, tol: float = 1e-6) -> bool:
    return bool(np.allclose(spectrum(g), spectrum(h), atol=tol))


def are_isomorphic(g: Graph, h: Graph, max_order: int | None = ISOMORPHISM_CAP) -> Alignment | None:
    """A witnessing isomorphism ``g -> h`` or None.

    Cheap exact prefilters (order, size, degree sequence, bipartiteness,
    spectrum, colour refinement) run first; only an unresolved instance is
    subject to the order cap of the backtracking search.
    """
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    if (g.two_coloring() is None) != (h.two_coloring() is None):
        return None
    if not _spectra_match(g, h):
        return None
    cg, ch = color_refinement([g, h])
    if Counter(cg) != Counter(ch):
        return None
    n = g.n
    if n == 0:
        return Alignment({})
    if max_order is not None and n > max_order:
        raise OracleCapError(f"order {n} exceeds isomorphism cap {max_order} and prefilters did not decide")

    ng, nh = g.neighbor_masks(), h.neighbor_masks()
    class_size = Counter(cg)
    # smallest colour classes first, then stay connected to what is mapped
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        best = min(remaining, key=lambda i: (-(ng[i] & placed).bit_count(), class_size[cg[i]], i))
        order.append(best)
        remaining.discard(best)
        placed |= 1 << best
    by_color: dict[int, list[int]] = {}
    for x in range(n):
        by_color.setdefault(ch[x], []).append(x)

    perm = [-1] * n
    used = 0
    mapped_g = 0

    def image(mask: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << perm[low.bit_length() - 1]
            mask ^= low
        return out

    def search(depth: int) -> bool:
        nonlocal used, mapped_g
        if depth == n:
            return True
        u = order[depth]
        want = image(ng[u] & mapped_g)
        for x in by_color[cg[u]]:
            if used >> x & 1:
                continue
            if nh[x] & used != want:
                continue
            perm[u] = x
            used |= 1 << x
            mapped_g |= 1 << u
            if search(depth + 1):
                return True
            used &= ~(1 << x)
            mapped_g &= ~(1 << u)
            perm[u] = -1
        return False

    if not search(0):
        return None
    return Alignment.from_indices(g, h, perm)
