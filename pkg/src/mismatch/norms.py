"""Mismatch norms of a fixed alignment: edit count, MMC, and l_p operator norms.

For p in {1, 2, inf} the norms are computed exactly.  For every other p the
exact operator norm is out of reach, so the result is the certified
enclosure ``[max(q**(1/p), q**(1-1/p)), q]`` with ``q`` the maximum mismatch
count, optionally with a sharper lower end from explicit test vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Alignment, Graph, NormValue, VertexId, mismatch_graph

#: Margin for strict spectral comparisons such as ``norm > 2``.
DECISION_MARGIN = 1e-6


def as_exponent(p) -> float:
    """Validate an exponent: a real >= 1, or infinity (``"inf"`` accepted)."""
    if isinstance(p, str):
        p = math.inf if p.strip().lower() in {"inf", "infinity", "∞"} else float(p)
    p = float(p)
    if math.isnan(p) or p < 1:
        raise ValueError(f"exponent must satisfy p >= 1, got {p}")
    return p


@dataclass(frozen=True)
class MmcValue:
    value: int
    witness: VertexId | None


def mismatch_matrix(g: Graph, h: Graph, pi: Alignment) -> np.ndarray:
    """``A_{g^pi} - A_h`` indexed by the vertex order of ``h``."""
    pi.check_bijection(g, h)
    perm = np.array(pi.as_indices(g, h))
    a = np.zeros((h.n, h.n), dtype=np.int64)
    ag = g.adjacency_matrix()
    a[np.ix_(perm, perm)] = ag
    return a - h.adjacency_matrix()


def mu_edit(g: Graph, h: Graph, pi: Alignment) -> int:
    """Number of edges of the mismatch graph."""
    return mismatch_graph(g, h, pi).num_edges


def mmc(g: Graph, h: Graph, pi: Alignment) -> MmcValue:
    """Maximum mismatch count: largest degree in the mismatch graph, with a vertex attaining it."""
    sg = mismatch_graph(g, h, pi)
    degs = sg.degrees()
    if not degs:
        return MmcValue(0, None)
    best = max(range(len(degs)), key=lambda i: (degs[i], -i))
    return MmcValue(degs[best], sg.vertices[best])


def mmc_sandwich(q: int, p) -> NormValue:
    """Enclosure ``[max(q^(1/p), q^(1-1/p)), q]`` valid for both signed and unsigned norms."""
    p = as_exponent(p)
    if q < 0:
        raise ValueError("q must be non-negative")
    if q == 0:
        return NormValue.of(0)
    if p == 1 or math.isinf(p):
        return NormValue.of(q)
    inv = 1.0 / p
    lo = max(q ** inv, q ** (1.0 - inv))
    return NormValue.interval(min(lo, float(q)), float(q))


def _lp(x: np.ndarray, p: float) -> float:
    if math.isinf(p):
        return float(np.max(np.abs(x)))
    return float(np.sum(np.abs(x) ** p) ** (1.0 / p))


def operator_ratio(m: np.ndarray, x: np.ndarray, p: float) -> float:
    """``||m x||_p / ||x||_p``: a valid lower bound on the operator norm for any nonzero x."""
    den = _lp(x, p)
    return _lp(m @ x, p) / den if den > 0 else 0.0


def _candidate_vectors(m: np.ndarray) -> list[np.ndarray]:
    n = m.shape[0]
    cands = [np.ones(n)]
    vals, vecs = np.linalg.eigh(m.astype(float))
    top = int(np.argmax(np.abs(vals)))
    cands.append(vecs[:, top])
    cands.append(np.abs(vecs[:, top]))
    # closed neighbourhoods of max-degree vertices, signed to align with row signs
    row = np.abs(m).sum(axis=1)
    for v in np.flatnonzero(row == row.max())[:4]:
        x = np.array(m[v], dtype=float)
        x[v] = 1.0
        cands.append(x)
    return cands


def _spectral_norm(m: np.ndarray) -> float:
    if m.size == 0:
        return 0.0
    vals = np.linalg.eigvalsh(m.astype(float))
    return float(max(abs(vals[0]), abs(vals[-1])))


def _mu_from_matrix(m: np.ndarray, p: float, tighten: bool) -> NormValue:
    if m.size == 0 or not m.any():
        return NormValue.of(0)
    q = int(np.abs(m).sum(axis=1).max())
    if p == 1 or math.isinf(p):
        # symmetric matrix: max column sum == max row sum
        return NormValue.of(q)
    if p == 2:
        return NormValue.of(_spectral_norm(m))
    enclosure = mmc_sandwich(q, p)
    lo = enclosure.lo
    if tighten:
        for x in _candidate_vectors(m):
            lo = max(lo, operator_ratio(m.astype(float), x, p))
        lo = min(lo, enclosure.hi)
    return NormValue.interval(lo, enclosure.hi)


def mu_p(g: Graph, h: Graph, pi: Alignment, p, tighten: bool = True) -> NormValue:
    """l_p operator norm of the signed mismatch matrix."""
    p = as_exponent(p)
    return _mu_from_matrix(mismatch_matrix(g, h, pi), p, tighten)


def mu_abs_p(g: Graph, h: Graph, pi: Alignment, p, tighten: bool = True) -> NormValue:
    """l_p operator norm of the entrywise absolute mismatch matrix."""
    p = as_exponent(p)
    return _mu_from_matrix(np.abs(mismatch_matrix(g, h, pi)), p, tighten)


def norm_of_signed_matrix(m: np.ndarray, p, absolute: bool = False, tighten: bool = True) -> NormValue:
    """Same policy as :func:`mu_p` / :func:`mu_abs_p`, applied to a given ±1 matrix."""
    p = as_exponent(p)
    m = np.asarray(m)
    return _mu_from_matrix(np.abs(m) if absolute else m, p, tighten)


# -- index-level fast paths for bulk sampling ------------------------------

def _perm_shared(g: Graph, h: Graph, perm: np.ndarray, ah: np.ndarray | None = None):
    if ah is None:
        ah = h.adjacency_matrix(dtype=np.int8)
    e = np.array(g.index_edges, dtype=np.int64).reshape(-1, 2)
    hit = ah[perm[e[:, 0]], perm[e[:, 1]]].astype(np.int64)
    return e, hit


def perm_edit(g: Graph, h: Graph, perm, ah: np.ndarray | None = None) -> int:
    """Edit count of the alignment ``g.vertices[i] -> h.vertices[perm[i]]``."""
    perm = np.asarray(perm)
    _, hit = _perm_shared(g, h, perm, ah)
    return int(g.m + h.m - 2 * hit.sum())


def perm_mmc(g: Graph, h: Graph, perm, ah: np.ndarray | None = None) -> int:
    """Maximum mismatch count of the alignment ``g.vertices[i] -> h.vertices[perm[i]]``."""
    perm = np.asarray(perm)
    e, hit = _perm_shared(g, h, perm, ah)
    shared = np.bincount(e[:, 0], weights=hit, minlength=g.n) + np.bincount(e[:, 1], weights=hit, minlength=g.n)
    mis = np.array(g.degrees()) + np.array(h.degrees())[perm] - 2 * shared
    return int(mis.max()) if g.n else 0
