"""Seeded alignment samplers for the sampled checks of universally quantified claims.

Permutations are index arrays: ``perm[i]`` is the target index of source vertex ``i``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .gadgets import CliqueGadget, CycleCliqueGadget, LeafGadget
from .graph import Graph


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_perm(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.permutation(n)


def random_perms(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    """``count`` independent uniform permutations, one per row."""
    return np.argsort(rng.random((count, n)), axis=1)


def force_image(perm: np.ndarray, rng: np.random.Generator, sources: Sequence[int], targets: Sequence[int]) -> np.ndarray:
    """Copy of ``perm`` with some source sent to some target, via one transposition of images."""
    out = np.array(perm, copy=True)
    u = int(rng.choice(sources))
    x = int(rng.choice(targets))
    w = int(np.flatnonzero(out == x)[0])
    out[u], out[w] = x, out[u]
    return out


def indices(g: Graph, labels) -> list[int]:
    return [g.index(v) for v in labels]


def clique_aligned_perm(gq: CliqueGadget, dnq: CycleCliqueGadget, sigma: Sequence[int]) -> np.ndarray:
    g, h = gq.graph, dnq.graph
    perm = np.zeros(g.n, dtype=np.int64)
    for i, v in enumerate(gq.core.vertices):
        w = dnq.core.vertices[sigma[i]]
        perm[g.index(v)] = h.index(w)
        for a, b in zip(gq.clique_of[v], dnq.clique_of[w]):
            perm[g.index(a)] = h.index(b)
    return perm


def non_conservative_samples(rng: np.random.Generator, gq: CliqueGadget, dnq: CycleCliqueGadget, count: int) -> list[np.ndarray]:
    """Alignments sending at least one clique vertex onto a core vertex.

    Even-numbered samples start uniform; odd-numbered ones perturb a random
    clique-aligned alignment, which keeps them close to the optimum.
    """
    g, h = gq.graph, dnq.graph
    clique_idx = [g.index(x) for c in gq.clique_of.values() for x in c]
    core_h = indices(h, dnq.core.vertices)
    out = []
    for s in range(count):
        if s % 2 == 0:
            base = random_perm(rng, g.n)
        else:
            base = clique_aligned_perm(gq, dnq, rng.permutation(gq.core.n))
        out.append(force_image(base, rng, clique_idx, core_h))
    return out


def leaf_aligned_perm(g_hat: LeafGadget, h_hat: LeafGadget, sigma: dict) -> np.ndarray:
    """Extend a core alignment (label map) to the leaves index-wise."""
    g, h = g_hat.graph, h_hat.graph
    perm = np.zeros(g.n, dtype=np.int64)
    for v, w in sigma.items():
        perm[g.index(v)] = h.index(w)
        for a, b in zip(g_hat.leaves_of[v], h_hat.leaves_of[w]):
            perm[g.index(a)] = h.index(b)
    return perm


def random_res_sigma(rng: np.random.Generator, g_hat: LeafGadget, h_hat: LeafGadget) -> dict:
    """A uniform partition-respecting core alignment ``A -> a_set(H), B -> b_set(H)``."""
    a_img = [h_hat.a_set[i] for i in rng.permutation(len(h_hat.a_set))]
    b_img = [h_hat.b_set[i] for i in rng.permutation(len(h_hat.b_set))]
    return dict(zip(g_hat.a_set, a_img)) | dict(zip(g_hat.b_set, b_img))


def _forced_samples(rng, g_hat, h_hat, count, sources, targets):
    out = []
    for s in range(count):
        if s % 2 == 0:
            base = random_perm(rng, g_hat.graph.n)
        else:
            base = leaf_aligned_perm(g_hat, h_hat, random_res_sigma(rng, g_hat, h_hat))
        out.append(force_image(base, rng, sources, targets))
    return out


def leaf_to_core_samples(rng, g_hat: LeafGadget, h_hat: LeafGadget, count: int) -> list[np.ndarray]:
    g, h = g_hat.graph, h_hat.graph
    leaves = [g.index(x) for ls in g_hat.leaves_of.values() for x in ls]
    return _forced_samples(rng, g_hat, h_hat, count, leaves, indices(h, h_hat.core.vertices))


def a_to_b_samples(rng, g_hat: LeafGadget, h_hat: LeafGadget, count: int) -> list[np.ndarray]:
    """Alignments sending some vertex of the 5-leaf class onto the 12-leaf class of the target."""
    g, h = g_hat.graph, h_hat.graph
    return _forced_samples(rng, g_hat, h_hat, count, indices(g, g_hat.a_set), indices(h, h_hat.b_set))
