import numpy as np

from mismatch.families import complete_bipartite, complete_graph
from mismatch.gadgets import build_dnq, build_gq, build_hat, build_hk, componentwise_ab
from mismatch.sampling import (
    a_to_b_samples, clique_aligned_perm, force_image, leaf_aligned_perm, leaf_to_core_samples,
    non_conservative_samples, random_perms, random_res_sigma, rng_from_seed,
)


def _is_perm(p, n):
    return sorted(p.tolist()) == list(range(n))


def test_seeded_generators_replay():
    a = random_perms(rng_from_seed(7), 9, 5)
    b = random_perms(rng_from_seed(7), 9, 5)
    assert (a == b).all() and all(_is_perm(p, 9) for p in a)


def test_force_image_keeps_a_bijection():
    rng = rng_from_seed(1)
    p = force_image(np.arange(10), rng, [0, 1], [8, 9])
    assert _is_perm(p, 10) and (p[0] in (8, 9) or p[1] in (8, 9))


def test_non_conservative_samples_hit_core():
    gq, dnq = build_gq(complete_graph(4), 5), build_dnq(4, 5)
    core_h = {dnq.graph.index(v) for v in dnq.core.vertices}
    cliques = [gq.graph.index(x) for c in gq.clique_of.values() for x in c]
    for p in non_conservative_samples(rng_from_seed(0), gq, dnq, 40):
        assert _is_perm(p, gq.graph.n)
        assert any(int(p[u]) in core_h for u in cliques)
    assert _is_perm(clique_aligned_perm(gq, dnq, [1, 0, 3, 2]), gq.graph.n)


def test_leaf_samplers():
    core = complete_bipartite(3, 3)
    a, b = componentwise_ab(core)
    g_hat = build_hat(core, a, b, require_independent=True)
    hk = build_hk(3)
    h_hat = build_hat(hk.graph, hk.even, hk.odd)
    rng = rng_from_seed(3)
    sigma = random_res_sigma(rng, g_hat, h_hat)
    assert set(sigma[v] for v in a) == set(hk.even)
    assert _is_perm(leaf_aligned_perm(g_hat, h_hat, sigma), g_hat.graph.n)
    odd = {h_hat.graph.index(v) for v in hk.odd}
    for p in a_to_b_samples(rng, g_hat, h_hat, 20):
        assert any(int(p[g_hat.graph.index(v)]) in odd for v in a)
    core_h = {h_hat.graph.index(v) for v in hk.graph.vertices}
    leaves = [g_hat.graph.index(x) for ls in g_hat.leaves_of.values() for x in ls]
    for p in leaf_to_core_samples(rng, g_hat, h_hat, 20):
        assert any(int(p[u]) in core_h for u in leaves)
