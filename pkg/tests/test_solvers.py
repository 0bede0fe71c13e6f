import itertools
import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mismatch.families import complete_bipartite, complete_graph, cubic_graphs, cycle_graph, path_graph, star_graph
from mismatch.graph import Alignment, Graph, mismatch_graph
from mismatch.norms import mmc, mu_edit, mu_p
from mismatch.solvers import (
    BatchScorer, DistanceQuery, RestrictedFamily, SearchBudgetExceeded, SolverError, delta_branch_and_bound,
    delta_exhaustive, delta_restricted, enumerate_restricted, min_mmc_restricted, partial_lower_bound, solve,
    variable_order,
)
from strategies import graph_pairs, graphs

EDIT = DistanceQuery(metric="edit")
P1 = DistanceQuery(metric="p", p=1)
P2 = DistanceQuery(metric="p", p=2)


def nx_graph(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(g.edges)
    return out


def brute(g, h, score):
    return min(score(Alignment.from_indices(g, h, p)) for p in itertools.permutations(range(g.n)))


def test_query_validation():
    with pytest.raises(ValueError):
        DistanceQuery(metric="p")
    with pytest.raises(ValueError):
        DistanceQuery(mode="greedy")
    with pytest.raises(ValueError):
        DistanceQuery(budget=0)
    assert DistanceQuery(metric="p", p="inf").objective == "mmc"
    assert DistanceQuery(metric="abs_p", p=3).objective == "sandwich"


def test_known_edit_distances():
    assert delta_exhaustive(complete_graph(4), cycle_graph(4)).value.value == 2
    assert delta_branch_and_bound(complete_bipartite(3, 3), cycle_graph(6)).value.value == 3
    assert delta_branch_and_bound(star_graph(3), path_graph(4)).value.value == 2


def test_edit_matches_networkx_edit_distance():
    # with equal orders and free relabelling, networkx's edit distance is the edge edit count
    pairs = [(path_graph(4), star_graph(3)), (cycle_graph(5), path_graph(5)), (complete_graph(4), path_graph(4))]
    for g, h in pairs:
        ref = nx.graph_edit_distance(nx_graph(g), nx_graph(h))
        assert delta_branch_and_bound(g, h).value.value == ref


def test_order_mismatch_and_caps():
    with pytest.raises(SolverError):
        delta_exhaustive(path_graph(3), path_graph(4))
    with pytest.raises(SolverError):
        delta_exhaustive(cycle_graph(11), cycle_graph(11))
    with pytest.raises(SolverError):
        delta_branch_and_bound(cycle_graph(25), cycle_graph(25))


def test_budget_exhaustion_carries_partial_result():
    with pytest.raises(SearchBudgetExceeded) as info:
        delta_branch_and_bound(complete_bipartite(3, 3), cycle_graph(6), DistanceQuery(budget=2))
    partial = info.value.partial
    assert not partial.optimal
    assert partial.value.lo <= 3 <= partial.value.hi


def test_threshold_decisions():
    g, h = complete_bipartite(3, 3), cycle_graph(6)
    yes = delta_branch_and_bound(g, h, DistanceQuery(threshold=3))
    assert yes.decision == "yes" and yes.value.hi <= 3
    no = delta_branch_and_bound(g, h, DistanceQuery(threshold=2))
    assert no.decision == "no" and no.value.lo > 2


def test_result_alignment_attains_value():
    for g in cubic_graphs(8):
        res = delta_branch_and_bound(g, cycle_graph(8))
        assert mu_edit(g, cycle_graph(8), res.best_alignment) == res.value.value
        assert res.optimal


def test_variable_order_is_a_permutation():
    g = complete_bipartite(2, 4)
    order = variable_order(g)
    assert sorted(order) == list(range(g.n))
    assert g.degree(g.vertices[order[0]]) == 4


def test_restricted_family_enumeration():
    g, h = cycle_graph(4), path_graph(4)
    fam = RestrictedFamily(((0, 2), (1, 3)), ((0, 1), (2, 3)))
    aligns = list(enumerate_restricted(g, h, fam))
    assert len(aligns) == fam.size() == 4
    assert len(set(aligns)) == 4 and all(fam.contains(a) for a in aligns)
    res = delta_restricted(g, h, fam, DistanceQuery(metric="edit", mode="restricted"))
    assert res.value.value == min(mu_edit(g, h, a) for a in aligns)
    with pytest.raises(SolverError):
        RestrictedFamily(((0,),), ((0, 1),))
    with pytest.raises(SolverError):
        solve(g, h, DistanceQuery(mode="restricted"))


def test_restricted_branch_and_bound_path_matches_enumeration():
    # 8! * 1 > 50000 would need a big class; force the bnb path with two classes of size 8 (8!^2)
    g = complete_bipartite(8, 8)
    h = cycle_graph(16)
    fam = RestrictedFamily((tuple(range(8)), tuple(range(8, 16))), (tuple(range(0, 16, 2)), tuple(range(1, 16, 2))))
    val, pi = min_mmc_restricted(g, h, fam)
    assert fam.contains(pi)
    # K8,8 onto an even/odd split of C16: every image edge crosses parity, so the cycle edges are all kept
    assert val.value == 6 == mmc(g, h, pi).value


@settings(max_examples=60, deadline=None)
@given(graph_pairs(1, 6))
def test_branch_and_bound_equals_brute_force_edit(pair):
    g, h = pair
    assert delta_branch_and_bound(g, h, EDIT).value.value == brute(g, h, lambda a: mu_edit(g, h, a))


@settings(max_examples=60, deadline=None)
@given(graph_pairs(1, 6))
def test_branch_and_bound_equals_brute_force_mmc(pair):
    g, h = pair
    assert delta_branch_and_bound(g, h, P1).value.value == brute(g, h, lambda a: mmc(g, h, a).value)


@settings(max_examples=30, deadline=None)
@given(graph_pairs(1, 5))
def test_branch_and_bound_equals_brute_force_spectral(pair):
    g, h = pair
    got = delta_branch_and_bound(g, h, P2).value.value
    assert got == pytest.approx(brute(g, h, lambda a: mu_p(g, h, a, 2).value), abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(graph_pairs(2, 6), st.integers(0, 12))
def test_threshold_decision_is_correct(pair, c):
    g, h = pair
    exact = delta_exhaustive(g, h, EDIT).value.value
    res = delta_branch_and_bound(g, h, DistanceQuery(threshold=c))
    assert res.decision == ("yes" if exact <= c else "no")


@settings(max_examples=80, deadline=None)
@given(graph_pairs(2, 7), st.data(), st.sampled_from(["edit", "mmc", "spectral"]))
def test_partial_bound_is_admissible(pair, data, objective):
    g, h = pair
    depth = data.draw(st.integers(0, g.n))
    sources = data.draw(st.permutations(range(g.n)))[:depth]
    targets = data.draw(st.permutations(range(h.n)))[:depth]
    partial = dict(zip(sources, targets))
    bound = partial_lower_bound(g, h, partial, objective)
    free_g = [u for u in range(g.n) if u not in partial]
    free_h = [x for x in range(h.n) if x not in partial.values()]
    scorer = BatchScorer(g, h)
    best = math.inf
    for rest in itertools.permutations(free_h):
        perm = np.zeros(g.n, dtype=np.int64)
        for u, x in partial.items():
            perm[u] = x
        perm[free_g] = rest
        if objective == "edit":
            val = scorer.edit(perm[None, :])[0]
        elif objective == "mmc":
            val = scorer.mmc(perm[None, :])[0]
        else:
            val = scorer.spectral(perm[None, :], absolute=False)[0]
        best = min(best, float(val))
    assert bound <= best + 1e-9


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=6))
def test_edit_triangle_inequality(a, b, c):
    if not (a.n == b.n == c.n):
        return
    d = lambda x, y: delta_exhaustive(x, y, EDIT).value.value  # noqa: E731
    assert d(a, c) <= d(a, b) + d(b, c)
    assert d(a, b) == d(b, a)


def test_batch_scorer_matches_object_api():
    g, h = complete_bipartite(3, 3), cycle_graph(6)
    rng = np.random.default_rng(0)
    perms = np.array([rng.permutation(6) for _ in range(20)])
    scorer = BatchScorer(g, h)
    for perm, e, q, s in zip(perms, scorer.edit(perms), scorer.mmc(perms), scorer.spectral(perms, False)):
        pi = Alignment.from_indices(g, h, perm)
        assert e == mu_edit(g, h, pi)
        assert q == mmc(g, h, pi).value
        assert s == pytest.approx(mu_p(g, h, pi, 2).value)
    assert mismatch_graph(g, h, Alignment.from_indices(g, h, perms[0])).n == 6


def test_result_serialises():
    res = delta_exhaustive(complete_graph(4), cycle_graph(4))
    d = res.to_dict()
    assert d["value"] == {"lo": 2, "hi": 2, "exact": True}
    assert d["optimal"] and len(d["alignment"]) == 4
