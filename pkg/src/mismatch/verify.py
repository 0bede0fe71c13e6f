"""Registered claim checks, each producing a deterministic :class:`VerificationReport`.

A check enumerates instances (exhaustively where feasible, otherwise from a
seeded generator) and records every instance that contradicts the claim,
with enough data to replay it.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import io
from .families import (
    complete_bipartite, cubic_graphs, cycle_graph, disjoint_union, fixture_corpus,
    hypercube, named_graph, regular_corpus, rook_graph, shrikhande_graph,
)
from .gadgets import (
    HkGraph, LeafGadget, ResBatchSummary, build_dnq, build_gq, build_hat, build_hk, componentwise_ab, res_batch_check,
)
from .graph import Alignment, Graph, check_regular_balance, mismatch_graph, regular_degree
from .latin import (
    EdgeKind, classify_edge, cyclic_group, detect_srg, dihedral_group, group_by_name, is_twinned,
    latin_square_graph, srg_mismatch_bound, twin_cell, twinned_instance, vertex_parity,
)
from .norms import DECISION_MARGIN, mismatch_matrix, mmc, mmc_sandwich, mu_abs_p, mu_p
from .oracles import hamiltonian_cycle
from .sampling import (
    a_to_b_samples, leaf_aligned_perm, leaf_to_core_samples, non_conservative_samples, random_perms, rng_from_seed,
)
from .solvers import (
    BatchScorer, DistanceQuery, RestrictedFamily, conservative_search, delta_branch_and_bound, delta_exhaustive,
    min_mmc_restricted, restricted_index_perms,
)

MAX_SAMPLES = 10**6


class ClaimError(ValueError):
    """Unknown claim, bad parameters, or a scale above the registered caps."""


@dataclass
class VerificationReport:
    claim_id: str
    instances: int = 0
    passes: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    seed: int = 0
    params: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures and self.passes == self.instances

    def record(self, passed: bool, failure: dict | None = None) -> None:
        self.instances += 1
        if passed:
            self.passes += 1
        else:
            self.failures.append(failure or {})

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "claim_id": self.claim_id,
            "instances": self.instances,
            "passes": self.passes,
            "failures": self.failures,
            "seed": self.seed,
            "params": self.params,
            "details": self.details,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.claim_id}: {status} ({self.passes}/{self.instances} instances, {len(self.failures)} failures)"


def _counterexample(g: Graph, h: Graph, pi: Alignment | None, reason: str, **extra) -> dict:
    out = {"reason": reason, "g": io.graph_to_json(g), "h": io.graph_to_json(h)}
    if pi is not None:
        out["alignment"] = io.alignment_to_json(pi)
    out.update(extra)
    return out


# -- cubic bipartite cores for the leaf-gadget reduction ---------------------------------------------------

def _core_fixtures() -> dict[str, Graph]:
    k33, q3 = complete_bipartite(3, 3), hypercube(3)
    return {
        "k33": k33,
        "q3": q3,
        "cube": q3,
        "2k33": disjoint_union(k33, k33),
        "k33+q3": disjoint_union(k33, q3),
        "2q3": disjoint_union(q3, q3),
    }


def core_graph(name: str) -> Graph:
    fixtures = _core_fixtures()
    g = fixtures[name] if name in fixtures else named_graph(name)
    if regular_degree(g) != 3 or g.two_coloring() is None or g.n % 2:
        raise ClaimError(f"core {name!r} is not a 3-regular bipartite graph")
    return g


@dataclass(frozen=True)
class LeafReductionInstance:
    name: str
    core: Graph
    hk: HkGraph
    family: RestrictedFamily
    hamiltonian: bool

    @property
    def k(self) -> int:
        return self.hk.k

    def hats(self) -> tuple[LeafGadget, LeafGadget]:
        a, b = self.family.source_partition
        return build_hat(self.core, a, b, require_independent=True), build_hat(self.hk.graph, self.hk.even, self.hk.odd)


def leaf_reduction_instance(name: str) -> LeafReductionInstance:
    core = core_graph(name)
    hk = build_hk(core.n // 2)
    fam = RestrictedFamily(componentwise_ab(core), (hk.even, hk.odd))
    return LeafReductionInstance(name, core, hk, fam, hamiltonian_cycle(core) is not None)


def _res_batches(inst: LeafReductionInstance, rng, exhaustive_k: int, samples: int):
    """Index-permutation batches over Res: all of it for small k, else uniform samples."""
    g, h = inst.core, inst.hk.graph
    if inst.k <= exhaustive_k:
        it = restricted_index_perms(g, h, inst.family)
        while True:
            block = list(itertools.islice(it, 20_000))
            if not block:
                return
            yield np.array(block, dtype=np.int64)
    else:
        src = [[g.index(v) for v in c] for c in inst.family.source_partition]
        dst = [[h.index(v) for v in c] for c in inst.family.target_partition]
        perms = np.zeros((samples, g.n), dtype=np.int64)
        for s_idx, d_idx in zip(src, dst):
            order = np.argsort(rng.random((samples, len(d_idx))), axis=1)
            perms[:, s_idx] = np.array(d_idx)[order]
        yield perms


def _res_summary(inst: LeafReductionInstance, rng, exhaustive_k: int, samples: int) -> ResBatchSummary:
    total = ResBatchSummary()
    for block in _res_batches(inst, rng, exhaustive_k, samples):
        total.merge(res_batch_check(inst.core, inst.hk, block))
    return total


# -- claim implementations -----------------------------------------------------

def _fact_2_1(rep: VerificationReport, p: dict, rng) -> None:
    corpus = regular_corpus()
    groups: dict[tuple[int, int], list[str]] = {}
    for name, g in corpus.items():
        groups.setdefault((g.n, regular_degree(g)), []).append(name)
    pairs = 0
    for names in groups.values():
        for a, b in itertools.product(names, repeat=2):
            g, h = corpus[a], corpus[b]
            pairs += 1
            for perm in random_perms(rng, g.n, p["samples"]):
                pi = Alignment.from_indices(g, h, perm)
                if check_regular_balance(g, h, pi):
                    rep.record(True)
                else:
                    rep.record(False, _counterexample(g, h, pi, "unbalanced vertex", pair=[a, b]))
    rep.details["pairs"] = pairs


def _fact_3_1(rep: VerificationReport, p: dict, rng) -> None:
    if p["max_n"] > 10:
        raise ClaimError("fact-3.1 is capped at n <= 10")
    rows = []
    for n in range(4, p["max_n"] + 1, 2):
        graphs = cubic_graphs(n, connected=not p.get("include_disconnected", False))
        for i, g in enumerate(graphs):
            cn = cycle_graph(n)
            if n <= 8:
                res = delta_exhaustive(g, cn, DistanceQuery(mode="exhaustive"))
            else:
                res = delta_branch_and_bound(g, cn, DistanceQuery())
            delta = int(res.value.value)
            ham = hamiltonian_cycle(g) is not None
            ok = (delta == n // 2) if ham else (delta > n // 2)
            rows.append({"n": n, "index": i, "delta_edit": delta, "hamiltonian": ham})
            rep.record(ok, None if ok else _counterexample(g, cn, res.best_alignment, "fact violated", delta=delta))
    rep.details["graphs"] = rows


def _lemma_2_2(rep: VerificationReport, p: dict, rng) -> None:
    corpus = fixture_corpus(10)
    by_order: dict[int, list[str]] = {}
    for name, g in corpus.items():
        by_order.setdefault(g.n, []).append(name)
    orders = sorted(by_order)
    exponents = [1.0, 1.5, 2.0, 3.0, math.inf]
    for case in range(p["samples"]):
        n = orders[int(rng.integers(len(orders)))]
        a = by_order[n][int(rng.integers(len(by_order[n])))]
        b = by_order[n][int(rng.integers(len(by_order[n])))]
        g, h = corpus[a], corpus[b]
        pi = Alignment.from_indices(g, h, rng.permutation(n))
        pe = exponents[case % len(exponents)]
        q = mmc(g, h, pi).value
        env = mmc_sandwich(q, pe)
        m = mismatch_matrix(g, h, pi).astype(float)
        problems = []
        for absolute in (False, True):
            val = (mu_abs_p if absolute else mu_p)(g, h, pi, pe)
            if val.lo < env.lo - 1e-9 or val.hi > env.hi + 1e-9:
                problems.append(f"{'abs' if absolute else 'signed'} value {val} outside {env}")
            mat = np.abs(m) if absolute else m
            if pe == 2:
                ref = float(np.linalg.norm(mat, 2)) if n else 0.0
                if abs(val.value - ref) > 1e-6:
                    problems.append(f"p=2 value {val.value} differs from SVD norm {ref}")
            # random test vectors give lower bounds that must not exceed hi
            xs = rng.standard_normal((200, n))
            if math.isinf(pe):
                ratios = np.abs(xs @ mat.T).max(axis=1) / np.abs(xs).max(axis=1)
            else:
                ratios = (np.abs(xs @ mat.T) ** pe).sum(axis=1) ** (1 / pe) / (np.abs(xs) ** pe).sum(axis=1) ** (1 / pe)
            if ratios.size and ratios.max() > val.hi + 1e-9:
                problems.append(f"test vector ratio {ratios.max()} exceeds hi {val.hi}")
        rep.record(not problems, _counterexample(g, h, pi, "; ".join(problems), p=str(pe)) if problems else None)


def _gadget_cores(p: dict) -> list[tuple[str, Graph]]:
    names = p.get("cores") or (["k4", "k33"] if p.get("core") is None else [p["core"]])
    out = []
    for name in names:
        g = named_graph(name) if name not in _core_fixtures() else _core_fixtures()[name]
        if regular_degree(g) != 3 or g.n % 2:
            raise ClaimError(f"core {name!r} must be 3-regular on an even number of vertices")
        out.append((name, g))
    return out


def _lemma_3_3(rep: VerificationReport, p: dict, rng) -> None:
    for name, core in _gadget_cores(p):
        n = core.n
        q = p.get("q") or 3 * n + 4
        gq, dnq = build_gq(core, q), build_dnq(n, q)
        scorer = BatchScorer(gq.graph, dnq.graph)
        perms = np.array(non_conservative_samples(rng, gq, dnq, p["samples"]))
        vals = scorer.edit(perms)
        for perm, val in zip(perms, vals):
            ok = int(val) > 3 * n
            rep.record(ok, None if ok else _counterexample(
                gq.graph, dnq.graph, Alignment.from_indices(gq.graph, dnq.graph, perm), "non-conservative edit <= 3n",
                edit=int(val), core=name))
        best = conservative_search(gq, dnq)
        rep.record(best.value.value <= 3 * n, None if best.value.value <= 3 * n else {"reason": "conservative optimum > 3n"})
        rep.details[name] = {"q": q, "min_sampled_edit": int(vals.min()), "conservative_optimum": best.value.value,
                             "threshold": 3 * n}


def _lemma_3_4(rep: VerificationReport, p: dict, rng) -> None:
    if p["max_n"] > 8:
        raise ClaimError("lemma-3.4 is capped at n <= 8")
    cores = [(f"cubic{n}-{i}", g) for n in range(4, p["max_n"] + 1, 2) for i, g in enumerate(cubic_graphs(n))]
    if p.get("core"):
        cores = _gadget_cores(p)
    rows = {}
    for name, core in cores:
        n = core.n
        q = p.get("q") or 3 * n + 4
        gq, dnq = build_gq(core, q), build_dnq(n, q)
        structured = int(conservative_search(gq, dnq).value.value)
        core_delta = int(delta_exhaustive(core, cycle_graph(n), DistanceQuery(mode="exhaustive")).value.value)
        ham = hamiltonian_cycle(core) is not None
        # the edge-count identity is part of the construction contract
        same_m = gq.graph.m == dnq.graph.m
        ok = structured == core_delta + n // 2 and (structured <= n) == ham and same_m
        rows[name] = {"n": n, "q": q, "structured": structured, "core_delta": core_delta, "hamiltonian": ham}
        rep.record(ok, None if ok else {"reason": "identity or equivalence violated", **rows[name]})
    rep.details["cores"] = rows


def _core_names(p: dict, default: list[str]) -> list[str]:
    return [p["core"]] if p.get("core") else default


def _lemma_4_1(rep: VerificationReport, p: dict, rng) -> None:
    for name in _core_names(p, ["k33", "q3"]):
        inst = leaf_reduction_instance(name)
        g_hat, h_hat = inst.hats()
        g, h = g_hat.graph, h_hat.graph
        scorer = BatchScorer(g, h)
        worst = {}
        for label, maker in (("leaf-to-core", leaf_to_core_samples), ("a-to-odd", a_to_b_samples)):
            perms = np.array(maker(rng, g_hat, h_hat, p["samples"]))
            vals = scorer.mmc(perms)
            worst[label] = int(vals.min())
            for perm, val in zip(perms, vals):
                ok = int(val) > 6
                rep.record(ok, None if ok else _counterexample(g, h, Alignment.from_indices(g, h, perm), label, mmc=int(val)))
        # third item: leaf-aligned extensions of Res alignments keep the core MMC
        for perm in next(_res_batches(inst, rng, exhaustive_k=0, samples=min(p["samples"], 200))):
            sigma = Alignment.from_indices(inst.core, inst.hk.graph, perm)
            ext = leaf_aligned_perm(g_hat, h_hat, dict(sigma))
            core_val = mmc(inst.core, inst.hk.graph, sigma).value
            ext_val = int(scorer.mmc(ext[None, :])[0])
            ok = ext_val == core_val <= 6
            rep.record(ok, None if ok else {"reason": "extension changes MMC", "sigma": io.alignment_to_json(sigma)})
        rep.details[name] = {"min_mmc_forced": worst}


def _lemma_4_2(rep: VerificationReport, p: dict, rng) -> None:
    for name in _core_names(p, ["k33", "q3"]):
        inst = leaf_reduction_instance(name)
        val, sigma = min_mmc_restricted(inst.core, inst.hk.graph, inst.family)
        ok = (not inst.hamiltonian) or val.value <= 2
        rep.details[name] = {"hamiltonian": inst.hamiltonian, "min_mmc": val.value, "witness": io.alignment_to_json(sigma)}
        rep.record(ok, None if ok else _counterexample(inst.core, inst.hk.graph, sigma, "min MMC above 2"))


def _lemma_4_3_or_4(parity: int, default: list[str]):
    def check(rep: VerificationReport, p: dict, rng) -> None:
        for name in _core_names(p, default):
            inst = leaf_reduction_instance(name)
            if inst.k % 2 != parity:
                raise ClaimError(f"core {name!r} has k={inst.k}, wrong parity for this claim")
            val, sigma = min_mmc_restricted(inst.core, inst.hk.graph, inst.family)
            ok = inst.hamiltonian or val.value >= 4
            rep.details[name] = {"k": inst.k, "hamiltonian": inst.hamiltonian, "min_mmc": val.value}
            rep.record(ok, None if ok else _counterexample(inst.core, inst.hk.graph, sigma, "MMC below 4 without Hamiltonian cycle"))

    return check


def _res_claim(select: Callable[[ResBatchSummary], list], default: list[str], parity: int | None = None):
    def check(rep: VerificationReport, p: dict, rng) -> None:
        for name in _core_names(p, default):
            inst = leaf_reduction_instance(name)
            if parity is not None and inst.k % 2 != parity:
                raise ClaimError(f"core {name!r} has k={inst.k}, wrong parity for this claim")
            summary = _res_summary(inst, rng, p.get("exhaustive_k", 6), p["samples"])
            bad = select(summary)
            rep.instances += summary.checked
            rep.passes += summary.checked - len(bad)
            for perm in bad[:20]:
                rep.failures.append(_counterexample(
                    inst.core, inst.hk.graph, Alignment.from_indices(inst.core, inst.hk.graph, perm), "Res check failed"))
            if len(bad) > 20:
                rep.failures.append({"reason": f"{len(bad) - 20} further failures omitted"})
            rep.details[name] = {"k": inst.k, "checked": summary.checked,
                                 "max_degree_histogram": {str(d): c for d, c in sorted(summary.max_degree_hist.items())}}

    return check


def _prop_4_6(rep: VerificationReport, p: dict, rng) -> None:
    for name in _core_names(p, ["k33", "q3", "2k33", "k33+q3"]):
        inst = leaf_reduction_instance(name)
        val, _ = min_mmc_restricted(inst.core, inst.hk.graph, inst.family)
        g_hat, h_hat = inst.hats()
        query = DistanceQuery(metric="p", p=1, threshold=2, budget=p["budget"], max_order=g_hat.graph.n)
        res = delta_branch_and_bound(g_hat.graph, h_hat.graph, query)
        chain = (inst.hamiltonian, val.value <= 2, res.decision == "yes")
        ok = len(set(chain)) == 1
        rep.details[name] = {"hamiltonian": chain[0], "min_res_mmc": val.value, "delta1_decision": res.decision,
                             "nodes": res.nodes_expanded}
        rep.record(ok, None if ok else {"reason": "equivalence chain broken", **rep.details[name]})


def _prop_4_9(rep: VerificationReport, p: dict, rng) -> None:
    for name in _core_names(p, ["k33", "q3", "2k33"]):
        inst = leaf_reduction_instance(name)
        if inst.k > 6:
            raise ClaimError("prop-4.9 enumerates Res exhaustively and is capped at k <= 6")
        scorer = BatchScorer(inst.core, inst.hk.graph)
        best = {False: math.inf, True: math.inf}
        for block in _res_batches(inst, rng, 6, 0):
            for absolute in (False, True):
                best[absolute] = min(best[absolute], float(scorer.spectral(block, absolute).min()))
        signed_ok = best[False] <= 2 + DECISION_MARGIN
        abs_ok = best[True] <= 2 + DECISION_MARGIN
        ok = inst.hamiltonian == signed_ok == abs_ok
        rep.details[name] = {"hamiltonian": inst.hamiltonian, "min_mu2": round(best[False], 9), "min_abs_mu2": round(best[True], 9)}
        rep.record(ok, None if ok else {"reason": "equivalence broken", **rep.details[name]})


def _srg_sample(rep, g, h, label, samples, rng, bound):
    scorer = BatchScorer(g, h)
    lowest = None
    done = 0
    while done < samples:
        count = min(2000, samples - done)
        vals = scorer.mmc(random_perms(rng, g.n, count))
        lowest = int(vals.min()) if lowest is None else min(lowest, int(vals.min()))
        for i in np.flatnonzero(vals < bound):
            rep.failures.append({"reason": f"{label}: MMC {int(vals[i])} below {bound}"})
        rep.instances += count
        rep.passes += int((vals >= bound).sum())
        done += count
    return lowest


def _prop_5_2(rep: VerificationReport, p: dict, rng) -> None:
    pairs = [("shrikhande-vs-rook4", shrikhande_graph(), rook_graph(4))]
    if p.get("include_order6", True):
        pairs.append(("latin-z6-vs-d3", latin_square_graph(cyclic_group(6)), latin_square_graph(dihedral_group(3))))
    for label, g, h in pairs:
        pg, ph = detect_srg(g), detect_srg(h)
        if pg is None or pg != ph:
            raise ClaimError(f"{label}: inputs are not SRGs with equal parameters")
        bound = srg_mismatch_bound(pg)
        lowest = _srg_sample(rep, g, h, label, p["samples"], rng, bound)
        rep.details[label] = {"params": list(pg.as_tuple()), "bound": bound, "min_sampled_mmc": lowest}


def _cor_5_3(rep: VerificationReport, p: dict, rng) -> None:
    inst = twinned_instance(group_by_name(p.get("gamma") or "z2"))
    n = inst.g.n
    root = math.isqrt(n)
    lowest = _srg_sample(rep, inst.g, inst.h, "latin", p["samples"], rng, root - 5)
    twinned = mmc(inst.g, inst.h, inst.pi).value
    ok = root - 5 <= twinned == root <= 6 * (root - 1)
    rep.record(ok, None if ok else {"reason": "twinned alignment outside the tightness sandwich", "mmc": twinned})
    rep.details = {"n": n, "bound": root - 5, "min_sampled_mmc": lowest, "twinned_mmc": twinned,
                   "naive_upper": 6 * (root - 1)}


def _prop_a_1(rep: VerificationReport, p: dict, rng) -> None:
    for name in p.get("gammas") or [p.get("gamma") or "trivial"]:
        inst = twinned_instance(group_by_name(name))
        sg = mismatch_graph(inst.g, inst.h, inst.pi)
        root = math.isqrt(inst.g.n)
        degs = dict(zip(sg.vertices, sg.degrees()))
        problems = []
        for v, d in degs.items():
            want = root if vertex_parity(v) == 0 else 0
            if d != want:
                problems.append(f"vertex {v!r} has degree {d}, expected {want}")
        inv = inst.pi.inverse()
        for e in sg.pos_edges:
            if classify_edge(inst.cyclic_side, (inv[e[0]], inv[e[1]])) is not EdgeKind.ENTRY:
                problems.append(f"positive edge {e!r} is not an entry edge")
        for e in sg.neg_edges:
            if classify_edge(inst.klein_side, e) is not EdgeKind.ENTRY:
                problems.append(f"negative edge {e!r} is not an entry edge")
        value = mmc(inst.g, inst.h, inst.pi).value
        if value != root:
            problems.append(f"MMC {value} != {root}")
        rep.details[name] = {"n": inst.g.n, "sqrt_n": root, "mmc": value, "mismatch_edges": sg.num_edges}
        rep.record(not problems, {"reason": "; ".join(problems[:10]), "gamma": name} if problems else None)


def _cyclic_coord(x) -> int:
    return int(x[-1]) if isinstance(x, tuple) else int(x)


def _lemma_a_2(rep: VerificationReport, p: dict, rng) -> None:
    inst = twinned_instance(group_by_name(p.get("gamma") or "trivial"))
    cyc, kle = inst.cyclic_side, inst.klein_side
    for u in inst.g.vertices:
        v = twin_cell(u)
        par_ok = vertex_parity(u) == vertex_parity(v)
        tw = is_twinned(cyc, kle, u, v)
        if vertex_parity(u) == 1:
            ok = par_ok and tw
        else:
            ok = par_ok and tw == (_cyclic_coord(u[0]) % 2 == 0 and _cyclic_coord(u[1]) % 2 == 0)
        rep.record(ok, None if ok else {"reason": "parity/twinning clause", "cell": io.encode_label(u)})
    odd_odd = [u for u in inst.g.vertices if _cyclic_coord(u[0]) % 2 == 1 and _cyclic_coord(u[1]) % 2 == 1]
    for u, w in itertools.combinations(odd_odd, 2):
        same_g = cyc.entry(*u) == cyc.entry(*w)
        same_h = kle.entry(*twin_cell(u)) == kle.entry(*twin_cell(w))
        rep.record(same_g == same_h, None if same_g == same_h else
                   {"reason": "entry correspondence", "cells": [io.encode_label(u), io.encode_label(w)]})


def _lemma_4_5_select(s: ResBatchSummary) -> list:
    return s.walk_failures


def _lemma_4_8_select(s: ResBatchSummary) -> list:
    return s.spectral_failures


def _structure_select(s: ResBatchSummary) -> list:
    return s.structure_failures


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    run: Callable[[VerificationReport, dict, Any], None]
    defaults: dict


CLAIMS: dict[str, Claim] = {c.claim_id: c for c in [
    Claim("fact-2.1", "regular pairs: positive and negative degree agree at every vertex", _fact_2_1, {"samples": 100}),
    Claim("fact-3.1", "cubic G: edit distance to the n-cycle is n/2 iff Hamiltonian", _fact_3_1, {"max_n": 8}),
    Claim("lemma-2.2", "l_p norms lie inside the MMC sandwich; p=2 matches an SVD oracle", _lemma_2_2, {"samples": 50}),
    Claim("lemma-3.3", "non-conservative clique-gadget alignments cost more than 3n", _lemma_3_3, {"samples": 500}),
    Claim("lemma-3.4", "clique-aligned optimum equals core distance plus n/2; <= n iff Hamiltonian", _lemma_3_4, {"max_n": 6}),
    Claim("lemma-4.1", "leaf-gadget alignments breaking the partition have MMC > 6", _lemma_4_1, {"samples": 500}),
    Claim("lemma-4.2", "Hamiltonian cores admit a partition-respecting alignment with MMC <= 2", _lemma_4_2, {}),
    Claim("lemma-4.3", "even k, non-Hamiltonian core: every partition-respecting alignment has MMC >= 4",
          _lemma_4_3_or_4(0, ["2k33"]), {}),
    Claim("lemma-4.4", "odd k, non-Hamiltonian core: every partition-respecting alignment has MMC >= 4",
          _lemma_4_3_or_4(1, ["k33+q3"]), {}),
    Claim("lemma-4.5", "each degree-4 mismatch vertex has a nonzero off-diagonal walk-matrix entry",
          _res_claim(_lemma_4_5_select, ["k33", "q3", "2k33"]), {"samples": 1000}),
    Claim("prop-4.7a", "even k: one same-parity negative neighbour, degree in {2,4,6}",
          _res_claim(_structure_select, ["q3", "2k33"], parity=0), {"samples": 1000}),
    Claim("prop-4.7b", "odd k: parity structure with the two exceptional vertices",
          _res_claim(_structure_select, ["k33", "k33+q3"], parity=1), {"samples": 1000}),
    Claim("lemma-4.8", "a degree-4 mismatch vertex forces spectral norm squared above 4",
          _res_claim(_lemma_4_8_select, ["k33", "q3", "2k33", "k33+q3"]), {"samples": 1000}),
    Claim("prop-4.6", "Hamiltonian iff min restricted MMC <= 2 iff leaf-gadget l_1 distance <= 2", _prop_4_6,
          {"budget": 10**6}),
    Claim("prop-4.9", "Hamiltonian iff min restricted spectral norm <= 2, signed and unsigned", _prop_4_9, {}),
    Claim("prop-5.2", "alignments of non-isomorphic SRGs have MMC >= lam - nu + 1 (2 when lam = nu)", _prop_5_2,
          {"samples": 10_000}),
    Claim("cor-5.3", "alignments of non-isomorphic Latin square graphs have MMC >= sqrt(n) - 5", _cor_5_3,
          {"samples": 10_000, "gamma": "z2"}),
    Claim("prop-A.1", "the twinned alignment has a sqrt(n)-regular mismatch graph on even cells", _prop_a_1,
          {"gamma": "trivial"}),
    Claim("lemma-A.2", "parity and twinning clauses of the canonical cell map", _lemma_a_2, {"gamma": "trivial"}),
]}


def run_claim(claim_id: str, seed: int = 0, **params) -> VerificationReport:
    """Run a registered claim; ``params`` override the claim's defaults (None values are ignored)."""
    if claim_id not in CLAIMS:
        raise ClaimError(f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}")
    claim = CLAIMS[claim_id]
    merged = dict(claim.defaults)
    merged.update({k: v for k, v in params.items() if v is not None})
    if merged.get("samples", 0) > MAX_SAMPLES:
        raise ClaimError(f"samples capped at {MAX_SAMPLES}")
    rep = VerificationReport(claim_id, seed=seed, params=dict(sorted(merged.items())))
    rng = rng_from_seed(seed)
    start = time.perf_counter()
    claim.run(rep, merged, rng)
    rep.wall_time = time.perf_counter() - start
    return rep


__all__ = ["CLAIMS", "Claim", "ClaimError", "VerificationReport", "run_claim", "leaf_reduction_instance", "core_graph"]
