"""Distance solvers: minimise a mismatch norm over bijections.

Three engines share one result type:

* :func:`delta_exhaustive` scores every permutation in vectorised batches;
* :func:`delta_branch_and_bound` assigns vertices one at a time and prunes
  with admissible lower bounds (edit count, MMC, and spectral norm);
* the restricted searches only range over a structured family, either
  partition-preserving bijections or clique-aligned gadget alignments.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .gadgets import CliqueGadget, CycleCliqueGadget
from .graph import Alignment, Graph, NormValue, VertexId
from .norms import MmcValue, as_exponent, mmc, mmc_sandwich, perm_edit

METRICS = ("edit", "p", "abs_p")
MODES = ("exhaustive", "branch_and_bound", "restricted")
DEFAULT_BUDGET = 10**7
EXHAUSTIVE_CAP = 10
BNB_CAP = {"edit": 24, "mmc": 20, "spectral": 20}
_BATCH = 20_000
_FLOAT_SLACK = 1e-9


class SolverError(ValueError):
    """Precondition failure: order mismatch, cap exceeded, malformed family."""


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search could certify an answer."""

    def __init__(self, partial: "DistanceResult"):
        super().__init__(f"search budget exhausted after {partial.nodes_expanded} nodes")
        self.partial = partial


@dataclass(frozen=True)
class DistanceQuery:
    metric: str = "edit"
    p: float | None = None
    mode: str = "branch_and_bound"
    budget: int = DEFAULT_BUDGET
    threshold: float | None = None
    max_order: int | None = None

    def __post_init__(self):
        if self.metric not in METRICS:
            raise ValueError(f"metric must be one of {METRICS}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.threshold is not None and self.threshold < 0:
            raise ValueError("threshold must be non-negative")
        if self.metric != "edit":
            if self.p is None:
                raise ValueError(f"metric {self.metric!r} needs an exponent p")
            object.__setattr__(self, "p", as_exponent(self.p))

    @property
    def objective(self) -> str:
        """The scalar search objective: ``edit``, ``mmc`` (p in {1, inf}), ``spectral`` or ``sandwich``."""
        if self.metric == "edit":
            return "edit"
        if self.p == 1 or math.isinf(self.p):
            return "mmc"
        if self.p == 2:
            return "spectral"
        return "sandwich"


@dataclass(frozen=True)
class DistanceResult:
    value: NormValue
    best_alignment: Alignment | None
    optimal: bool
    nodes_expanded: int
    decision: str | None = None

    def to_dict(self) -> dict:
        out = {
            "value": self.value.to_dict(),
            "alignment": None if self.best_alignment is None else [[u, v] for u, v in self.best_alignment.items()],
            "optimal": self.optimal,
            "nodes": self.nodes_expanded,
        }
        if self.decision is not None:
            out["decision"] = self.decision
        return out


@dataclass(frozen=True)
class RestrictedFamily:
    """Bijections sending ``source_partition[i]`` onto ``target_partition[i]`` for each class i."""

    source_partition: tuple[tuple[VertexId, ...], ...]
    target_partition: tuple[tuple[VertexId, ...], ...]

    def __post_init__(self):
        src = tuple(tuple(c) for c in self.source_partition)
        dst = tuple(tuple(c) for c in self.target_partition)
        object.__setattr__(self, "source_partition", src)
        object.__setattr__(self, "target_partition", dst)
        if len(src) != len(dst):
            raise SolverError("partitions have different numbers of classes")
        for a, b in zip(src, dst):
            if len(a) != len(b):
                raise SolverError(f"class sizes differ: {len(a)} vs {len(b)}")

    def validate(self, g: Graph, h: Graph) -> None:
        for part, graph, side in ((self.source_partition, g, "source"), (self.target_partition, h, "target")):
            flat = [v for c in part for v in c]
            if len(flat) != len(set(flat)) or set(flat) != set(graph.vertices):
                raise SolverError(f"{side} partition does not cover its graph exactly once")

    def size(self) -> int:
        return math.prod(math.factorial(len(c)) for c in self.source_partition)

    def contains(self, pi: Alignment) -> bool:
        return all(
            set(pi[v] for v in a) == set(b) for a, b in zip(self.source_partition, self.target_partition)
        )


def _check_orders(g: Graph, h: Graph) -> None:
    if g.n != h.n:
        raise SolverError(f"order mismatch: {g.n} vs {h.n}")


# -- batched scoring ---------------------------------------------------------

class BatchScorer:
    """Scores many index permutations ``perm[i] = image of g-vertex i`` at once."""

    def __init__(self, g: Graph, h: Graph):
        self.g, self.h = g, h
        self.ag = g.adjacency_matrix(dtype=np.int8)
        self.ah = h.adjacency_matrix(dtype=np.int8)
        self.edges = np.array(g.index_edges, dtype=np.int64).reshape(-1, 2)
        self.deg_g = np.array(g.degrees(), dtype=np.int64)
        self.deg_h = np.array(h.degrees(), dtype=np.int64)
        inc = np.zeros((len(self.edges), g.n), dtype=np.int64)
        inc[np.arange(len(self.edges)), self.edges[:, 0]] = 1
        inc[np.arange(len(self.edges)), self.edges[:, 1]] = 1
        self.incidence = inc

    def _hits(self, perms: np.ndarray) -> np.ndarray:
        e = self.edges
        return self.ah[perms[:, e[:, 0]], perms[:, e[:, 1]]].astype(np.int64)

    def edit(self, perms: np.ndarray) -> np.ndarray:
        return self.g.m + self.h.m - 2 * self._hits(perms).sum(axis=1)

    def mmc(self, perms: np.ndarray) -> np.ndarray:
        shared = self._hits(perms) @ self.incidence
        mis = self.deg_g[None, :] + self.deg_h[perms] - 2 * shared
        return mis.max(axis=1) if self.g.n else np.zeros(len(perms), dtype=np.int64)

    def spectral(self, perms: np.ndarray, absolute: bool) -> np.ndarray:
        d = self.ag[None, :, :].astype(np.float64) - self.ah[perms[:, :, None], perms[:, None, :]]
        if absolute:
            d = np.abs(d)
        vals = np.linalg.eigvalsh(d)
        return np.maximum(np.abs(vals[:, 0]), np.abs(vals[:, -1]))

    def score(self, perms: np.ndarray, query: DistanceQuery) -> np.ndarray:
        obj = query.objective
        if obj == "edit":
            return self.edit(perms)
        if obj in ("mmc", "sandwich"):
            return self.mmc(perms)
        return self.spectral(perms, absolute=query.metric == "abs_p")


def _chunks(it: Iterator[Sequence[int]], n: int) -> Iterator[np.ndarray]:
    while True:
        block = list(itertools.islice(it, _BATCH))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), n)


def _minimise(g: Graph, h: Graph, perms: Iterator[Sequence[int]], query: DistanceQuery) -> DistanceResult:
    scorer = BatchScorer(g, h)
    best_val = None
    best_perm = None
    count = 0
    for block in _chunks(perms, g.n):
        vals = scorer.score(block, query)
        i = int(np.argmin(vals))
        count += len(block)
        # strict improvement keeps the lexicographically first minimiser
        if best_val is None or vals[i] < best_val - (_FLOAT_SLACK if query.objective == "spectral" else 0):
            best_val, best_perm = vals[i], block[i]
    if best_perm is None:
        raise SolverError("the alignment family is empty")
    pi = Alignment.from_indices(g, h, best_perm)
    if query.objective == "sandwich":
        value = mmc_sandwich(int(best_val), query.p)
    elif query.objective == "spectral":
        value = NormValue.of(float(best_val))
    else:
        value = NormValue.of(int(best_val))
    decision = None
    if query.threshold is not None:
        if value.hi <= query.threshold:
            decision = "yes"
        elif value.lo > query.threshold:
            decision = "no"
    return DistanceResult(value, pi, True, count, decision)


def delta_exhaustive(g: Graph, h: Graph, query: DistanceQuery | None = None) -> DistanceResult:
    """Exact minimum over all ``n!`` bijections, scanned in lexicographic order.

    For exponents outside {1, 2, inf} the result is the interval
    ``[min lo, min hi]`` of the per-alignment enclosures.
    """
    query = query or DistanceQuery(mode="exhaustive")
    _check_orders(g, h)
    cap = query.max_order if query.max_order is not None else EXHAUSTIVE_CAP
    if g.n > cap:
        raise SolverError(f"order {g.n} exceeds the exhaustive cap {cap}")
    return _minimise(g, h, itertools.permutations(range(h.n)), query)


# -- restricted families -----------------------------------------------------

def restricted_index_perms(g: Graph, h: Graph, fam: RestrictedFamily) -> Iterator[list[int]]:
    src = [[g.index(v) for v in c] for c in fam.source_partition]
    dst = [[h.index(v) for v in c] for c in fam.target_partition]
    per_class = [list(itertools.permutations(d)) for d in dst]
    for combo in itertools.product(*per_class):
        perm = [0] * g.n
        for s, images in zip(src, combo):
            for u, x in zip(s, images):
                perm[u] = x
        yield perm


def enumerate_restricted(g: Graph, h: Graph, fam: RestrictedFamily) -> Iterator[Alignment]:
    """Every bijection respecting the partitions, once each.

    Order is lexicographic in the image tuple of the source classes listed in order.
    """
    _check_orders(g, h)
    fam.validate(g, h)
    src = [v for c in fam.source_partition for v in c]
    for combo in itertools.product(*(itertools.permutations(c) for c in fam.target_partition)):
        yield Alignment(zip(src, itertools.chain.from_iterable(combo)))


def delta_restricted(g: Graph, h: Graph, fam: RestrictedFamily, query: DistanceQuery) -> DistanceResult:
    """Minimum of the query objective over a restricted family."""
    _check_orders(g, h)
    fam.validate(g, h)
    if query.objective in ("edit", "mmc", "spectral") and fam.size() > 50_000:
        domains = _family_domains(g, h, fam)
        return _BranchAndBound(g, h, query, domains).run()
    return _minimise(g, h, restricted_index_perms(g, h, fam), query)


def _family_domains(g: Graph, h: Graph, fam: RestrictedFamily) -> list[int]:
    domains = [0] * g.n
    for a, b in zip(fam.source_partition, fam.target_partition):
        mask = 0
        for x in b:
            mask |= 1 << h.index(x)
        for v in a:
            domains[g.index(v)] = mask
    return domains


def min_mmc_restricted(g: Graph, h: Graph, fam: RestrictedFamily, budget: int = DEFAULT_BUDGET) -> tuple[MmcValue, Alignment]:
    """Exact minimum MMC over the family, with a minimising alignment and a vertex of ``h`` attaining it."""
    _check_orders(g, h)
    fam.validate(g, h)
    query = DistanceQuery(metric="p", p=1, mode="restricted", budget=budget, max_order=max(g.n, 1))
    if fam.size() <= 50_000:
        res = _minimise(g, h, restricted_index_perms(g, h, fam), query)
    else:
        res = _BranchAndBound(g, h, query, _family_domains(g, h, fam)).run()
    pi = res.best_alignment
    return mmc(g, h, pi), pi


# -- branch and bound --------------------------------------------------------

def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def variable_order(g: Graph) -> list[int]:
    """Descending degree; ties go to the vertex with most already-ordered neighbours, then the lower index."""
    masks = g.neighbor_masks()
    degs = g.degrees()
    order: list[int] = []
    placed = 0
    left = set(range(g.n))
    while left:
        u = min(left, key=lambda i: (-degs[i], -(masks[i] & placed).bit_count(), i))
        order.append(u)
        left.discard(u)
        placed |= 1 << u
    return order


@dataclass
class _State:
    perm: list[int]
    inv: list[int]
    assigned: int
    used: int
    mis: list[int]  # mismatches among assigned pairs, per assigned g-vertex
    fixed: int  # total mismatched pairs among assigned vertices
    rest_g: int  # edges of g among unassigned vertices
    rest_h: int
    free: int  # number of unassigned vertices
    edit_slack: int = 0  # sum over assigned w of |r_g(w) - r_h(perm w)|
    slack: list[int] = field(default_factory=list)
    mmc_max: int = 0  # max over assigned w of mis[w] + slack[w]


class _BranchAndBound:
    def __init__(self, g: Graph, h: Graph, query: DistanceQuery, domains: list[int] | None = None):
        _check_orders(g, h)
        self.g, self.h, self.query = g, h, query
        obj = query.objective
        if obj == "sandwich":
            raise SolverError("interval-valued objectives are only supported by exhaustive search")
        self.obj = obj
        cap = query.max_order if query.max_order is not None else BNB_CAP[obj]
        if g.n > cap:
            raise SolverError(f"order {g.n} exceeds the branch-and-bound cap {cap}")
        n = g.n
        self.n = n
        self.ng = g.neighbor_masks()
        self.nh = h.neighbor_masks()
        self.full = (1 << n) - 1
        self.domains = domains if domains is not None else [self.full] * n
        self.order = variable_order(g)
        self.ag = g.adjacency_matrix(dtype=np.int8)
        self.ah = h.adjacency_matrix(dtype=np.int8)
        self.nodes = 0
        self.threshold = query.threshold
        self.cut_min = math.inf  # smallest bound among subtrees cut only by the threshold

    # bound bookkeeping ---------------------------------------------------

    def _child(self, s: _State, u: int, x: int):
        """Bound data after assigning ``u -> x``: (bound, new mis/slack entries, fixed delta, rest deltas)."""
        ng_u = self.ng[u] & s.assigned
        nh_x = self.nh[x] & s.used
        touched: dict[int, list[int]] = {}
        mis_u = 0
        for w in _bits(ng_u):
            hit = self.nh[x] >> s.perm[w] & 1
            touched[w] = [0 if hit else 1, -1, 0]  # mis delta, r_g delta, r_h delta
            if not hit:
                mis_u += 1
            else:
                touched[w][2] = -1
        for y in _bits(nh_x):
            w = s.inv[y]
            if w in touched:
                continue
            touched[w] = [1, 0, -1]
            mis_u += 1
        r_g_u = (self.ng[u] & ~s.assigned & ~(1 << u)).bit_count()
        r_h_x = (self.nh[x] & ~s.used & ~(1 << x)).bit_count()
        slack_u = abs(r_g_u - r_h_x)
        updates = []
        edit_slack = s.edit_slack + slack_u
        mmc_max = max(s.mmc_max, mis_u + slack_u)
        for w, (dm, dg, dh) in touched.items():
            y = s.perm[w]
            r_g = (self.ng[w] & ~s.assigned).bit_count() + dg
            r_h = (self.nh[y] & ~s.used).bit_count() + dh
            new_slack = abs(r_g - r_h)
            edit_slack += new_slack - s.slack[w]
            new_mis = s.mis[w] + dm
            mmc_max = max(mmc_max, new_mis + new_slack)
            updates.append((w, new_mis, new_slack))
        fixed = s.fixed + mis_u
        rest_g = s.rest_g - (self.ng[u] & ~s.assigned).bit_count()
        rest_h = s.rest_h - (self.nh[x] & ~s.used).bit_count()
        free = s.free - 1
        gap = abs(rest_g - rest_h)
        if self.obj == "edit":
            bound = fixed + edit_slack + gap
        else:
            bound = mmc_max
            if free and gap:
                bound = max(bound, -(-2 * gap // free))
            if self.obj == "spectral":
                bound = math.sqrt(bound)
        return bound, (mis_u, slack_u, updates, fixed, rest_g, rest_h, edit_slack, mmc_max)

    def _apply(self, s: _State, u: int, x: int, data) -> list:
        mis_u, slack_u, updates, fixed, rest_g, rest_h, edit_slack, mmc_max = data
        undo = [(w, s.mis[w], s.slack[w]) for w, _, _ in updates]
        saved = (s.fixed, s.rest_g, s.rest_h, s.edit_slack, s.mmc_max)
        for w, m, sl in updates:
            s.mis[w] = m
            s.slack[w] = sl
        s.perm[u] = x
        s.inv[x] = u
        s.mis[u] = mis_u
        s.slack[u] = slack_u
        s.assigned |= 1 << u
        s.used |= 1 << x
        s.fixed, s.rest_g, s.rest_h, s.edit_slack, s.mmc_max = fixed, rest_g, rest_h, edit_slack, mmc_max
        s.free -= 1
        return [undo, saved]

    def _revert(self, s: _State, u: int, x: int, token) -> None:
        undo, saved = token
        for w, m, sl in undo:
            s.mis[w] = m
            s.slack[w] = sl
        s.perm[u] = -1
        s.inv[x] = -1
        s.mis[u] = 0
        s.slack[u] = 0
        s.assigned &= ~(1 << u)
        s.used &= ~(1 << x)
        s.fixed, s.rest_g, s.rest_h, s.edit_slack, s.mmc_max = saved
        s.free += 1

    def _evaluate(self, perm: Sequence[int]) -> float:
        p = np.asarray(perm)
        if self.obj == "edit":
            return perm_edit(self.g, self.h, p, self.ah)
        d = self.ag.astype(np.int64) - self.ah[np.ix_(p, p)]
        if self.obj == "mmc":
            return int(np.abs(d).sum(axis=1).max()) if self.n else 0
        if self.query.metric == "abs_p":
            d = np.abs(d)
        if not self.n:
            return 0.0
        vals = np.linalg.eigvalsh(d.astype(float))
        return float(max(abs(vals[0]), abs(vals[-1])))

    def _initial_perm(self) -> list[int]:
        """Greedy seed respecting the domains: each variable takes its first free allowed target."""
        perm = [-1] * self.n
        used = 0
        for u in range(self.n):
            allowed = self.domains[u] & ~used
            if not allowed:
                return []
            x = (allowed & -allowed).bit_length() - 1
            perm[u] = x
            used |= 1 << x
        return perm

    def _root_state(self) -> _State:
        n = self.n
        return _State(
            perm=[-1] * n, inv=[-1] * n, assigned=0, used=0, mis=[0] * n, fixed=0,
            rest_g=self.g.m, rest_h=self.h.m, free=n, slack=[0] * n,
        )

    def root_bound(self) -> float:
        gap = abs(self.g.m - self.h.m)
        if self.obj == "edit":
            return gap
        b = -(-2 * gap // self.n) if self.n else 0
        return math.sqrt(b) if self.obj == "spectral" else b

    def _result(self, optimal: bool, lo: float, decision: str | None) -> DistanceResult:
        hi = self.best
        if self.obj != "spectral":
            hi = int(hi)
            lo = int(math.ceil(lo - _FLOAT_SLACK)) if math.isfinite(lo) else lo
        lo = min(lo, hi)
        value = NormValue.of(hi) if optimal or lo >= hi else NormValue.interval(lo, hi)
        pi = Alignment.from_indices(self.g, self.h, self.best_perm) if self.best_perm else None
        return DistanceResult(value, pi, optimal, self.nodes, decision)

    def _prune(self, bound: float) -> bool:
        slack = _FLOAT_SLACK if self.obj == "spectral" else 0
        if bound >= self.best - slack:
            return True
        if self.threshold is not None and bound > self.threshold + slack:
            self.cut_min = min(self.cut_min, bound)
            return True
        return False

    def run(self) -> DistanceResult:
        seed = self._initial_perm()
        if not seed:
            raise SolverError("no bijection satisfies the domain constraints")
        self.best = self._evaluate(seed)
        self.best_perm = seed
        root_lb = self.root_bound()
        c = self.threshold
        if c is not None and self.best <= c:
            return self._result(root_lb >= self.best, root_lb, "yes")
        state = self._root_state()

        class _Found(Exception):
            pass

        def dfs(depth: int) -> None:
            self.nodes += 1
            if self.nodes > self.query.budget:
                raise SearchBudgetExceeded(self._result(False, min(root_lb, self.best), None))
            if depth == self.n:
                val = self._evaluate(state.perm)
                if val < self.best - (_FLOAT_SLACK if self.obj == "spectral" else 0):
                    self.best = val
                    self.best_perm = list(state.perm)
                    if c is not None and val <= c:
                        raise _Found
                return
            u = self.order[depth]
            children = []
            for x in _bits(self.domains[u] & ~state.used):
                bound, data = self._child(state, u, x)
                children.append((bound, x, data))
            children.sort(key=lambda t: (t[0], t[1]))
            for bound, x, data in children:
                if self._prune(bound):
                    # siblings are sorted by bound, so the rest are cut as well
                    break
                token = self._apply(state, u, x, data)
                dfs(depth + 1)
                self._revert(state, u, x, token)

        try:
            dfs(0)
        except _Found:
            return self._result(self.best <= root_lb, root_lb, "yes")
        optimal = self.cut_min >= self.best
        lo = self.best if optimal else min(self.best, self.cut_min)
        decision = None
        if c is not None:
            decision = "yes" if self.best <= c else "no"
        return self._result(optimal, lo, decision)


def delta_branch_and_bound(g: Graph, h: Graph, query: DistanceQuery | None = None) -> DistanceResult:
    """Exact minimum by depth-first branch and bound.

    With a threshold ``c`` the search stops at the first alignment of value
    at most ``c`` (decision ``"yes"``), and only prunes subtrees whose bound
    exceeds ``c``; a finished search with no such alignment certifies
    ``"no"`` with ``value.lo > c``.  Raises :class:`SearchBudgetExceeded`
    if the node budget runs out first.
    """
    query = query or DistanceQuery()
    return _BranchAndBound(g, h, query).run()


def partial_lower_bound(g: Graph, h: Graph, partial: dict[int, int], objective: str = "edit") -> float:
    """The branch-and-bound bound at a partial assignment given as ``{g index: h index}``.

    Exposed for admissibility testing; ``objective`` is ``edit``, ``mmc`` or ``spectral``.
    """
    metric, p = ("edit", None) if objective == "edit" else ("p", 1 if objective == "mmc" else 2)
    bb = _BranchAndBound(g, h, DistanceQuery(metric=metric, p=p, max_order=max(g.n, 1)))
    state = bb._root_state()
    bound = bb.root_bound()
    for u, x in partial.items():
        bound, data = bb._child(state, u, x)
        bb._apply(state, u, x, data)
    return bound


def solve(g: Graph, h: Graph, query: DistanceQuery, family: RestrictedFamily | None = None) -> DistanceResult:
    """Dispatch on ``query.mode``."""
    if query.mode == "exhaustive":
        return delta_exhaustive(g, h, query)
    if query.mode == "restricted":
        if family is None:
            raise SolverError("restricted mode needs a partition family")
        return delta_restricted(g, h, family, query)
    return delta_branch_and_bound(g, h, query)


# -- conservative alignments of clique gadgets -------------------------------

def conservative_perm(gq: CliqueGadget, dnq: CycleCliqueGadget, sigma: Sequence[int]) -> list[int]:
    """Index permutation of the gadget alignment induced by a core bijection (by core index)."""
    g, h = gq.graph, dnq.graph
    core_g, core_h = gq.core.vertices, dnq.core.vertices
    perm = [0] * g.n
    for i, v in enumerate(core_g):
        w = core_h[sigma[i]]
        perm[g.index(v)] = h.index(w)
        for a, b in zip(gq.clique_of[v], dnq.clique_of[w]):
            perm[g.index(a)] = h.index(b)
    return perm


def conservative_search(gq, dnq, max_core: int = EXHAUSTIVE_CAP) -> DistanceResult:
    """Minimum edit count over clique-aligned alignments ``G[q] -> D_{n,q}``.

    The family is: any core bijection sigma, with the clique of ``v`` sent
    index-wise onto the clique of ``sigma(v)``.
    """
    if not isinstance(gq, CliqueGadget) or not isinstance(dnq, CycleCliqueGadget):
        raise SolverError("conservative search needs gadget objects carrying their clique structure")
    if gq.q != dnq.q or gq.core.n != dnq.n:
        raise SolverError("gadget parameters do not match")
    if gq.core.n > max_core:
        raise SolverError(f"core order {gq.core.n} exceeds cap {max_core}")
    g, h = gq.graph, dnq.graph
    ah = h.adjacency_matrix(dtype=np.int8)
    best, best_perm, count = None, None, 0
    for sigma in itertools.permutations(range(gq.core.n)):
        perm = conservative_perm(gq, dnq, sigma)
        val = perm_edit(g, h, perm, ah)
        count += 1
        if best is None or val < best:
            best, best_perm = val, perm
    return DistanceResult(NormValue.of(best), Alignment.from_indices(g, h, best_perm), True, count)


__all__ = [
    "DistanceQuery", "DistanceResult", "RestrictedFamily", "SearchBudgetExceeded", "SolverError",
    "delta_exhaustive", "delta_branch_and_bound", "delta_restricted", "enumerate_restricted",
    "min_mmc_restricted", "conservative_search", "conservative_perm", "partial_lower_bound",
    "variable_order", "solve", "BatchScorer", "restricted_index_perms",
]
