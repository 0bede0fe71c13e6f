"""Cayley tables, Latin square graphs, strong regularity, and twinned alignments.

Elements of the Klein four-group are written ``"0_s" .. "3_s"`` so that they
never collide with the integers ``0 .. 3`` of the cyclic group of order 4;
the canonical correspondence ``i <-> "i_s"`` is what "twinned" refers to.
Direct products use tuples ``(g, i)`` in lexicographic order.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from .graph import Alignment, Graph
from .norms import mmc

Element = Hashable
Cell = tuple


class LatinError(ValueError):
    pass


class LatinSquare:
    """An alpha x alpha array over an ordered alphabet; rows and columns are indexed by the alphabet too."""

    def __init__(self, alphabet: Sequence[Element], cells: Sequence[Sequence[Element]]):
        self.alphabet = tuple(alphabet)
        self.cells = tuple(tuple(row) for row in cells)
        self._pos = {a: i for i, a in enumerate(self.alphabet)}
        if len(self._pos) != len(self.alphabet):
            raise LatinError("alphabet has repeated symbols")
        a = len(self.alphabet)
        if len(self.cells) != a or any(len(r) != a for r in self.cells):
            raise LatinError(f"cells must form a {a}x{a} array")
        symbols = set(self.alphabet)
        for i in range(a):
            row = self.cells[i]
            col = [self.cells[j][i] for j in range(a)]
            if set(row) != symbols or set(col) != symbols:
                raise LatinError(f"row or column {i} is not a permutation of the alphabet")

    @property
    def order(self) -> int:
        return len(self.alphabet)

    def position(self, a: Element) -> int:
        try:
            return self._pos[a]
        except KeyError:
            raise LatinError(f"{a!r} is not in the alphabet") from None

    def entry(self, row: Element, col: Element) -> Element:
        return self.cells[self.position(row)][self.position(col)]

    def triples(self) -> list[tuple[Element, Element, Element]]:
        return [(r, c, self.cells[i][j]) for i, r in enumerate(self.alphabet) for j, c in enumerate(self.alphabet)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatinSquare):
            return NotImplemented
        return self.alphabet == other.alphabet and self.cells == other.cells

    def __hash__(self) -> int:
        return hash((self.alphabet, self.cells))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order})"


class GroupTable(LatinSquare):
    """Cayley table of a finite group; the constructor checks the group axioms exhaustively."""

    def __init__(self, elements: Sequence[Element], table: Sequence[Sequence[Element]]):
        super().__init__(elements, table)
        els = self.alphabet
        op = self.op
        for a, b, c in itertools.product(els, repeat=3):
            if op(op(a, b), c) != op(a, op(b, c)):
                raise LatinError(f"not associative at ({a!r}, {b!r}, {c!r})")
        ident = [e for e in els if all(op(e, x) == x and op(x, e) == x for x in els)]
        if not ident:
            raise LatinError("no identity element")
        self.identity = ident[0]
        for a in els:
            if not any(op(a, b) == self.identity for b in els):
                raise LatinError(f"{a!r} has no inverse")

    @property
    def elements(self) -> tuple[Element, ...]:
        return self.alphabet

    @property
    def table(self) -> tuple[tuple[Element, ...], ...]:
        return self.cells

    def op(self, a: Element, b: Element) -> Element:
        return self.entry(a, b)

    def element_order(self, a: Element) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.op(x, a)
            k += 1
        return k

    def to_json(self) -> dict:
        def enc(x):
            return list(map(enc, x)) if isinstance(x, tuple) else x

        return {"elements": [enc(e) for e in self.elements], "table": [[enc(e) for e in row] for row in self.table]}

    @classmethod
    def from_json(cls, data: dict) -> "GroupTable":
        def dec(x):
            return tuple(map(dec, x)) if isinstance(x, list) else x

        return cls([dec(e) for e in data["elements"]], [[dec(e) for e in row] for row in data["table"]])


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("group order must be positive")
    return GroupTable(range(n), [[(a + b) % n for b in range(n)] for a in range(n)])


def trivial_group() -> GroupTable:
    return cyclic_group(1)


def tag(i: int) -> str:
    return f"{i}_s"


def untag(x: str) -> int:
    return int(x[:-2])


def klein_group() -> GroupTable:
    els = [tag(i) for i in range(4)]
    return GroupTable(els, [[tag(a ^ b) for b in range(4)] for a in range(4)])


def dihedral_group(k: int) -> GroupTable:
    """Symmetries of the k-gon as pairs ``(r, f)`` meaning ``x -> (-1)^f x + r``; order 2k."""
    els = [(r, f) for f in (0, 1) for r in range(k)]

    def mul(a, b):
        r1, f1 = a
        r2, f2 = b
        return ((r1 + (-r2 if f1 else r2)) % k, f1 ^ f2)

    return GroupTable(els, [[mul(a, b) for b in els] for a in els])


def builtin_groups() -> dict[str, GroupTable]:
    return {"z4": cyclic_group(4), "z2z2": klein_group()}


def group_product(g1: GroupTable, g2: GroupTable) -> GroupTable:
    els = [(a, b) for a in g1.elements for b in g2.elements]
    table = [[(g1.op(a[0], b[0]), g2.op(a[1], b[1])) for b in els] for a in els]
    return GroupTable(els, table)


def relabel_isomorphic(g1: GroupTable, g2: GroupTable) -> dict | None:
    """A group isomorphism ``g1 -> g2`` found by brute force over element bijections (tiny groups only)."""
    if g1.order != g2.order or g1.order > 8:
        if g1.order != g2.order:
            return None
        raise ValueError("brute-force group isomorphism is limited to order 8")
    for images in itertools.permutations(g2.elements):
        f = dict(zip(g1.elements, images))
        if all(f[g1.op(a, b)] == g2.op(f[a], f[b]) for a in g1.elements for b in g1.elements):
            return f
    return None


# -- Latin square graphs -----------------------------------------------------

def latin_square_graph(ls: LatinSquare) -> Graph:
    """Cells ``(row, col)`` in row-major order; adjacent iff same row, same column, or same entry."""
    if ls.order < 2:
        raise LatinError("Latin square graphs need order at least 2")
    cells = [(r, c) for r in ls.alphabet for c in ls.alphabet]
    groups: dict[tuple, list] = {}
    for r, c in cells:
        groups.setdefault(("row", r), []).append((r, c))
        groups.setdefault(("col", c), []).append((r, c))
        groups.setdefault(("entry", ls.entry(r, c)), []).append((r, c))
    edges = set()
    order = {v: i for i, v in enumerate(cells)}
    for members in groups.values():
        for u, v in itertools.combinations(members, 2):
            edges.add((u, v) if order[u] < order[v] else (v, u))
    return Graph(cells, sorted(edges, key=lambda e: (order[e[0]], order[e[1]])))


class EdgeKind(enum.Enum):
    ROW = "row"
    COLUMN = "column"
    ENTRY = "entry"


def classify_edge(ls: LatinSquare, edge: tuple[Cell, Cell]) -> EdgeKind:
    (a1, a2), (b1, b2) = edge
    if (a1, a2) == (b1, b2):
        raise LatinError("an edge needs two distinct cells")
    kinds = []
    if a1 == b1:
        kinds.append(EdgeKind.ROW)
    if a2 == b2:
        kinds.append(EdgeKind.COLUMN)
    if ls.entry(a1, a2) == ls.entry(b1, b2):
        kinds.append(EdgeKind.ENTRY)
    if not kinds:
        raise LatinError(f"{edge!r} is not an edge of the Latin square graph")
    if len(kinds) > 1:
        raise LatinError(f"{edge!r} satisfies several adjacency conditions")
    return kinds[0]


@dataclass(frozen=True)
class SrgParams:
    n: int
    d: int
    lam: int
    nu: int

    def feasible(self) -> bool:
        return self.d * (self.d - self.lam - 1) == (self.n - self.d - 1) * self.nu

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.d, self.lam, self.nu)


def detect_srg(g: Graph) -> SrgParams | None:
    """Parameters if ``g`` is strongly regular, checked over every vertex pair.

    A graph with no non-adjacent pairs (complete) reports ``nu = 0``; one with
    no edges reports ``lam = 0``.
    """
    degs = set(g.degrees())
    if len(degs) > 1 or g.n == 0:
        return None
    d = degs.pop()
    a = g.adjacency_matrix()
    common = a @ a
    off = ~np.eye(g.n, dtype=bool)
    adj = (a == 1) & off
    non = (a == 0) & off
    lam_vals = np.unique(common[adj])
    nu_vals = np.unique(common[non])
    if lam_vals.size > 1 or nu_vals.size > 1:
        return None
    lam = int(lam_vals[0]) if lam_vals.size else 0
    nu = int(nu_vals[0]) if nu_vals.size else 0
    return SrgParams(g.n, d, lam, nu)


def srg_mismatch_bound(params: SrgParams) -> int:
    """Lower bound on MMC for alignments of non-isomorphic SRGs sharing ``params``.

    ``lam - nu + 1``, raised to 2 when ``lam == nu``.
    """
    if params.lam < params.nu:
        raise LatinError("bound needs lam >= nu")
    return 2 if params.lam == params.nu else params.lam - params.nu + 1


def srg_bound_check(g: Graph, h: Graph, pi: Alignment, params: SrgParams | None = None) -> bool:
    """True iff ``pi`` is an isomorphism or its MMC reaches :func:`srg_mismatch_bound`."""
    pg = params or detect_srg(g)
    ph = params or detect_srg(h)
    if pg is None or ph is None or pg != ph:
        raise LatinError("both graphs must be strongly regular with identical parameters")
    value = mmc(g, h, pi).value
    return value == 0 or value >= srg_mismatch_bound(pg)


# -- twinned alignment ---------------------------------------------------------

def _z4_part(x) -> int:
    """The cyclic-or-Klein coordinate of an element, as an integer 0..3."""
    last = x[-1] if isinstance(x, tuple) else x
    return untag(last) if isinstance(last, str) else int(last)


def twin_element(x):
    """Canonical correspondence ``g_i -> g_{i_s}`` (also ``i -> i_s`` for bare integers)."""
    if isinstance(x, tuple):
        return x[:-1] + (tag(x[-1]),)
    return tag(x)


def vertex_parity(cell: Cell) -> int:
    """0 for even cells ``(g_i, h_j)`` with i+j even, else 1; works on both sides."""
    return (_z4_part(cell[0]) + _z4_part(cell[1])) % 2


def twin_cell(cell: Cell) -> Cell:
    return (twin_element(cell[0]), twin_element(cell[1]))


def is_twinned(ls_g: LatinSquare, ls_h: LatinSquare, u: Cell, v: Cell) -> bool:
    """Whether ``u`` (cyclic side) and ``v`` (Klein side) hold corresponding entries."""
    try:
        eu = ls_g.entry(*u)
        ev = ls_h.entry(*v)
    except (LatinError, TypeError) as exc:
        raise LatinError(f"malformed cells {u!r}, {v!r}") from exc
    return twin_element(eu) == ev


@dataclass(frozen=True)
class TwinnedInstance:
    gamma: GroupTable
    cyclic_side: GroupTable
    klein_side: GroupTable
    g: Graph
    h: Graph
    pi: Alignment


def twinned_instance(gamma: GroupTable) -> TwinnedInstance:
    z4, z2z2 = cyclic_group(4), klein_group()
    if gamma.order == 1:
        # keep the bare Z4 / Klein alphabets for the trivial group
        cyc, kle = z4, z2z2
    else:
        cyc, kle = group_product(gamma, z4), group_product(gamma, z2z2)
    g = latin_square_graph(cyc)
    h = latin_square_graph(kle)
    pi = Alignment({cell: twin_cell(cell) for cell in g.vertices})
    return TwinnedInstance(gamma, cyc, kle, g, h, pi)


def twinned_alignment(gamma: GroupTable) -> tuple[Graph, Graph, Alignment]:
    inst = twinned_instance(gamma)
    return inst.g, inst.h, inst.pi


def group_by_name(name: str) -> GroupTable:
    """``z4``, ``z2z2``, ``trivial``, ``z<n>``, ``d<k>`` (order 2k) or ``product:<a>,<b>``."""
    key = name.strip().lower()
    if key.startswith("product:"):
        parts = key[len("product:"):].split(",")
        if len(parts) != 2:
            raise ValueError("product needs exactly two factors")
        return group_product(group_by_name(parts[0]), group_by_name(parts[1]))
    if key == "trivial":
        return trivial_group()
    if key == "z2z2":
        return klein_group()
    if key.startswith("z") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    if key.startswith("d") and key[1:].isdigit():
        return dihedral_group(int(key[1:]))
    raise KeyError(f"unknown group {name!r}")
