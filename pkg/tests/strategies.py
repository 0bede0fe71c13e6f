"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from mismatch.graph import Alignment, Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, n: int | None = None) -> Graph:
    order = n if n is not None else draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(order), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(order), [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_pairs(draw, min_n: int = 1, max_n: int = 6):
    order = draw(st.integers(min_n, max_n))
    return draw(graphs(n=order)), draw(graphs(n=order))


@st.composite
def aligned_pairs(draw, min_n: int = 1, max_n: int = 8):
    g, h = draw(graph_pairs(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, h, Alignment.from_indices(g, h, perm)
