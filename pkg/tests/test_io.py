import pytest
from hypothesis import given, settings, strategies as st

from mismatch import io
from mismatch.families import shrikhande_graph
from mismatch.gadgets import build_gq
from mismatch.families import complete_graph
from mismatch.graph import Alignment, Graph, GraphError, SignedGraph, mismatch_graph
from strategies import aligned_pairs, graphs

LABELS = st.recursive(
    st.one_of(st.integers(-50, 50), st.text(alphabet="abcxyz_#019", min_size=1, max_size=5)),
    lambda inner: st.tuples(inner, inner),
    max_leaves=4,
)


@st.composite
def labelled_graphs(draw):
    labels = draw(st.lists(LABELS, min_size=1, max_size=7, unique=True))
    g = draw(graphs(n=len(labels)))
    return g.relabel(dict(zip(range(len(labels)), labels)))


@settings(max_examples=150, deadline=None)
@given(labelled_graphs())
def test_text_roundtrip(g):
    back = io.graph_from_text(io.graph_to_text(g))
    assert back.vertices == g.vertices and back.edges == g.edges


@settings(max_examples=150, deadline=None)
@given(labelled_graphs())
def test_json_roundtrip(g):
    back = io.graph_from_json(io.graph_to_json(g))
    assert back.vertices == g.vertices and back.edges == g.edges


@settings(max_examples=80, deadline=None)
@given(aligned_pairs())
def test_signed_and_alignment_roundtrip(case):
    g, h, pi = case
    sg = mismatch_graph(g, h, pi)
    back = io.signed_from_json(io.signed_to_json(sg))
    assert back.pos_edges == sg.pos_edges and back.neg_edges == sg.neg_edges
    assert io.alignment_from_json(io.alignment_to_json(pi)) == pi


def test_bare_edge_list_without_vertex_lines():
    g = io.graph_from_text("c triangle\np 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g.vertices == (1, 2, 3) and g.m == 3
    zero = io.graph_from_text("p 2 1\ne 0 1\n")
    assert zero.vertices == (0, 1)


def test_text_format_errors():
    with pytest.raises(GraphError):
        io.graph_from_text("e 1 2\n")
    with pytest.raises(GraphError):
        io.graph_from_text("p 3 2\ne 1 2\n")
    with pytest.raises(GraphError):
        io.graph_from_text("p 2 1\nx 1 2\n")
    with pytest.raises(GraphError):
        io.graph_to_text(Graph(["a b"]))


def test_tuple_and_gadget_labels_survive_files(tmp_path):
    for g in (shrikhande_graph(), build_gq(complete_graph(4), 2).graph):
        for name in ("g.json", "g.txt"):
            io.save_graph(g, tmp_path / name)
            back = io.load_graph(tmp_path / name)
            assert back.vertices == g.vertices and back.edges == g.edges


def test_dumps_is_deterministic():
    assert io.dumps({"b": 1, "a": [1, 2]}) == io.dumps({"a": [1, 2], "b": 1})
    assert io.dumps({}).endswith("\n")


def test_signed_json_shape():
    data = io.signed_to_json(SignedGraph([0, 1, 2], [(0, 1)], [(1, 2)]))
    assert data == {"vertices": [0, 1, 2], "pos": [[0, 1]], "neg": [[1, 2]]}
    assert io.alignment_to_json(Alignment({(0, 1): "x"})) == [[[0, 1], "x"]]
