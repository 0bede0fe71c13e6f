import networkx as nx
import pytest

from mismatch.families import (
    complete_bipartite, cubic_graphs, cycle_graph, disjoint_union, figure_pair, fixture_corpus, hypercube,
    moebius_ladder, named_graph, petersen_graph, prism_graph, regular_corpus, rook_graph, shrikhande_graph,
)
from mismatch.graph import Graph, regular_degree
from mismatch.oracles import (
    OracleCapError, are_isomorphic, color_refinement, hamiltonian_cycle, is_hamiltonian_cycle,
)


def nx_graph(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(g.edges)
    return out


# known catalog sizes of connected cubic graphs
@pytest.mark.parametrize("n,count", [(4, 1), (6, 2), (8, 5), (10, 19)])
def test_connected_cubic_catalog_sizes(n, count):
    graphs = cubic_graphs(n)
    assert len(graphs) == count
    assert all(regular_degree(g) == 3 and g.is_connected() for g in graphs)
    for a in range(len(graphs)):
        for b in range(a + 1, len(graphs)):
            assert not nx.is_isomorphic(nx_graph(graphs[a]), nx_graph(graphs[b]))


def test_disconnected_cubic_catalog_includes_two_k4():
    graphs = cubic_graphs(8, connected=False)
    assert len(graphs) == 6
    assert sum(not g.is_connected() for g in graphs) == 1


def test_cubic_six_catalog_matches_networkx_atlas():
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6 and all(d == 3 for _, d in g.degree())]
    ours = cubic_graphs(6)
    assert len(atlas) == len(ours)
    assert all(any(nx.is_isomorphic(nx_graph(o), a) for o in ours) for a in atlas)


def test_named_fixtures():
    assert nx.is_isomorphic(nx_graph(petersen_graph()), nx.petersen_graph())
    assert nx.is_isomorphic(nx_graph(hypercube(3)), nx.hypercube_graph(3))
    assert nx.is_isomorphic(nx_graph(prism_graph(3)), nx.circular_ladder_graph(3))
    assert nx.is_isomorphic(nx_graph(moebius_ladder(8)), nx.circulant_graph(8, [1, 4]))
    assert nx.is_isomorphic(nx_graph(rook_graph(4)), nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4)))
    assert regular_degree(shrikhande_graph()) == 6
    assert named_graph("k3,3").m == 9
    assert named_graph("cubic8-2").n == 8
    with pytest.raises(KeyError):
        named_graph("dodecahedron")


def test_figure_pair_orders_match():
    g, h = figure_pair()
    assert g.n == h.n


def test_corpus_contents():
    corpus = fixture_corpus(8)
    assert all(g.n <= 8 for g in corpus.values())
    pairs = sum(1 for a in corpus for b in corpus if a < b and corpus[a].n == corpus[b].n)
    assert pairs >= 30
    reg = regular_corpus()
    assert "shrikhande" in reg and "rook4" in reg
    assert all(regular_degree(g) is not None for g in reg.values())


def test_hamiltonian_oracle():
    assert hamiltonian_cycle(petersen_graph()) is None
    cyc = hamiltonian_cycle(hypercube(3))
    assert is_hamiltonian_cycle(hypercube(3), cyc)
    assert hamiltonian_cycle(disjoint_union(cycle_graph(3), cycle_graph(3))) is None
    with pytest.raises(OracleCapError):
        hamiltonian_cycle(cycle_graph(30))
    # every connected cubic graph on 8 vertices is Hamiltonian; on 10, Petersen and the bridged graph are not
    assert all(hamiltonian_cycle(g) for g in cubic_graphs(8))
    non_ham = [nx_graph(g) for g in cubic_graphs(10) if hamiltonian_cycle(g) is None]
    assert len(non_ham) == 2
    assert sum(nx.is_isomorphic(g, nx.petersen_graph()) for g in non_ham) == 1
    assert sum(nx.has_bridges(g) for g in non_ham) == 1


def test_isomorphism_oracle_against_networkx():
    cubic = cubic_graphs(8)
    for a in cubic:
        for b in cubic:
            ours = are_isomorphic(a, b) is not None
            assert ours == nx.is_isomorphic(nx_graph(a), nx_graph(b))
    relabelled = complete_bipartite(3, 3).relabel({i: f"v{i}" for i in range(6)})
    iso = are_isomorphic(complete_bipartite(3, 3), relabelled)
    assert iso is not None and all(relabelled.has_edge(iso[u], iso[v]) for u, v in complete_bipartite(3, 3).edges)


def test_color_refinement_cannot_split_regular_graphs():
    colors = color_refinement([shrikhande_graph(), rook_graph(4)])
    assert sorted(colors[0]) == sorted(colors[1])
