import networkx as nx
import pytest

from permsim.graphio import (FormatError, Graph, adjacency_matrix, dedup_graphs, detect_format,
                             enumerate_graphs, isomorphism_classes, parse_dimacs, parse_graph6,
                             parse_matrix_text, read_graph6_file, to_graph6)
from permsim.matrix import Matrix


def test_graph6_examples():
    assert parse_graph6("A_") == Graph.from_edges(2, [(0, 1)])
    assert parse_graph6("A?") == Graph.from_edges(2, [])
    assert parse_graph6("Bw") == Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert parse_graph6(">>graph6<<A_\n") == parse_graph6("A_")


@pytest.mark.parametrize("bad", ["", "A", "A__", "A\x7f", "Bx", "~?@A"])
def test_graph6_malformed(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


@pytest.mark.parametrize("n", range(1, 7))
def test_graph6_roundtrip_all_graphs(n):
    for G in enumerate_graphs(n):
        s = to_graph6(G)
        assert parse_graph6(s) == G
        if n in (4, 5):
            H = nx.from_graph6_bytes(s.encode())
            assert {tuple(sorted(e)) for e in H.edges()} == set(G.edges)


def test_graph6_agrees_with_networkx_encoder():
    G = nx.petersen_graph()
    s = nx.to_graph6_bytes(G, header=False).decode().strip()
    ours = parse_graph6(s)
    assert ours.n == 10 and ours.edges == {tuple(sorted(e)) for e in G.edges()}
    assert to_graph6(ours) == s


def test_matrix_text():
    assert parse_matrix_text("2\n0 1\n1 0\n") == Matrix([[0, 1], [1, 0]])
    assert parse_matrix_text("1\n7\n") == Matrix([[7]])
    assert parse_matrix_text("2\n-5 123456789012345678901234567890\n0 0\n")[0, 1] == \
        123456789012345678901234567890
    for bad in ["2\n0 1\n1\n", "0\n", "2\n0 x\n1 0\n", "", "2\n0 1\n1 0\n1 1\n"]:
        with pytest.raises(FormatError):
            parse_matrix_text(bad)


def test_dimacs():
    text = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
    assert parse_dimacs(text) == Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    for bad in ["e 1 2\n", "p edge 2 1\ne 1 1\n", "p edge 2 2\ne 1 2\n",
                "p edge 3 2\ne 1 2\ne 2 1\n", "p edge 2 1\nx 1 2\n"]:
        with pytest.raises(FormatError):
            parse_dimacs(bad)


def test_detect_format():
    assert detect_format("p edge 2 1\ne 1 2\n") == "dimacs"
    assert detect_format("c hi\np edge 2 0\n") == "dimacs"
    assert detect_format("2\n0 1\n1 0\n") == "matrix"
    assert detect_format("A_\n") == "graph6"


def test_adjacency_examples():
    assert adjacency_matrix(Graph.from_edges(3, [])) == Matrix.zeros(3)
    assert adjacency_matrix(parse_graph6("A_")) == Matrix([[0, 1], [1, 0]])
    star = adjacency_matrix(Graph.from_edges(5, [(0, k) for k in range(1, 5)]))
    assert star.tolist()[0] == [0, 1, 1, 1, 1]
    assert star.tolist()[1:] == [[1, 0, 0, 0, 0]] * 4


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    assert Graph.from_edges(3, [(2, 0), (0, 2)]).edges == {(0, 2)}


@pytest.mark.parametrize("n,labeled,classes", [(1, 1, 1), (2, 2, 2), (3, 8, 4), (4, 64, 11),
                                               (5, 1024, 34)])
def test_enumeration_counts(n, labeled, classes):
    assert sum(1 for _ in enumerate_graphs(n)) == labeled
    assert len(isomorphism_classes(n)) == classes


def test_enumeration_deterministic_and_symmetric():
    assert [to_graph6(G) for G in isomorphism_classes(4)] == \
        [to_graph6(G) for G in isomorphism_classes(4)]
    for G in enumerate_graphs(4):
        A = adjacency_matrix(G).tolist()
        assert all(A[i][j] == A[j][i] for i in range(4) for j in range(4))
        assert all(A[i][i] == 0 for i in range(4))
    with pytest.raises(ValueError):
        next(enumerate_graphs(8))


def test_dedup_graphs_matches_networkx_classes():
    graphs = list(enumerate_graphs(4))
    kept = dedup_graphs(graphs)
    assert len(kept) == 11
    nx_graphs = []
    for G in kept:
        H = nx.Graph()
        H.add_nodes_from(range(G.n))
        H.add_edges_from(G.edges)
        nx_graphs.append(H)
    for i in range(len(nx_graphs)):
        for j in range(i + 1, len(nx_graphs)):
            assert not nx.is_isomorphic(nx_graphs[i], nx_graphs[j])


def test_read_graph6_file():
    assert read_graph6_file("A_\n\nBw\n") == [parse_graph6("A_"), parse_graph6("Bw")]
    assert read_graph6_file("") == []
