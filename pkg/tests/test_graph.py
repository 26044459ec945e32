import pytest
from hypothesis import given, strategies as st

from ramsey_equiv.graph import (
    CliqueWitness,
    DisjointPairWitness,
    EdgeColouring,
    Graph,
    GraphError,
    colour_class,
    complete_graph,
    union_subgraph,
    validate_witness,
)
from ramsey_equiv.graphio import GraphFileError, format_graph, parse_graph_text


def c5_pair():
    K5 = complete_graph(5)
    return K5, EdgeColouring.from_function(K5, 2, lambda u, v: 0 if (v - u) % 5 in (1, 4) else 1)


@pytest.mark.parametrize("m, edges", [(0, 0), (1, 0), (6, 15)])
def test_complete_graph_sizes(m, edges):
    G = complete_graph(m)
    assert G.n == m
    assert G.edge_count == edges == len(G.edges())


def test_graph_rejects_asymmetric_and_loops():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphError):
        Graph(1, [0b1])
    with pytest.raises(GraphError):
        Graph(2, [0b100, 0])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_colouring_must_be_total_and_in_range():
    K3 = complete_graph(3)
    with pytest.raises(GraphError):
        EdgeColouring(K3, 2, {(0, 1): 0, (0, 2): 0})
    with pytest.raises(GraphError):
        EdgeColouring(K3, 2, {(0, 1): 0, (0, 2): 0, (1, 2): 2})
    with pytest.raises(GraphError):
        EdgeColouring(Graph.from_edges(3, [(0, 1)]), 2, {(0, 1): 0, (1, 2): 1})


def test_colour_class_examples():
    K3 = complete_graph(3)
    mono = EdgeColouring.from_function(K3, 2, lambda u, v: 0)
    assert colour_class(K3, mono, 0) == K3
    assert colour_class(K3, mono, 1).edge_count == 0
    K5, c = c5_pair()
    red = colour_class(K5, c, 0)
    assert set(red.edges()) == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    with pytest.raises(GraphError):
        colour_class(K3, mono, 2)


def test_union_subgraph_examples():
    K5, c = c5_pair()
    both = union_subgraph(K5, c, {0, 1})
    assert both.edge_count == 10
    assert both == K5
    assert union_subgraph(K5, c, {1}) == colour_class(K5, c, 1)
    with pytest.raises(GraphError):
        union_subgraph(K5, c, set())


def test_validate_witness_examples():
    K3 = complete_graph(3)
    mono = EdgeColouring.from_function(K3, 2, lambda u, v: 0)
    assert validate_witness(K3, mono, CliqueWitness(0, {0, 1, 2}))
    assert not validate_witness(K3, mono, CliqueWitness(1, {0, 1, 2}))
    K5 = complete_graph(5)
    mono5 = EdgeColouring.from_function(K5, 1, lambda u, v: 0)
    assert validate_witness(K5, mono5, DisjointPairWitness(0, {0, 1, 2}, {3, 4}))
    assert not validate_witness(K5, mono5, DisjointPairWitness(0, {0, 1, 2}, {2, 3}))
    assert not validate_witness(K5, mono5, CliqueWitness(0, {0, 7}))
    assert not validate_witness(K5, mono5, CliqueWitness(3, {0, 1}))


edge_lists = st.integers(0, 9).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), max_size=30),
    )
)


@given(edge_lists, st.integers(1, 4), st.randoms(use_true_random=False))
def test_public_graphs_are_symmetric_and_unions_restore(data, r, rnd):
    n, raw = data
    edges = {(min(u, v), max(u, v)) for u, v in raw if u != v}
    G = Graph.from_edges(n, edges)
    for v in range(G.n):
        assert not G.has_edge(v, v)
        for u in G.neighbours(v):
            assert G.has_edge(u, v) and u < G.n
    c = EdgeColouring.from_function(G, r, lambda u, v: rnd.randrange(r))
    assert union_subgraph(G, c, range(r)) == G
    w = CliqueWitness(0, frozenset(list(range(min(n, 3)))))
    assert validate_witness(G, c, w) == validate_witness(G, c, w)


def test_graph_file_roundtrip():
    K5, c = c5_pair()
    text = format_graph(K5, c)
    assert text.splitlines()[0] == "5 10 2"
    G2, c2 = parse_graph_text(text)
    assert G2 == K5 and c2 == c
    G3, c3 = parse_graph_text(format_graph(K5))
    assert G3 == K5 and c3 is None


@pytest.mark.parametrize(
    "text",
    [
        "3 2 1\n0 1 0\n0 1 0\n",  # duplicate
        "3 2 1\n0 1 0\n1 0 0\n",  # duplicate reversed
        "3 1 1\n1 1 0\n",  # self-loop
        "3 2 1\n0 1 0\n",  # too few lines
        "3 1 1\n0 5 0\n",  # out of range
        "3 2 2\n0 1 0\n1 2 -1\n",  # mixed coloured / uncoloured
        "3 1 2\n0 1 2\n",  # colour out of range
        "x y z\n",
        "",
    ],
)
def test_graph_file_rejects(text):
    with pytest.raises(GraphFileError):
        parse_graph_text(text)
