import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snctools.errors import GraphError
from snctools.graphs import (
    Graph,
    OrientedGraph,
    complete_graph,
    cycle_graph,
    directed_cycle,
    has_snp,
    path_graph,
    transitive_tournament,
)

import oracles as O

a, b, c, d = range(4)
DIGON_D = OrientedGraph(4, [(a, c), (b, d), (d, a), (c, b)], labels="abcd")


@st.composite
def oriented_graphs(draw, max_order=7):
    n = draw(st.integers(0, max_order))
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            choice = draw(st.sampled_from((0, 1, 2)))
            if choice == 1:
                arcs.append((u, v))
            elif choice == 2:
                arcs.append((v, u))
    return OrientedGraph(n, arcs)


@st.composite
def graphs(draw, max_order=7):
    n = draw(st.integers(0, max_order))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if draw(st.booleans())]
    return Graph(n, edges)


# neighborhoods


def test_neighborhood_path():
    assert path_graph(4).neighborhood(1) == {0, 2}


def test_neighborhood_edgeless():
    assert Graph(3).neighborhood(2) == frozenset()


def test_neighborhood_c5_roles():
    x, y, z, u, v = range(5)
    C5 = Graph(5, [(x, y), (y, z), (z, u), (u, v), (v, x)], labels="xyzuv")
    assert C5.neighborhood(x) == {y, v}


def test_neighborhood_out_of_range():
    with pytest.raises(GraphError):
        path_graph(3).neighborhood(3)


def test_out_in_three_cycle():
    D = directed_cycle(3)
    assert D.out_neighborhood(0) == {1}
    assert D.in_neighborhood(0) == {2}


def test_out_in_single_arc():
    D = OrientedGraph(2, [(0, 1)])
    assert D.out_neighborhood(1) == frozenset()
    assert D.in_neighborhood(1) == {0}


def test_out_in_digon_example():
    assert DIGON_D.out_neighborhood(a) == {c}
    assert DIGON_D.in_neighborhood(a) == {d}


def test_second_three_cycle():
    assert directed_cycle(3).second_out_neighborhood(0) == {2}


def test_second_transitive():
    assert transitive_tournament(3).second_out_neighborhood(0) == frozenset()


def test_second_digon_example():
    assert DIGON_D.second_out_neighborhood(a) == {b}
    assert DIGON_D.second_out_neighborhood(a) == O.second_set(DIGON_D.arcs, a)


def test_has_snp_examples():
    T = transitive_tournament(3)  # 0 -> 1 -> 2, 0 -> 2
    assert has_snp(T, 2)
    assert not has_snp(T, 0)
    assert has_snp(DIGON_D, a)


def test_has_snp_out_of_range():
    with pytest.raises(GraphError):
        has_snp(directed_cycle(3), 5)


# induced subgraphs, complement, edges between


def test_induced_c5_three_consecutive():
    H, mapping = cycle_graph(5).induced_subgraph({0, 1, 2})
    assert mapping == (0, 1, 2)
    assert H == path_graph(3)


def test_induced_identity():
    G = cycle_graph(5)
    H, mapping = G.induced_subgraph(G.vertices())
    assert mapping == tuple(G.vertices()) and H == G


def test_induced_chair_star():
    x, y, z, t, v = range(5)
    chair = Graph(5, [(x, y), (y, z), (z, t), (z, v)])
    H, mapping = chair.induced_subgraph({y, z, t, v})
    centre = mapping.index(z)
    assert H.degree(centre) == 3 and H.size() == 3


def test_induced_oriented():
    H, mapping = DIGON_D.induced_subgraph({a, c, b})
    assert mapping == (a, b, c)
    assert H.arcs == {(0, 2), (2, 1)}


def test_induced_out_of_range():
    with pytest.raises(GraphError):
        path_graph(3).induced_subgraph({0, 7})


def test_complement_c4():
    co = cycle_graph(4).complement()
    assert co.edges == {(0, 2), (1, 3)}


def test_complement_chair_is_cochair():
    n, chair = O.PATTERN_EDGES["chair"]
    _, cochair = O.PATTERN_EDGES["co-chair"]
    assert Graph(n, chair).complement() == Graph(n, cochair)


@given(graphs())
def test_complement_involution(G):
    assert G.complement().complement() == G


def test_edges_between_k22():
    G = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert G.edges_between({0, 1}, {2, 3}) == {(0, 2), (0, 3), (1, 2), (1, 3)}


def test_edges_between_components():
    G = Graph(4, [(0, 1), (2, 3)])
    assert G.edges_between({0, 1}, {2, 3}) == frozenset()


def test_edges_between_threshold_blocks():
    # A_1 = {0, 1}, X_1 = {2, 3}
    G = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert len(G.edges_between({0, 1}, {2, 3})) == 4


def test_edges_between_overlap():
    with pytest.raises(GraphError):
        complete_graph(3).edges_between({0, 1}, {1, 2})


# construction rules


def test_digon_rejected():
    with pytest.raises(GraphError):
        OrientedGraph(2, [(0, 1), (1, 0)])


def test_loop_rejected():
    with pytest.raises(GraphError):
        Graph(2, [(1, 1)])
    with pytest.raises(GraphError):
        OrientedGraph(2, [(0, 0)])


def test_with_arcs_only_missing_pairs():
    with pytest.raises(GraphError):
        DIGON_D.with_arcs([(c, a)])
    D = DIGON_D.with_arcs([(a, b)])
    assert D.has_arc(a, b) and D.order == 4


def test_equality_ignores_labels():
    assert Graph(2, [(0, 1)], labels="pq") == Graph(2, [(1, 0)])
    assert hash(Graph(2, [(0, 1)], labels="pq")) == hash(Graph(2, [(0, 1)]))


@settings(max_examples=200)
@given(oriented_graphs())
def test_neighbourhood_invariants(D):
    n = D.order
    for v in D.vertices():
        out = D.out_neighborhood(v)
        second = D.second_out_neighborhood(v)
        assert out == O.out_set(D.arcs, v)
        assert D.in_neighborhood(v) == O.in_set(D.arcs, v)
        assert second == O.second_set(D.arcs, v)
        assert not out & second and v not in second
        total = D.out_degree(v) + D.in_degree(v)
        assert total <= n - 1
        whole = all(D.is_adjacent(v, w) for w in D.vertices() if w != v)
        assert (total == n - 1) == whole
        assert has_snp(D, v) == O.snp(D.arcs, v)
