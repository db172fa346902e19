import pytest
from hypothesis import given, settings

from snctools.dependency import (
    DependencyDigraph,
    all_losing_labelings,
    convenient_orientations,
    delta_is_disjoint_paths,
    dependency_digraph,
    is_good,
    loses_to,
    maximal_delta_paths,
    missing_graph,
    whole_vertices,
)
from snctools.errors import GraphError
from snctools.generators import orientations_missing, paper_counterexamples, threshold_specs, gen_threshold
from snctools.graphs import OrientedGraph, transitive_tournament
from snctools.patterns import PatternGraph, find_induced

import oracles as O
from test_graphs import oriented_graphs

a, b, c, d, x = range(5)
EX = paper_counterexamples()
D, D1, D2 = EX["D"], EX["D_prime"], EX["D_double_prime"]


def arcset(delta):
    return set(delta.edge_arcs())


def e(u, v):
    return (min(u, v), max(u, v))


# missing graphs


def test_tournament_missing_graph_empty():
    T = transitive_tournament(4)
    G, mapping = missing_graph(T)
    assert G.order == 0 and mapping == () and whole_vertices(T) == set(range(4))


def test_counterexample_missing_graphs():
    G, mapping = missing_graph(D)
    assert mapping == (a, b, c, d) and G.edges == {e(a, b), e(c, d)}
    assert find_induced(G, PatternGraph.C4_COMPLEMENT) is not None
    G1, mapping1 = missing_graph(D1)
    assert mapping1 == (a, b, c, d, x) and G1.size() == 4
    assert find_induced(G1, PatternGraph.CHAIR) is not None and G1.order == 5
    G2, _ = missing_graph(D2)
    assert find_induced(G2, PatternGraph.CO_CHAIR) is not None and G2.order == 5


def test_missing_graph_keeps_labels():
    G, _ = missing_graph(D)
    assert G.labels == ("a", "b", "c", "d")


# losing relation


def test_ab_loses_to_cd():
    assert loses_to(D, (a, b), (c, d)) == (a, b, c, d)


def test_cd_loses_to_ba():
    lab = loses_to(D, (c, d), (a, b))
    assert lab is not None and lab[:2] == (c, d) and lab[2:] == (b, a)


def test_far_apart_edges_do_not_lose():
    # two missing edges in separate pieces with no arcs between them
    G = OrientedGraph(4)
    assert loses_to(G, (0, 1), (2, 3)) is None


def test_loses_to_rejects_bad_input():
    with pytest.raises(GraphError):
        loses_to(D, (a, c), (c, d))
    with pytest.raises(GraphError):
        loses_to(D, (a, b), (b, a))


def test_all_labelings_first_is_canonical():
    labs = all_losing_labelings(D, (a, b), (c, d))
    assert labs and labs[0] == loses_to(D, (a, b), (c, d))


# dependency digraph


def test_tournament_delta_empty():
    assert len(dependency_digraph(transitive_tournament(5)).arcs) == 0


def test_counterexample_digon():
    delta = dependency_digraph(D)
    assert set(delta.nodes) == {e(a, b), e(c, d)}
    assert arcset(delta) == {(e(a, b), e(c, d)), (e(c, d), e(a, b))}


def test_counterexample_out_degree_two():
    delta = dependency_digraph(D1)
    assert (e(a, b), e(d, c)) in arcset(delta) and (e(a, b), e(d, x)) in arcset(delta)
    assert delta.edge_out_degree((a, b)) == 2
    delta2 = dependency_digraph(D2)
    assert max(delta2.out_degree(i) for i in range(len(delta2))) == 2


def test_delta_to_json():
    js = dependency_digraph(D).to_json()
    assert js["nodes"] == [[0, 1], [2, 3]] and sorted(map(tuple, js["arcs"])) == [(0, 1), (1, 0)]
    assert len(js["labelings"]) == 2


def test_delta_restrict():
    delta = dependency_digraph(D1).restrict([(a, b), (c, d)])
    assert len(delta) == 2 and delta.edge_arcs() == [(e(a, b), e(c, d))]


def test_loop_rejected():
    from snctools.errors import ConsistencyError

    with pytest.raises(ConsistencyError):
        DependencyDigraph(((0, 1),), ((0, 0),))


@settings(max_examples=150, deadline=None)
@given(oriented_graphs(max_order=7))
def test_delta_matches_oracle(G):
    delta = dependency_digraph(G)
    assert set(delta.nodes) == set(O.missing(G.order, G.arcs))
    assert arcset(delta) == O.delta_arcs(G.order, G.arcs)
    for (i, j), (x1, y1, x2, y2) in delta.labelings.items():
        assert {x1, y1} == set(delta.nodes[i]) and {x2, y2} == set(delta.nodes[j])


# convenient orientations and goodness


def test_two_vertices_no_arcs():
    assert convenient_orientations(OrientedGraph(2), (0, 1)) == [(0, 1), (1, 0)]


def test_counterexample_ab_not_good():
    assert convenient_orientations(D, (a, b)) == []
    assert not O.convenient(D.arcs, a, b) and not O.convenient(D.arcs, b, a)
    assert not is_good(D, (a, b))


def test_cochair_in_degree_cross_check():
    delta = dependency_digraph(D2)
    for edge in delta.nodes:
        assert bool(convenient_orientations(D2, edge)) == (delta.edge_in_degree(edge) == 0)
    assert is_good(D2, (d, c)) == (delta.edge_in_degree((c, d)) == 0)


def test_one_missing_edge_good():
    T = OrientedGraph(3, [(0, 2), (2, 1)])
    assert is_good(T, (0, 1))


def test_chair_goodness():
    delta = dependency_digraph(D1)
    assert delta.edge_in_degree((c, d)) == 1 and not is_good(D1, (d, c))
    assert delta.edge_in_degree((a, b)) == 0 and is_good(D1, (a, b))


@settings(max_examples=150, deadline=None)
@given(oriented_graphs(max_order=7))
def test_good_iff_no_in_arc(G):
    delta = dependency_digraph(G)
    for edge in delta.nodes:
        conv = convenient_orientations(G, edge)
        assert conv == [(p, q) for p, q in (edge, edge[::-1]) if O.convenient(G.arcs, p, q)]
        assert is_good(G, edge, delta) == (delta.edge_in_degree(edge) == 0)
        assert is_good(G, edge) == bool(conv)


# path structure


def test_empty_delta_paths():
    delta = dependency_digraph(transitive_tournament(3))
    assert delta_is_disjoint_paths(delta).ok
    assert maximal_delta_paths(delta).paths == []


def test_counterexample_path_diagnoses():
    assert delta_is_disjoint_paths(dependency_digraph(D)).diagnosis == "digon"
    assert delta_is_disjoint_paths(dependency_digraph(D1)).diagnosis == "branching"


def _synthetic(k, arcs):
    nodes = tuple((2 * i, 2 * i + 1) for i in range(k))
    return DependencyDigraph(nodes, tuple(arcs))


def test_single_arc_path():
    delta = _synthetic(2, [(0, 1)])
    assert maximal_delta_paths(delta).paths == [[(0, 1), (2, 3)]]


def test_three_path():
    delta = _synthetic(4, [(0, 1), (1, 2)])
    split = maximal_delta_paths(delta)
    assert split.paths == [[(0, 1), (2, 3), (4, 5)]] and split.isolated == [(6, 7)]


def test_long_cycle_diagnosis():
    delta = _synthetic(3, [(0, 1), (1, 2), (2, 0)])
    check = delta_is_disjoint_paths(delta)
    assert not check.ok and check.diagnosis == "cycle" and len(check.where) == 3
    with pytest.raises(GraphError):
        maximal_delta_paths(delta)


def test_threshold_delta_empty_small():
    for A, X in threshold_specs(5):
        G, _ = gen_threshold(A, X)
        core = [v for v in G.vertices() if G.degree(v)]
        H, _ = G.induced_subgraph(core)
        if H.order == 0:
            continue
        for Dt in orientations_missing(H, G.order - H.order, vary_extra=True):
            assert not dependency_digraph(Dt).arcs
