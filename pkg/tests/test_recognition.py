import random

import pytest

from snctools.errors import GraphError
from snctools.generators import atlas_graphs, comb_specs, gen_generalized_comb
from snctools.graphs import Graph, complete_graph, cycle_graph, path_graph
from snctools.patterns import PatternGraph, find_induced
from snctools.recognition import (
    STRUCTURE_GAP,
    CombDecomposition,
    TargetDecomposition,
    comb_decomposition,
    comb_strip,
    is_complete_split_pair,
    is_generalized_comb,
    is_perfect_split_pair,
    is_target_free,
    is_threshold,
)

import oracles as O


def check_comb(G, d):
    bad = O.verify_comb(G, [set(b) for b in d.A], [set(b) for b in d.M], [set(b) for b in d.X],
                        [set(b) for b in d.Y], d.matching, d.isolated)
    assert not bad, (G, d, bad)
    assert all(d.clause_checks(G).values())


def check_target(G, t):
    assert all(t.clause_checks(G).values())
    C = set(t.C)
    for c in C:
        assert G.neighborhood(c) - C == t.K
    if t.C:
        H, _ = G.induced_subgraph(C)
        assert O.contains_induced(H, "C5")
    if t.comb is not None:
        H, back = G.induced_subgraph(set(G.vertices()) - C)
        fwd = {v: i for i, v in enumerate(back)}
        check_comb(H, t.comb.relabel(fwd))


# split pairs


def test_star_complete_split():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert is_complete_split_pair(star, {1, 2, 3}, {0})


def test_single_edge_both_splits():
    G = Graph(2, [(0, 1)])
    assert is_complete_split_pair(G, {0}, {1})
    ok, pairs = is_perfect_split_pair(G, {0}, {1})
    assert ok and pairs == ((1, 0),)


def test_empty_clique_side():
    G = Graph(4, [(0, 1), (2, 3)])
    assert is_complete_split_pair(G, {0, 2}, set())


def test_split_preconditions():
    G = path_graph(3)
    with pytest.raises(GraphError):
        is_complete_split_pair(G, {0, 1}, {2})
    with pytest.raises(GraphError):
        is_perfect_split_pair(G, {1}, {0, 2})


def test_perfect_split_fails_on_star():
    star = Graph(3, [(0, 1), (0, 2)])
    assert is_perfect_split_pair(star, {1, 2}, {0}) == (False, None)


# threshold


def test_p4_not_threshold():
    rec = is_threshold(path_graph(4))
    assert not rec and rec.witness[0] is PatternGraph.P4


def test_k4_threshold():
    rec = is_threshold(complete_graph(4))
    assert rec and all(rec.decomposition.clause_checks(complete_graph(4)).values())


def test_c4_not_threshold():
    rec = is_threshold(cycle_graph(4))
    assert not rec and rec.witness[0] is PatternGraph.C4


def test_threshold_decomposition_atlas():
    for G in atlas_graphs(6):
        rec = is_threshold(G)
        assert bool(rec) == O.free_of(G, O.THRESHOLD_PATTERNS) == O.threshold_by_peeling(G)
        if rec:
            assert all(rec.decomposition.clause_checks(G).values())
            assert rec.decomposition.edge_set() == set(G.edges)


# generalized combs


def test_c5_not_comb():
    rec = is_generalized_comb(cycle_graph(5))
    assert not rec and rec.witness[0] is PatternGraph.C5


def test_threshold_graphs_are_combs():
    for G in atlas_graphs(6):
        if is_threshold(G):
            rec = is_generalized_comb(G)
            assert rec and rec.decomposition is not None
            check_comb(G, rec.decomposition)


def test_2k2_is_co_c4():
    # two disjoint edges form the complement of C4 itself
    G = Graph(4, [(0, 1), (2, 3)])
    assert O.contains_induced(G, "C4_complement")
    rec = is_generalized_comb(G)
    assert not rec and rec.witness[0] is PatternGraph.C4_COMPLEMENT


def test_p4_is_comb_with_matching():
    rec = is_generalized_comb(path_graph(4))
    assert rec and rec.decomposition.l >= 1
    check_comb(path_graph(4), rec.decomposition)


def test_degenerate_inputs():
    for G in (Graph(0), Graph(1)):
        for f in (is_threshold, is_generalized_comb, is_target_free):
            assert f(G)


def test_comb_decompositions_atlas():
    for G in atlas_graphs(7):
        rec = is_generalized_comb(G)
        assert bool(rec) == O.free_of(G, O.COMB_PATTERNS)
        if rec and rec.decomposition is not None:
            check_comb(G, rec.decomposition)
        elif rec:
            assert rec.structure_gap is not None


def test_deterministic():
    G = gen_generalized_comb(next(s for s in comb_specs(6) if s.l == 1 and s.order == 6))[0]
    assert comb_decomposition(G) == comb_decomposition(G)


def test_json_round_trip():
    for s in list(comb_specs(6))[::7]:
        _, d = gen_generalized_comb(s)
        assert CombDecomposition.from_json(d.to_json()) == d


# the structure gap


def test_gap_graph_is_pattern_free():
    assert O.free_of(STRUCTURE_GAP, O.COMB_PATTERNS)


def test_gap_graph_has_no_literal_decomposition():
    assert comb_decomposition(STRUCTURE_GAP) is None
    assert not O.comb_labelling_exists(STRUCTURE_GAP)


def test_gap_graph_flagged():
    rec = is_generalized_comb(STRUCTURE_GAP)
    assert rec and rec.decomposition is None
    assert sorted(rec.structure_gap) == list(range(7))
    t = is_target_free(STRUCTURE_GAP)
    assert t and t.decomposition.structure_gap and t.structure_gap is not None
    assert all(t.decomposition.clause_checks(STRUCTURE_GAP).values())


# target class


def test_c5_target():
    rec = is_target_free(cycle_graph(5))
    assert rec
    t = rec.decomposition
    assert sorted(t.C) == [0, 1, 2, 3, 4] and not t.S and not t.K
    check_target(cycle_graph(5), t)


def test_chair_rejected():
    rec = is_target_free(PatternGraph.CHAIR.graph)
    assert not rec and rec.witness[0] is PatternGraph.CHAIR


def test_wheel_target():
    G = Graph(6, list(cycle_graph(5).edges) + [(v, 5) for v in range(5)])
    assert O.free_of(G, O.TARGET_PATTERNS)
    t = is_target_free(G).decomposition
    assert t.K == {5} and not t.S and sorted(t.C) == list(range(5))
    check_target(G, t)


def test_target_atlas():
    for G in atlas_graphs(7):
        rec = is_target_free(G)
        assert bool(rec) == O.free_of(G, O.TARGET_PATTERNS)
        if rec:
            check_target(G, rec.decomposition)
            assert TargetDecomposition.from_json(rec.decomposition.to_json()) == rec.decomposition


def test_target_hereditary_sampled():
    rng = random.Random(3)
    members = [G for G in atlas_graphs(7, min_order=6) if is_target_free(G)]
    for G in rng.sample(members, 60):
        for v in G.vertices():
            H, _ = G.induced_subgraph(set(G.vertices()) - {v})
            assert is_target_free(H)


def test_order_eight_sample():
    # random one-vertex extensions of seven-vertex graphs
    rng = random.Random(8)
    base = list(atlas_graphs(7, min_order=7))
    for _ in range(400):
        B = rng.choice(base)
        G = Graph(8, list(B.edges) + [(i, 7) for i in range(7) if rng.random() < 0.5])
        for f, names in ((is_threshold, O.THRESHOLD_PATTERNS), (is_generalized_comb, O.COMB_PATTERNS),
                         (is_target_free, O.TARGET_PATTERNS)):
            rec = f(G)
            assert bool(rec) == O.free_of(G, names)
            if rec and f is is_generalized_comb and rec.decomposition is not None:
                check_comb(G, rec.decomposition)
            if rec and f is is_target_free:
                check_target(G, rec.decomposition)
            if rec.structure_gap is not None:
                assert find_induced(G, STRUCTURE_GAP) is not None


# stripping


def test_strip_single_pair():
    G = Graph(2, [(0, 1)])
    d = CombDecomposition(A=(frozenset(),), M=(frozenset({1}),), X=(frozenset({0}),),
                          Y=(frozenset({0}), frozenset(), frozenset()), matching=((0, 1),))
    assert all(d.clause_checks(G).values())
    assert comb_strip(G, d).edges == frozenset()


def test_strip_threshold_unchanged():
    G = complete_graph(3)
    d = is_generalized_comb(G).decomposition
    if not d.matching:
        assert comb_strip(G, d) == G


def test_strip_two_matched():
    from snctools.generators import CombSpec

    G, d = gen_generalized_comb(CombSpec(A=(0,), M=(2,), X=(2,), Y=(0, 0)))
    H = comb_strip(G, d)
    assert G.size() - H.size() == 2
    assert is_threshold(H)


def test_strip_rejects_wrong_decomposition():
    G = path_graph(4)
    d = is_generalized_comb(G).decomposition
    with pytest.raises(GraphError):
        comb_strip(complete_graph(4), d)


def test_strip_always_threshold():
    for s in comb_specs(7):
        G, d = gen_generalized_comb(s)
        assert is_threshold(comb_strip(G, d))
