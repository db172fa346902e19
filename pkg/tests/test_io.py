import json

import pytest
from hypothesis import given, settings, strategies as st

from snctools import io
from snctools.dependency import dependency_digraph
from snctools.errors import GraphError
from snctools.generators import paper_counterexamples
from snctools.graphs import Graph, OrientedGraph, cycle_graph

from test_graphs import oriented_graphs


@st.composite
def graphs(draw, max_order=7):
    n = draw(st.integers(0, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, [p for p in pairs if draw(st.booleans())])


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_edgelist_round_trip_graph(G):
    assert io.parse_edgelist(io.format_edgelist(G), "graph") == G


@settings(max_examples=100, deadline=None)
@given(oriented_graphs(max_order=7))
def test_edgelist_round_trip_oriented(D):
    assert io.parse_edgelist(io.format_edgelist(D), "oriented") == D


@settings(max_examples=100, deadline=None)
@given(oriented_graphs(max_order=7))
def test_json_round_trip(D):
    assert io.loads_graph(io.write_graph(D, "json"), "json") == D


def test_comments_and_blank_lines():
    text = "# a path\nn 3\n\n0 1   # first\n1 2\n"
    assert io.parse_edgelist(text) == Graph(3, [(0, 1), (1, 2)])


def test_arcs_detected():
    assert isinstance(io.parse_edgelist("n 2\n0 > 1\n"), OrientedGraph)
    assert io.parse_edgelist("n 3\n", "oriented") == OrientedGraph(3)


@pytest.mark.parametrize("text", [
    "0 1\n",
    "n x\n",
    "n 3\n0 1 2\n",
    "n 3\n0 1\n1 > 2\n",
    "n 3\n0 -1\n",
    "n 2\n0 5\n",
    "",
])
def test_malformed_edgelist(text):
    with pytest.raises(GraphError):
        io.parse_edgelist(text)


def test_kind_mismatch():
    with pytest.raises(GraphError):
        io.parse_edgelist("n 2\n0 > 1\n", "graph")
    with pytest.raises(GraphError):
        io.parse_edgelist("n 2\n0 1\n", "oriented")
    with pytest.raises(GraphError):
        io.graph_from_json({"order": 2, "arcs": [[0, 1]]}, "graph")


def test_malformed_json():
    for text in ("{", "[]", '{"edges": []}', '{"order": 2, "edges": [[0, 1]], "arcs": []}'):
        with pytest.raises(GraphError):
            io.loads_graph(text, "json")


def test_labels_kept():
    D = paper_counterexamples()["D"]
    data = io.graph_to_json(D)
    assert data["labels"] == ["a", "b", "c", "d"]
    assert io.graph_from_json(data).labels == D.labels


def test_dumps_canonical():
    assert io.dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


def test_dot_missing_edges_dashed():
    D = OrientedGraph(3, [(0, 1), (1, 2)])
    dot = io.to_dot(D)
    assert dot.startswith("digraph G {")
    assert "0 -> 1;" in dot and "0 -> 2 [style=dashed, dir=none];" in dot


def test_dot_graph_and_delta():
    assert "0 -- 1;" in io.to_dot(cycle_graph(5))
    delta = dependency_digraph(paper_counterexamples()["D"])
    dot = io.to_dot(delta, "Delta")
    assert '[label="01"]' in dot and "0 -> 1;" in dot and "1 -> 0;" in dot


def test_detect_format(tmp_path):
    assert io.detect_format("g.json", "") == "json"
    assert io.detect_format("g.txt", "{") == "edgelist"
    assert io.detect_format("g", ' {"order": 1}') == "json"
    p = tmp_path / "g"
    p.write_text(json.dumps({"order": 2, "edges": [[0, 1]]}))
    assert io.read_graph(p) == Graph(2, [(0, 1)])


def test_dot_not_readable():
    with pytest.raises(GraphError):
        io.loads_graph("n 1\n", "dot")
