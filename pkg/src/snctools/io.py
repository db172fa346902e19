"""Text edge lists, JSON and DOT for graphs, oriented graphs and dependency
digraphs.

Edge-list format::

    # comment
    n 5
    0 1        undirected edge
    2 > 3      arc from 2 to 3

A file holds either edges or arcs, not both.  Writers emit a canonical form
(header, then pairs in sorted order), so ``write(read(write(G)))`` is
byte-identical to ``write(G)``.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Union

from .dependency import DependencyDigraph
from .errors import GraphError
from .graphs import Graph, OrientedGraph

AnyGraph = Union[Graph, OrientedGraph]
FORMATS = ("edgelist", "json", "dot")


def _int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphError(f"line {lineno}: expected an integer, got {token!r}") from None
    if value < 0:
        raise GraphError(f"line {lineno}: negative vertex {value}")
    return value


def parse_edgelist(text: str, kind: str = "auto") -> AnyGraph:
    """Parse the edge-list format.

    ``kind`` is ``"graph"``, ``"oriented"`` or ``"auto"`` (oriented iff some
    line is an arc).
    """
    if kind not in ("auto", "graph", "oriented"):
        raise GraphError(f"unknown kind {kind!r}")
    order = None
    edges, arcs = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if order is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphError(f"line {lineno}: expected header 'n <order>'")
            order = _int(tokens[1], lineno)
            continue
        if len(tokens) == 2:
            edges.append((_int(tokens[0], lineno), _int(tokens[1], lineno)))
        elif len(tokens) == 3 and tokens[1] == ">":
            arcs.append((_int(tokens[0], lineno), _int(tokens[2], lineno)))
        else:
            raise GraphError(f"line {lineno}: expected 'u v' or 'u > v'")
    if order is None:
        raise GraphError("missing header 'n <order>'")
    if edges and arcs:
        raise GraphError("mixes undirected edges and arcs")
    if kind == "graph" and arcs:
        raise GraphError("expected an undirected graph, found arcs")
    if kind == "oriented" and edges:
        raise GraphError("expected an oriented graph, found undirected edges")
    if arcs or kind == "oriented":
        return OrientedGraph(order, arcs)
    return Graph(order, edges)


def format_edgelist(G: AnyGraph) -> str:
    lines = [f"n {G.order}"]
    if isinstance(G, OrientedGraph):
        lines += [f"{u} > {v}" for u, v in sorted(G.arcs)]
    else:
        lines += [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


def graph_to_json(G: AnyGraph) -> dict:
    data: dict = {"order": G.order}
    if isinstance(G, OrientedGraph):
        data["arcs"] = [list(a) for a in sorted(G.arcs)]
    else:
        data["edges"] = [list(e) for e in sorted(G.edges)]
    if G.labels is not None:
        data["labels"] = list(G.labels)
    return data


def graph_from_json(data: dict, kind: str = "auto") -> AnyGraph:
    if not isinstance(data, dict) or "order" not in data:
        raise GraphError("graph JSON needs an 'order' field")
    if "edges" in data and "arcs" in data:
        raise GraphError("graph JSON has both 'edges' and 'arcs'")
    try:
        order = int(data["order"])
        edges = [tuple(e) for e in data.get("arcs", data.get("edges", ()))]
    except (TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None
    labels = data.get("labels")
    if "arcs" in data or kind == "oriented":
        if kind == "graph":
            raise GraphError("expected an undirected graph, found arcs")
        return OrientedGraph(order, edges, labels)
    return Graph(order, edges, labels)


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def to_dot(G, name: str = "G") -> str:
    """DOT text.  For an oriented graph the missing edges are drawn as
    dashed undirected edges; a dependency digraph gets one node per missing
    edge."""
    if isinstance(G, DependencyDigraph):
        lines = [f"digraph {name} {{"]
        for i, (a, b) in enumerate(G.nodes):
            lines.append(f'  {i} [label="{a}{b}"];' if a < 10 and b < 10 else f'  {i} [label="{a}-{b}"];')
        lines += [f"  {i} -> {j};" for i, j in G.arcs]
        lines.append("}")
        return "\n".join(lines) + "\n"
    quote = (lambda v: f'"{G.name(v)}"') if G.labels else str
    if isinstance(G, OrientedGraph):
        lines = [f"digraph {name} {{"]
        lines += [f"  {quote(v)};" for v in G.vertices()]
        lines += [f"  {quote(u)} -> {quote(v)};" for u, v in sorted(G.arcs)]
        lines += [f"  {quote(u)} -> {quote(v)} [style=dashed, dir=none];" for u, v in G.missing_pairs()]
    else:
        lines = [f"graph {name} {{"]
        lines += [f"  {quote(v)};" for v in G.vertices()]
        lines += [f"  {quote(u)} -- {quote(v)};" for u, v in sorted(G.edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def detect_format(path: Union[str, Path], text: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix in (".txt", ".el", ".edges", ".edgelist"):
        return "edgelist"
    return "json" if text.lstrip().startswith("{") else "edgelist"


def loads_graph(text: str, fmt: str = "edgelist", kind: str = "auto") -> AnyGraph:
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from None
        return graph_from_json(data, kind)
    if fmt == "edgelist":
        return parse_edgelist(text, kind)
    raise GraphError(f"cannot read format {fmt!r}")


def read_graph(path: Union[str, Path], fmt: str | None = None, kind: str = "auto") -> AnyGraph:
    """Read a graph file; ``-`` is standard input.  The format is guessed
    from the suffix or the first character when not given."""
    text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
    return loads_graph(text, fmt or detect_format(path, text), kind)


def write_graph(G: AnyGraph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return format_edgelist(G)
    if fmt == "json":
        return dumps(graph_to_json(G))
    if fmt == "dot":
        return to_dot(G)
    raise GraphError(f"unknown format {fmt!r}")
