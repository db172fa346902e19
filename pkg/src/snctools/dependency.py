"""Missing edges, the losing relation and dependency digraphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import ConsistencyError, GraphError
from .graphs import Graph, OrientedGraph, iter_bits

MissingEdge = tuple[int, int]


def _edge(e) -> MissingEdge:
    u, v = e
    return (u, v) if u < v else (v, u)


def _require_missing(D: OrientedGraph, e) -> MissingEdge:
    u, v = _edge(e)
    if u == v or not (0 <= u < D.order and 0 <= v < D.order):
        raise GraphError(f"{e} is not a vertex pair of D")
    if D.is_adjacent(u, v):
        raise GraphError(f"{u}{v} is not a missing edge")
    return (u, v)


def whole_vertices(D: OrientedGraph) -> frozenset[int]:
    """Vertices incident to no missing edge."""
    full = (1 << D.order) - 1
    return frozenset(
        v for v in D.vertices()
        if (D.out_mask(v) | D.in_mask(v) | 1 << v) == full
    )


def missing_graph(D: OrientedGraph) -> tuple[Graph, tuple[int, ...]]:
    """The graph of missing edges on the non-whole vertices of ``D``.

    Returns ``(G, mapping)`` with ``mapping[i]`` the vertex of ``D`` that is
    vertex ``i`` of ``G``.
    """
    whole = whole_vertices(D)
    mapping = tuple(v for v in D.vertices() if v not in whole)
    index = {v: i for i, v in enumerate(mapping)}
    labels = None if D.labels is None else [D.labels[v] for v in mapping]
    edges = [(index[u], index[v]) for u, v in D.missing_pairs()]
    return Graph(len(mapping), edges, labels), mapping


def missing_edges(D: OrientedGraph) -> list[MissingEdge]:
    return D.missing_pairs()


def _loses(D: OrientedGraph, x1: int, y1: int, x2: int, y2: int) -> bool:
    return (
        D.has_arc(x1, x2)
        and D.has_arc(y1, y2)
        and not D.reach_mask(x1) >> y2 & 1
        and not D.reach_mask(y1) >> x2 & 1
    )


def loses_to(D: OrientedGraph, e1, e2) -> Optional[tuple[int, int, int, int]]:
    """A labeling ``(x1, y1, x2, y2)`` witnessing that ``e1`` loses to ``e2``.

    The labelings are tried in lexicographic order and the first witness is
    returned; ``None`` if neither endpoint matching works.
    """
    a, b = _require_missing(D, e1)
    c, d = _require_missing(D, e2)
    if (a, b) == (c, d):
        raise GraphError("a missing edge cannot lose to itself")
    for x1, y1 in ((a, b), (b, a)):
        for x2, y2 in ((c, d), (d, c)):
            if _loses(D, x1, y1, x2, y2):
                return (x1, y1, x2, y2)
    return None


def all_losing_labelings(D: OrientedGraph, e1, e2) -> list[tuple[int, int, int, int]]:
    a, b = _require_missing(D, e1)
    c, d = _require_missing(D, e2)
    return [
        (x1, y1, x2, y2)
        for x1, y1 in ((a, b), (b, a))
        for x2, y2 in ((c, d), (d, c))
        if _loses(D, x1, y1, x2, y2)
    ]


@dataclass(frozen=True)
class DependencyDigraph:
    """Digraph on the missing edges of ``D``; ``(i, j)`` is an arc when
    ``nodes[i]`` loses to ``nodes[j]``.  Digons may occur."""

    nodes: tuple[MissingEdge, ...]
    arcs: tuple[tuple[int, int], ...]
    labelings: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        succ = [[] for _ in self.nodes]
        pred = [[] for _ in self.nodes]
        for i, j in self.arcs:
            if i == j:
                raise ConsistencyError("loop in dependency digraph")
            succ[i].append(j)
            pred[j].append(i)
        object.__setattr__(self, "_succ", tuple(tuple(s) for s in succ))
        object.__setattr__(self, "_pred", tuple(tuple(p) for p in pred))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.nodes)})

    def __len__(self) -> int:
        return len(self.nodes)

    def index(self, e) -> int:
        return self._index[_edge(e)]

    def successors(self, i: int) -> tuple[int, ...]:
        return self._succ[i]

    def predecessors(self, i: int) -> tuple[int, ...]:
        return self._pred[i]

    def out_degree(self, i: int) -> int:
        return len(self._succ[i])

    def in_degree(self, i: int) -> int:
        return len(self._pred[i])

    def edge_in_degree(self, e) -> int:
        return self.in_degree(self.index(e))

    def edge_out_degree(self, e) -> int:
        return self.out_degree(self.index(e))

    def edge_arcs(self) -> list[tuple[MissingEdge, MissingEdge]]:
        return [(self.nodes[i], self.nodes[j]) for i, j in self.arcs]

    def restrict(self, edges) -> "DependencyDigraph":
        """Sub-digraph induced by a set of missing edges (indices renumbered)."""
        keep = sorted(self.index(e) for e in edges)
        pos = {i: k for k, i in enumerate(keep)}
        arcs = tuple((pos[i], pos[j]) for i, j in self.arcs if i in pos and j in pos)
        labelings = {(pos[i], pos[j]): lab for (i, j), lab in self.labelings.items() if i in pos and j in pos}
        return DependencyDigraph(tuple(self.nodes[i] for i in keep), arcs, labelings)

    def to_json(self) -> dict:
        return {
            "nodes": [list(e) for e in self.nodes],
            "arcs": [list(a) for a in self.arcs],
            "labelings": [list(self.labelings[a]) for a in self.arcs],
        }


def dependency_digraph(D: OrientedGraph, nodes=None) -> DependencyDigraph:
    """All-pairs losing relation on the missing edges of ``D``."""
    nodes = tuple(sorted(_edge(e) for e in nodes)) if nodes is not None else tuple(D.missing_pairs())
    arcs = []
    labelings = {}
    for i, e1 in enumerate(nodes):
        a, b = e1
        # x1 -> x2 and y1 -> y2 need both endpoints of e2 among out-neighbours of e1's endpoints
        reach_out = D.out_mask(a) | D.out_mask(b)
        for j, e2 in enumerate(nodes):
            if i == j:
                continue
            c, d = e2
            if not (reach_out >> c & 1 and reach_out >> d & 1):
                continue
            lab = loses_to(D, e1, e2)
            if lab is not None:
                arcs.append((i, j))
                labelings[(i, j)] = lab
    return DependencyDigraph(nodes, tuple(arcs), labelings)


def is_convenient(D: OrientedGraph, a: int, b: int) -> bool:
    """Every in-neighbour of ``a`` reaches ``b`` in one or two steps."""
    for v in iter_bits(D.in_mask(a)):
        if v != b and not D.reach_mask(v) >> b & 1:
            return False
    return True


def convenient_orientations(D: OrientedGraph, e) -> list[tuple[int, int]]:
    """The convenient orientations of the missing edge ``e`` (0, 1 or 2),
    in lexicographic order."""
    u, v = _require_missing(D, e)
    return [(a, b) for a, b in ((u, v), (v, u)) if is_convenient(D, a, b)]


def is_good(D: OrientedGraph, e, delta: Optional[DependencyDigraph] = None) -> bool:
    """Whether ``e`` has a convenient orientation.

    Computed both from the definition and from the in-degree of ``e`` in the
    dependency digraph; the two must agree.
    """
    e = _require_missing(D, e)
    by_definition = bool(convenient_orientations(D, e))
    if delta is None:
        others = [f for f in D.missing_pairs() if f != e]
        indegree = sum(1 for f in others if loses_to(D, f, e) is not None)
    else:
        indegree = delta.edge_in_degree(e)
    if by_definition != (indegree == 0):
        raise ConsistencyError(
            f"goodness of {e} disagrees: convenient={by_definition}, in-degree={indegree}",
            trace={"D": sorted(D.arcs), "edge": e},
        )
    return by_definition


class PathCheck(NamedTuple):
    ok: bool
    diagnosis: Optional[str] = None
    where: Optional[tuple] = None


def delta_is_disjoint_paths(delta: DependencyDigraph) -> PathCheck:
    """Whether the dependency digraph is a union of vertex-disjoint directed
    paths; otherwise the first defect found (``digon``, ``branching`` or
    ``cycle``) and the nodes involved."""
    arcset = set(delta.arcs)
    for i, j in delta.arcs:
        if (j, i) in arcset:
            return PathCheck(False, "digon", (delta.nodes[i], delta.nodes[j]))
    for i in range(len(delta)):
        if delta.out_degree(i) > 1 or delta.in_degree(i) > 1:
            return PathCheck(False, "branching", (delta.nodes[i],))
    seen = set()
    for i in range(len(delta)):
        if delta.in_degree(i) == 0:
            k = i
            while True:
                seen.add(k)
                if not delta.successors(k):
                    break
                k = delta.successors(k)[0]
    rest = [i for i in range(len(delta)) if i not in seen]
    if rest:
        cycle = [rest[0]]
        k = delta.successors(rest[0])[0]
        while k != rest[0]:
            cycle.append(k)
            k = delta.successors(k)[0]
        return PathCheck(False, "cycle", tuple(delta.nodes[c] for c in cycle))
    return PathCheck(True)


class DeltaPaths(NamedTuple):
    paths: list[list[MissingEdge]]
    isolated: list[MissingEdge]


def maximal_delta_paths(delta: DependencyDigraph) -> DeltaPaths:
    """Split the nodes into maximal directed paths (at least one arc) and
    isolated nodes.  Requires the digraph to be disjoint paths."""
    check = delta_is_disjoint_paths(delta)
    if not check.ok:
        raise GraphError(f"dependency digraph is not disjoint paths: {check.diagnosis} at {check.where}")
    paths, isolated = [], []
    for i in range(len(delta)):
        if delta.in_degree(i):
            continue
        if not delta.out_degree(i):
            isolated.append(delta.nodes[i])
            continue
        path = [i]
        while delta.successors(path[-1]):
            path.append(delta.successors(path[-1])[0])
        paths.append([delta.nodes[k] for k in path])
    return DeltaPaths(paths, isolated)
