"""Simple undirected graphs and oriented graphs on dense integer vertices.

Both types are immutable.  Adjacency is kept as one Python ``int`` bitmask per
vertex, which keeps neighbourhood unions and the distance-two queries used by
the dependency digraph and the SNP checks cheap.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def set_to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_vertex(order: int, v: int) -> None:
    if not isinstance(v, int) or v < 0 or v >= order:
        raise GraphError(f"vertex {v!r} out of range for order {order}")


class Graph:
    """A simple undirected graph on vertices ``0 .. order-1``.

    ``labels`` is an optional display table (one string per vertex); it does
    not take part in equality or hashing.
    """

    __slots__ = ("order", "edges", "labels", "_adj")

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = (), labels=None):
        if order < 0:
            raise GraphError("order must be non-negative")
        adj = [0] * order
        normalized = set()
        for e in edges:
            u, v = e
            _check_vertex(order, u)
            _check_vertex(order, v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            normalized.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != order:
                raise GraphError("labels must have one entry per vertex")
        self.order = order
        self.edges = frozenset(normalized)
        self.labels = labels
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Sequence[int], labels=None) -> "Graph":
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in iter_bits(masks[u] >> (u + 1) << (u + 1))), labels)

    # -- queries ---------------------------------------------------------

    def vertices(self) -> range:
        return range(self.order)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighborhood(self, v: int) -> frozenset[int]:
        _check_vertex(self.order, v)
        return bits_to_set(self._adj[v])

    def degree(self, v: int) -> int:
        _check_vertex(self.order, v)
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def size(self) -> int:
        return len(self.edges)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.order) if not self._adj[v]]

    def is_stable(self, vertices: Iterable[int]) -> bool:
        mask = set_to_bits(vertices)
        return all(not (self._adj[v] & mask) for v in iter_bits(mask))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = set_to_bits(vertices)
        return all((self._adj[v] | 1 << v) & mask == mask for v in iter_bits(mask))

    # -- constructions ---------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        masks = [(full ^ self._adj[v]) & ~(1 << v) for v in range(self.order)]
        return Graph.from_masks(masks, self.labels)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Return ``(H, mapping)`` where ``mapping[i]`` is the vertex of ``self``
        that became vertex ``i`` of ``H``.  Vertices keep their relative order."""
        mapping = tuple(sorted(set(vertices)))
        for v in mapping:
            _check_vertex(self.order, v)
        index = {v: i for i, v in enumerate(mapping)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = None if self.labels is None else [self.labels[v] for v in mapping]
        return Graph(len(mapping), edges, labels), mapping

    def edges_between(self, first: Iterable[int], second: Iterable[int]) -> frozenset[tuple[int, int]]:
        """Edges with one endpoint in each of two disjoint vertex sets."""
        first, second = set(first), set(second)
        for v in first | second:
            _check_vertex(self.order, v)
        if first & second:
            raise GraphError("edges_between needs disjoint vertex sets")
        return frozenset(
            (u, v) for u, v in self.edges
            if (u in first and v in second) or (u in second and v in first)
        )

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "Graph":
        drop = {tuple(sorted(e)) for e in removed}
        return Graph(self.order, (e for e in self.edges if e not in drop), self.labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return Graph(self.order, ((perm[u], perm[v]) for u, v in self.edges))

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((Graph, self.order, self.edges))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={sorted(self.edges)})"


class OrientedGraph:
    """A loop-free digraph without digons on vertices ``0 .. order-1``."""

    __slots__ = ("order", "arcs", "labels", "_out", "_in", "_reach")

    def __init__(self, order: int, arcs: Iterable[Sequence[int]] = (), labels=None):
        if order < 0:
            raise GraphError("order must be non-negative")
        out = [0] * order
        inn = [0] * order
        normalized = set()
        for a in arcs:
            u, v = a
            _check_vertex(order, u)
            _check_vertex(order, v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if out[v] >> u & 1:
                raise GraphError(f"digon between {u} and {v}")
            normalized.add((u, v))
            out[u] |= 1 << v
            inn[v] |= 1 << u
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != order:
                raise GraphError("labels must have one entry per vertex")
        self.order = order
        self.arcs = frozenset(normalized)
        self.labels = labels
        self._out = tuple(out)
        self._in = tuple(inn)
        self._reach = None

    @classmethod
    def _from_out_masks(cls, out: Sequence[int], labels=None) -> "OrientedGraph":
        # trusted fast path: caller guarantees no loops and no digons
        self = cls.__new__(cls)
        n = len(out)
        inn = [0] * n
        arcs = []
        for u in range(n):
            for v in iter_bits(out[u]):
                inn[v] |= 1 << u
                arcs.append((u, v))
        self.order = n
        self.arcs = frozenset(arcs)
        self.labels = labels
        self._out = tuple(out)
        self._in = tuple(inn)
        self._reach = None
        return self

    # -- masks -----------------------------------------------------------

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def reach_mask(self, v: int) -> int:
        """Bitmask of ``N+(v) | N++(v)``: vertices at distance one or two."""
        if self._reach is None:
            out = self._out
            reach = []
            for u in range(self.order):
                r = out[u]
                for w in iter_bits(out[u]):
                    r |= out[w]
                reach.append(r)
            self._reach = tuple(reach)
        return self._reach[v]

    def second_out_mask(self, v: int) -> int:
        return self.reach_mask(v) & ~self._out[v]

    # -- queries ---------------------------------------------------------

    def vertices(self) -> range:
        return range(self.order)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def is_adjacent(self, u: int, v: int) -> bool:
        return bool((self._out[u] | self._in[u]) >> v & 1)

    def out_neighborhood(self, v: int) -> frozenset[int]:
        _check_vertex(self.order, v)
        return bits_to_set(self._out[v])

    def in_neighborhood(self, v: int) -> frozenset[int]:
        _check_vertex(self.order, v)
        return bits_to_set(self._in[v])

    def second_out_neighborhood(self, v: int) -> frozenset[int]:
        """Vertices outside ``N+(v)`` that some out-neighbour of ``v`` points to.

        Follows the set formula literally; ``v`` itself could only appear
        through a digon, which an oriented graph cannot contain.
        """
        _check_vertex(self.order, v)
        return bits_to_set(self.second_out_mask(v))

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def second_out_degree(self, v: int) -> int:
        return self.second_out_mask(v).bit_count()

    def missing_pairs(self) -> list[tuple[int, int]]:
        """All unordered pairs ``u < v`` with no arc in either direction."""
        pairs = []
        full = (1 << self.order) - 1
        for u in range(self.order):
            gap = full & ~(self._out[u] | self._in[u]) & ~((1 << (u + 1)) - 1)
            pairs.extend((u, v) for v in iter_bits(gap))
        return pairs

    def is_tournament(self) -> bool:
        return len(self.arcs) == self.order * (self.order - 1) // 2

    # -- constructions ---------------------------------------------------

    def with_arcs(self, arcs: Iterable[Sequence[int]]) -> "OrientedGraph":
        """A new oriented graph with ``arcs`` added; each must join a missing pair."""
        out = list(self._out)
        for u, v in arcs:
            _check_vertex(self.order, u)
            _check_vertex(self.order, v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if (out[u] >> v & 1) or (out[v] >> u & 1):
                raise GraphError(f"pair {u},{v} is not missing")
            out[u] |= 1 << v
        return OrientedGraph._from_out_masks(out, self.labels)

    def with_reversed(self, arcs: Iterable[Sequence[int]]) -> "OrientedGraph":
        out = list(self._out)
        for u, v in arcs:
            if not out[u] >> v & 1:
                raise GraphError(f"({u},{v}) is not an arc")
            out[u] &= ~(1 << v)
            out[v] |= 1 << u
        return OrientedGraph._from_out_masks(out, self.labels)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["OrientedGraph", tuple[int, ...]]:
        mapping = tuple(sorted(set(vertices)))
        for v in mapping:
            _check_vertex(self.order, v)
        index = {v: i for i, v in enumerate(mapping)}
        arcs = [(index[u], index[v]) for u, v in self.arcs if u in index and v in index]
        labels = None if self.labels is None else [self.labels[v] for v in mapping]
        return OrientedGraph(len(mapping), arcs, labels), mapping

    def underlying_graph(self) -> Graph:
        return Graph(self.order, self.arcs, self.labels)

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.order == other.order and self.arcs == other.arcs

    def __hash__(self):
        return hash((OrientedGraph, self.order, self.arcs))

    def __repr__(self):
        return f"OrientedGraph(order={self.order}, arcs={sorted(self.arcs)})"


def has_snp(D: OrientedGraph, v: int) -> bool:
    """Whether ``v`` has the second neighbourhood property: d+(v) <= d++(v)."""
    _check_vertex(D.order, v)
    return D.out_degree(v) <= D.second_out_degree(v)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def transitive_tournament(n: int) -> OrientedGraph:
    """``i -> j`` for every ``i < j``; vertex ``n-1`` is the sink."""
    return OrientedGraph(n, combinations(range(n), 2))


def directed_cycle(n: int) -> OrientedGraph:
    return OrientedGraph(n, ((i, (i + 1) % n) for i in range(n)))
