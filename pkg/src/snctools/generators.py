"""Instance construction: class members from block sizes, oriented graphs
missing a given graph, the small named counterexamples, and enumeration
helpers for exhaustive checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .dependency import missing_graph
from .errors import ConsistencyError, GraphError
from .graphs import Graph, OrientedGraph
from .recognition import (
    CombDecomposition,
    TargetDecomposition,
    ThresholdDecomposition,
    is_generalized_comb,
    is_target_free,
    is_threshold,
)

DEFAULT_CAP_PAIRS = 24


class _Counter:
    def __init__(self, start: int = 0):
        self.next = start

    def take(self, k: int) -> frozenset[int]:
        block = frozenset(range(self.next, self.next + k))
        self.next += k
        return block


# ---------------------------------------------------------------------------
# threshold graphs


def gen_threshold(A: Sequence[int], X: Sequence[int]) -> tuple[Graph, ThresholdDecomposition]:
    """Threshold graph from block sizes ``A = (|A_0|..|A_n|)`` and
    ``X = (|X_1|..|X_{n+1}|)``; vertices are numbered block by block."""
    A, X = list(A), list(X)
    n = len(A) - 1
    if n < 0 or len(X) != n + 1 or min(A + X) < 0:
        raise GraphError("need |A| = |X| >= 1 and non-negative sizes")
    if any(a == 0 for a in A[1:]) or any(x == 0 for x in X[:n]):
        raise GraphError("only A_0 and X_{n+1} may be empty")
    c = _Counter()
    Ab = tuple(c.take(a) for a in A)
    Xb = tuple(c.take(x) for x in X)
    d = ThresholdDecomposition(Ab, Xb)
    G = Graph(c.next, d.edge_set())
    if not is_threshold(G) or not all(d.clause_checks(G).values()):
        raise ConsistencyError(f"generated threshold graph failed its checks: {A}, {X}")
    return G, d


def threshold_specs(max_order: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every valid ``(A sizes, X sizes)`` with at most ``max_order`` vertices."""
    def rec(n, A, X, left):
        # A = A_0..A_n so far, X = X_1..X_n so far; close with X_{n+1}
        for last in range(left + 1):
            yield tuple(A), tuple(X) + (last,)
        for a in range(1, left + 1):
            for x in range(1, left - a + 1):
                yield from rec(n + 1, A + [a], X + [x], left - a - x)

    for a0 in range(max_order + 1):
        yield from rec(0, [a0], [], max_order - a0)


# ---------------------------------------------------------------------------
# generalized combs


@dataclass(frozen=True)
class CombSpec:
    """Block sizes of a generalized comb.

    ``A = (|A_0|..|A_n|)``, ``M = (|M_1|..|M_l|)``, ``X = (|X_1|..|X_{n+1}|)``
    with ``X_1 = Y_1``, ``Y = (|Y_2|..|Y_{l+2}|)``.
    """

    A: tuple[int, ...] = (0,)
    M: tuple[int, ...] = ()
    X: tuple[int, ...] = (0,)
    Y: tuple[int, ...] = (0,)
    attach_c5: bool = False

    @property
    def n(self) -> int:
        return len(self.A) - 1

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.M)

    def y_sizes(self) -> list[int]:
        return [self.X[0]] + list(self.Y)

    @property
    def order(self) -> int:
        return sum(self.A) + sum(self.M) + sum(self.X) + sum(self.Y) + (5 if self.attach_c5 else 0)

    def validate(self) -> None:
        n, l = self.n, self.l
        if n < 0 or len(self.X) != n + 1 or len(self.Y) != l + 1:
            raise GraphError("need len(X) = len(A) and len(Y) = len(M) + 1")
        if min(self.A + self.M + self.X + self.Y) < 0:
            raise GraphError("block sizes must be non-negative")
        ys = self.y_sizes()
        if any(a == 0 for a in self.A[1:]) or any(x == 0 for x in self.X[:n]):
            raise GraphError("only A_0 and X_{n+1} may be empty")
        if any(y == 0 for y in ys[:l]):
            raise GraphError("only Y_{l+1} and Y_{l+2} may be empty")
        for i, m in enumerate(self.M):
            if m and m != ys[i]:
                raise GraphError(f"|M_{i + 1}| must equal |Y_{i + 1}|")

    def to_json(self) -> dict:
        return {"A": list(self.A), "M": list(self.M), "X": list(self.X), "Y": list(self.Y), "attach_c5": self.attach_c5}

    @classmethod
    def from_json(cls, data: dict) -> "CombSpec":
        return cls(
            A=tuple(data.get("A", (0,))),
            M=tuple(data.get("M", ())),
            X=tuple(data.get("X", (0,))),
            Y=tuple(data.get("Y", (0,) * (len(data.get("M", ())) + 1))),
            attach_c5=bool(data.get("attach_c5", False)),
        )


def _layout_comb(spec: CombSpec, c: _Counter, perm=None) -> CombDecomposition:
    A = tuple(c.take(a) for a in spec.A)
    M = tuple(c.take(m) for m in spec.M)
    X = tuple(c.take(x) for x in spec.X)
    Y = (X[0],) + tuple(c.take(y) for y in spec.Y)
    matching = []
    for i, Mi in enumerate(M):
        if not Mi:
            continue
        ys, ms = sorted(Y[i]), sorted(Mi)
        if perm is not None and i in perm:
            ms = [ms[k] for k in perm[i]]
        matching.extend(zip(ys, ms))
    return CombDecomposition(A, M, X, Y, tuple(sorted(matching)))


def gen_generalized_comb(spec: CombSpec, perm: Optional[dict] = None) -> tuple[Graph, CombDecomposition]:
    """Generalized comb realizing ``spec``; ``Y_i`` and ``M_i`` are matched
    by index unless ``perm[i]`` reorders ``M_{i+1}``."""
    if spec.attach_c5:
        raise GraphError("use gen_target_graph for specs with a five-cycle")
    spec.validate()
    c = _Counter()
    d = _layout_comb(spec, c, perm)
    G = Graph(c.next, d.edge_set())
    if not all(d.clause_checks(G).values()) or not is_generalized_comb(G):
        raise ConsistencyError(f"generated comb failed its checks: {spec}")
    return G, d


def gen_target_graph(spec: CombSpec, perm: Optional[dict] = None) -> tuple[Graph, TargetDecomposition]:
    """Comb from ``spec`` plus, when ``spec.attach_c5``, a five-cycle joined
    to every clique vertex and to no stable vertex."""
    spec.validate()
    c = _Counter()
    d = _layout_comb(spec, c, perm)
    edges = set(d.edge_set())
    C: tuple[int, ...] = ()
    if spec.attach_c5:
        C = tuple(sorted(c.take(5)))
        for k in range(5):
            edges.add((C[k], C[(k + 1) % 5]))
        for v in C:
            for w in d.K:
                edges.add((min(v, w), max(v, w)))
    G = Graph(c.next, edges)
    t = TargetDecomposition.from_comb(d, C)
    if not all(t.clause_checks(G).values()) or not is_target_free(G):
        raise ConsistencyError(f"generated target graph failed its checks: {spec}")
    return G, t


def _compositions(total: int, parts: int, positive: Sequence[bool]) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = 1 if positive[0] else 0
    for first in range(lo, total + 1):
        for rest in _compositions(total - first, parts - 1, positive[1:]):
            yield (first,) + rest


def comb_specs(max_order: int, attach_c5: bool = False, min_order: int = 0) -> Iterator[CombSpec]:
    """Every valid :class:`CombSpec` with ``min_order <= order <= max_order``."""
    budget = max_order - (5 if attach_c5 else 0)
    if budget < 0:
        return
    for n in range(budget // 2 + 1):
        for l in range(budget + 1):
            y_positive = [False] if l == 0 else [True] * (l - 1) + [False, False]
            for A in _compositions_bounded(n + 1, [False] + [True] * n, budget):
                for X in _compositions_bounded(n + 1, [True] * n + [False], budget - sum(A)):
                    left = budget - sum(A) - sum(X)
                    for Y in _compositions_bounded(l + 1, y_positive, left):
                        ys = [X[0]] + list(Y)
                        for M in _m_choices(ys[:l], left - sum(Y)):
                            spec = CombSpec(tuple(A), tuple(M), tuple(X), tuple(Y), attach_c5)
                            if spec.order < min_order:
                                continue
                            try:
                                spec.validate()
                            except GraphError:
                                continue
                            yield spec


def _compositions_bounded(parts: int, positive: Sequence[bool], limit: int) -> Iterator[tuple[int, ...]]:
    for s in range(limit + 1):
        yield from _compositions(s, parts, positive)


def _m_choices(ys: Sequence[int], room: int) -> Iterator[tuple[int, ...]]:
    # each M_i is empty or as large as Y_i
    if not ys:
        yield ()
        return
    for rest in _m_choices(ys[1:], room):
        yield (0,) + rest
        if ys[0] and ys[0] + sum(rest) <= room:
            yield (ys[0],) + rest


# ---------------------------------------------------------------------------
# orientations


@dataclass
class _Orienter:
    order: int
    base_out: list[int]
    pairs: list[tuple[int, int]] = field(default_factory=list)

    def build(self, bits: int) -> OrientedGraph:
        out = list(self.base_out)
        for k, (u, v) in enumerate(self.pairs):
            if bits >> k & 1:
                out[u] |= 1 << v
            else:
                out[v] |= 1 << u
        return OrientedGraph._from_out_masks(out)


def orientable_pairs(G: Graph, extra_whole: int = 0) -> list[tuple[int, int]]:
    n = G.order + extra_whole
    return [(u, v) for u, v in combinations(range(n), 2) if not (v < G.order and G.has_edge(u, v))]


def orientations_missing(G: Graph, extra_whole: int = 0, mode: str = "exhaustive", seed: int = 0,
                         samples: int = 1000, cap_pairs: int = DEFAULT_CAP_PAIRS,
                         vary_extra: bool = False, check: bool = True) -> Iterator[OrientedGraph]:
    """Oriented graphs whose missing graph is exactly ``G``.

    Every non-edge of ``G`` gets one direction.  Extra whole vertices
    ``G.order ..`` are joined to everything, by a fixed alternating rule
    unless ``vary_extra`` puts their pairs into the enumeration as well.
    ``mode`` is ``"exhaustive"`` (all ``2^p`` choices, bit ``k`` set meaning
    the ``k``-th pair points from its smaller to its larger end) or
    ``"random"`` (``samples`` uniform draws from ``random.Random(seed)``).
    """
    iso = G.isolated_vertices()
    if iso:
        raise GraphError(f"isolated vertices {iso} would be whole and drop out of the missing graph")
    n = G.order + extra_whole
    base = [0] * n
    varying = []
    for u, v in orientable_pairs(G, extra_whole):
        if v >= G.order and not vary_extra:
            # fixed rule for pairs touching an extra vertex
            if (u + v) % 2:
                base[u] |= 1 << v
            else:
                base[v] |= 1 << u
        else:
            varying.append((u, v))
    orienter = _Orienter(n, base, varying)
    p = len(varying)

    def emit(bits: int) -> OrientedGraph:
        D = orienter.build(bits)
        if check:
            H, mapping = missing_graph(D)
            if mapping != tuple(range(G.order)) or H.edges != G.edges:
                raise ConsistencyError("orientation does not miss the requested graph")
        return D

    if mode == "exhaustive":
        if p > cap_pairs:
            raise GraphError(f"{p} orientable pairs exceed the exhaustive cap {cap_pairs}")
        for bits in range(1 << p):
            yield emit(bits)
    elif mode == "random":
        rng = random.Random(seed)
        for _ in range(samples):
            yield emit(rng.getrandbits(p) if p else 0)
    else:
        raise GraphError(f"unknown mode {mode!r}")


def count_orientations(G: Graph, extra_whole: int = 0, vary_extra: bool = False) -> int:
    pairs = orientable_pairs(G, extra_whole)
    if not vary_extra:
        pairs = [(u, v) for u, v in pairs if v < G.order]
    return 2 ** len(pairs)


# ---------------------------------------------------------------------------
# named instances and enumeration


def paper_counterexamples() -> dict[str, OrientedGraph]:
    """The three small oriented graphs missing co-C4, a chair and a
    co-chair whose dependency digraphs are not disjoint paths."""
    a, b, c, d, x = range(5)
    return {
        "D": OrientedGraph(4, [(a, c), (b, d), (d, a), (c, b)], labels="abcd"),
        "D_prime": OrientedGraph(5, [(a, d), (b, c), (c, a), (b, x), (x, a), (x, c)], labels="abcdx"),
        "D_double_prime": OrientedGraph(5, [(a, c), (b, d), (d, a), (a, x)], labels="abcdx"),
    }


def atlas_graphs(max_order: int = 7, min_order: int = 0) -> Iterator[Graph]:
    """One graph per isomorphism class up to order 7 (the networkx atlas)."""
    import networkx as nx

    if max_order > 7:
        raise GraphError("the atlas only covers orders up to 7")
    for g in nx.graph_atlas_g():
        k = g.number_of_nodes()
        if min_order <= k <= max_order:
            yield Graph(k, g.edges())


def dedupe_isomorphic(graphs) -> list:
    """Keep the first member of every isomorphism class.

    Accepts graphs or ``(graph, payload)`` pairs.
    """
    import networkx as nx

    buckets: dict = {}
    kept = []
    for item in graphs:
        G = item[0] if isinstance(item, tuple) else item
        g = nx.Graph()
        g.add_nodes_from(range(G.order))
        g.add_edges_from(G.edges)
        key = (G.order, G.size(), tuple(sorted(G.degree(v) for v in G.vertices())),
               nx.weisfeiler_lehman_graph_hash(g))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        kept.append(item)
    return kept
