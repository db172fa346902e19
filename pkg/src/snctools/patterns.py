"""Small forbidden patterns and an induced-subgraph finder.

Pattern vertex labels follow the usual drawings: the chair is ``x y z t v``
with edges ``xy, yz, zt, zv``; the five-cycle is ``x y z u v`` in cyclic
order; ``S3`` is the 3-sun (a triangle ``a b c`` whose edges each carry a
degree-two vertex).
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional

from .graphs import Graph, iter_bits


def _chair() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)], labels="xyztv")


class PatternGraph(Enum):
    C4 = "C4"
    C4_COMPLEMENT = "C4_complement"
    P4 = "P4"
    C5 = "C5"
    S3 = "S3"
    CHAIR = "chair"
    CO_CHAIR = "co-chair"

    @property
    def graph(self) -> Graph:
        return _PATTERNS[self]

    @property
    def order(self) -> int:
        return _PATTERNS[self].order


_PATTERNS = {
    PatternGraph.C4: Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], labels="abcd"),
    PatternGraph.C4_COMPLEMENT: Graph(4, [(0, 1), (2, 3)], labels="abcd"),
    PatternGraph.P4: Graph(4, [(0, 1), (1, 2), (2, 3)], labels="abcd"),
    PatternGraph.C5: Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], labels="xyzuv"),
    PatternGraph.S3: Graph(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 1), (3, 2), (4, 0), (4, 2), (5, 0), (5, 1)],
        labels=["a", "b", "c", "sa", "sb", "sc"],
    ),
    PatternGraph.CHAIR: _chair(),
    PatternGraph.CO_CHAIR: _chair().complement(),
}

THRESHOLD_FORBIDDEN = (PatternGraph.C4, PatternGraph.C4_COMPLEMENT, PatternGraph.P4)
COMB_FORBIDDEN = (
    PatternGraph.C4,
    PatternGraph.C4_COMPLEMENT,
    PatternGraph.C5,
    PatternGraph.S3,
    PatternGraph.CHAIR,
    PatternGraph.CO_CHAIR,
)
TARGET_FORBIDDEN = (
    PatternGraph.C4,
    PatternGraph.C4_COMPLEMENT,
    PatternGraph.S3,
    PatternGraph.CHAIR,
    PatternGraph.CO_CHAIR,
)


def _search_order(H: Graph) -> list[int]:
    # high-degree vertex first, then keep each next vertex attached to the
    # already placed ones where possible so the candidate masks shrink fast
    order: list[int] = []
    remaining = set(H.vertices())
    while remaining:
        placed = set(order)
        best = max(
            remaining,
            key=lambda p: (len(H.neighborhood(p) & placed), H.degree(p), -p),
        )
        order.append(best)
        remaining.remove(best)
    return order


def find_induced(G: Graph, H: Graph | PatternGraph) -> Optional[tuple[int, ...]]:
    """Find an induced copy of ``H`` in ``G``.

    Returns a tuple ``phi`` with ``phi[p]`` the vertex of ``G`` playing pattern
    vertex ``p``, or ``None`` when ``H`` is not an induced subgraph.  The search
    backtracks over candidates in increasing vertex order, so the result is
    deterministic.
    """
    if isinstance(H, PatternGraph):
        H = H.graph
    k, n = H.order, G.order
    if k > n:
        return None
    if k == 0:
        return ()
    order = _search_order(H)
    full = (1 << n) - 1
    adj = [G.adj_mask(v) for v in range(n)]
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    deg = [a.bit_count() for a in adj]
    # vertices able to host each pattern vertex by degree alone
    host = []
    for p in order:
        dp = H.degree(p)
        ndp = k - 1 - dp
        mask = 0
        for w in range(n):
            if deg[w] >= dp and n - 1 - deg[w] >= ndp:
                mask |= 1 << w
        host.append(mask)
    hadj = [[H.has_edge(order[i], order[j]) for j in range(i)] for i in range(k)]

    phi = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = host[i] & ~used
        for j in range(i):
            cand &= adj[phi[j]] if hadj[i][j] else nonadj[phi[j]]
            if not cand:
                return False
        for w in iter_bits(cand):
            phi[i] = w
            if extend(i + 1, used | 1 << w):
                return True
        return False

    if not extend(0, 0):
        return None
    result = [0] * k
    for i, p in enumerate(order):
        result[p] = phi[i]
    return tuple(result)


def find_any(G: Graph, patterns: Iterable[PatternGraph]) -> Optional[tuple[PatternGraph, tuple[int, ...]]]:
    """First pattern (in the given order) that embeds in ``G``, with its embedding."""
    for P in patterns:
        phi = find_induced(G, P)
        if phi is not None:
            return P, phi
    return None
