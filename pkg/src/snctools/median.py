"""Median orders: exact maximum-forward-arc orderings, the feedback property,
feed vertices and a local-search surrogate for larger digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import ConsistencyError, GraphError
from .graphs import OrientedGraph, iter_bits

DEFAULT_CAP = 20
# below this order the plain-Python DP beats numpy's per-call overhead
_NUMPY_FROM = 11


@dataclass(frozen=True)
class Ordering:
    sequence: tuple[int, ...]
    forward_count: int

    def __len__(self) -> int:
        return len(self.sequence)

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.sequence)}

    def to_json(self) -> dict:
        return {"order": list(self.sequence), "forward_count": self.forward_count}


def _check_permutation(D: OrientedGraph, seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(int(v) for v in seq)
    if sorted(seq) != list(range(D.order)):
        raise GraphError("ordering is not a permutation of the vertices")
    return seq


def forward_arc_count(D: OrientedGraph, L) -> int:
    seq = _check_permutation(D, L.sequence if isinstance(L, Ordering) else L)
    before = 0
    count = 0
    for v in seq:
        count += (D.in_mask(v) & before).bit_count()
        before |= 1 << v
    return count


def _subset_dp_python(inmask: list[int], n: int) -> list[int]:
    f = [0] * (1 << n)
    for T in range(1, 1 << n):
        best = 0
        for v in iter_bits(T):
            rest = T & ~(1 << v)
            val = f[rest] + (inmask[v] & rest).bit_count()
            if val > best:
                best = val
        f[T] = best
    return f


def _subset_dp_numpy(inmask: list[int], n: int) -> np.ndarray:
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    pc = np.zeros(size, dtype=np.int32)
    for v in range(n):
        pc += (masks >> v) & 1
    f = np.zeros(size, dtype=np.int32)
    layers = np.argsort(pc, kind="stable")
    bounds = np.searchsorted(pc[layers], np.arange(n + 2))
    for k in range(1, n + 1):
        idx = layers[bounds[k]:bounds[k + 1]]
        best = np.zeros(len(idx), dtype=np.int32)
        for v in range(n):
            has = ((idx >> v) & 1).astype(bool)
            sel = idx[has]
            rest = sel ^ (1 << v)
            val = f[rest] + pc[rest & inmask[v]]
            best[has] = np.maximum(best[has], val)
        f[idx] = best
    return f


def _dp_table(D: OrientedGraph):
    n = D.order
    inmask = [D.in_mask(v) for v in range(n)]
    if n < _NUMPY_FROM:
        return _subset_dp_python(inmask, n)
    return _subset_dp_numpy(inmask, n)


def exact_median_order(D: OrientedGraph, cap: int = DEFAULT_CAP) -> Ordering:
    """An ordering with the maximum number of forward arcs.

    Subset dynamic programming over all ``2^n`` vertex sets.  The returned
    order is the lexicographically least optimal one: each position takes the
    smallest vertex that can start an optimal ordering of what is left.
    """
    n = D.order
    if n > cap:
        raise GraphError(f"order {n} exceeds the exact solver cap {cap}")
    f = _dp_table(D)
    R = (1 << n) - 1
    seq = []
    while R:
        target = int(f[R])
        for v in iter_bits(R):
            rest = R & ~(1 << v)
            if (D.out_mask(v) & rest).bit_count() + int(f[rest]) == target:
                seq.append(v)
                R = rest
                break
        else:  # pragma: no cover - the table is consistent by construction
            raise ConsistencyError("median order reconstruction failed")
    L = Ordering(tuple(seq), int(f[(1 << n) - 1]))
    if forward_arc_count(D, L) != L.forward_count:
        raise ConsistencyError("reconstructed order does not achieve the optimum")
    check = feedback_property_check(D, L)
    if not check.ok:
        raise ConsistencyError(f"median order violates the feedback property at {check}")
    return L


def brute_force_median_order(D: OrientedGraph) -> Ordering:
    """Maximum over all permutations; first maximizer in lexicographic order."""
    best = None
    for perm in permutations(range(D.order)):
        c = forward_arc_count(D, perm)
        if best is None or c > best.forward_count:
            best = Ordering(perm, c)
    return best if best is not None else Ordering((), 0)


class FeedbackCheck(NamedTuple):
    ok: bool
    interval: Optional[tuple[int, int]] = None
    side: Optional[str] = None


def feedback_property_check(D: OrientedGraph, L) -> FeedbackCheck:
    """Check both interval inequalities for every ``i < j`` (0-based
    positions).

    ``side="left"``: ``v_i`` has more in- than out-neighbours among
    ``v_{i+1}..v_j``.  ``side="right"``: ``v_j`` has more out- than
    in-neighbours among ``v_i..v_{j-1}``.
    """
    seq = _check_permutation(D, L.sequence if isinstance(L, Ordering) else L)
    n = len(seq)
    for i in range(n):
        vi = seq[i]
        window = 0
        for j in range(i + 1, n):
            window |= 1 << seq[j]
            if (D.out_mask(vi) & window).bit_count() < (D.in_mask(vi) & window).bit_count():
                return FeedbackCheck(False, (i, j), "left")
    for j in range(n):
        vj = seq[j]
        window = 0
        for i in range(j - 1, -1, -1):
            window |= 1 << seq[i]
            if (D.in_mask(vj) & window).bit_count() < (D.out_mask(vj) & window).bit_count():
                return FeedbackCheck(False, (i, j), "right")
    return FeedbackCheck(True)


def feed_vertex(L) -> int:
    seq = L.sequence if isinstance(L, Ordering) else tuple(L)
    if not seq:
        raise GraphError("empty ordering has no feed vertex")
    return seq[-1]


def local_median_order(D: OrientedGraph, start=None) -> Ordering:
    """An ordering with the feedback property, by local search.

    Each violated interval is repaired by moving its offending endpoint past
    the other end, which strictly increases the forward-arc count, so the
    loop terminates.
    """
    seq = list(_check_permutation(D, start if start is not None else range(D.order)))
    count = forward_arc_count(D, seq)
    while True:
        check = feedback_property_check(D, seq)
        if check.ok:
            return Ordering(tuple(seq), count)
        i, j = check.interval
        if check.side == "left":
            v = seq.pop(i)
            seq.insert(j, v)
        else:
            v = seq.pop(j)
            seq.insert(i, v)
        new = forward_arc_count(D, seq)
        if new <= count:  # pragma: no cover - a move always gains
            raise ConsistencyError("local search move did not increase the forward count")
        count = new


def median_order(D: OrientedGraph, cap: int = DEFAULT_CAP) -> Ordering:
    """Exact median order up to ``cap`` vertices, local search beyond."""
    return exact_median_order(D, cap) if D.order <= cap else local_median_order(D)


def reverse_backward_arc(D: OrientedGraph, L, e) -> OrientedGraph:
    """Reverse a backward arc ``(v_j, v_i)``, ``i < j``; ``L`` keeps the
    feedback property and gains one forward arc."""
    seq = _check_permutation(D, L.sequence if isinstance(L, Ordering) else L)
    u, v = e
    pos = {w: k for k, w in enumerate(seq)}
    if not D.has_arc(u, v) or pos[u] < pos[v]:
        raise GraphError(f"({u},{v}) is not a backward arc")
    before = forward_arc_count(D, seq)
    had_feedback = feedback_property_check(D, seq).ok
    D2 = D.with_reversed([(u, v)])
    if forward_arc_count(D2, seq) != before + 1:
        raise ConsistencyError("reversal did not add exactly one forward arc")
    if had_feedback and not feedback_property_check(D2, seq).ok:
        raise ConsistencyError("reversing a backward arc broke the feedback property")
    return D2
