"""Recognition and decomposition of threshold graphs, generalized combs and
{C4, co-C4, S3, chair, co-chair}-free graphs.

Every recognizer first runs the forbidden-pattern test (which decides
membership) and, on acceptance, builds a structural decomposition that is
then checked clause by clause.

Structure gap.  ``K1 + (P4 | 2K1)`` (a universal vertex over a P4 and two
isolated vertices) contains none of C4, co-C4, C5, S3, chair and co-chair,
yet admits no generalized-comb decomposition: its two pendant vertices share
their only neighbour, so they can neither be matched nor sit in ``A``.  Up
to order 8 every pattern-free graph without a decomposition contains it.
Recognizers still accept such graphs (membership is decided by the patterns)
but return no comb part; see :data:`STRUCTURE_GAP`.

Isolated vertices.  The generalized-comb definition makes every ``A`` vertex
(``A_0`` included) adjacent to all of ``Y``, so an isolated vertex fits only
when the clique side is empty.  Adding isolated vertices never creates one of
the forbidden patterns, so decompositions carry them in a separate
``isolated`` block; the threshold decomposition uses ``A_0`` for them, as its
definition allows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ConsistencyError, GraphError
from .graphs import Graph, bits_to_set, iter_bits, set_to_bits
from .patterns import (
    COMB_FORBIDDEN,
    TARGET_FORBIDDEN,
    THRESHOLD_FORBIDDEN,
    PatternGraph,
    find_any,
    find_induced,
)

# universal vertex 0 over the path 1-2-3-4 and the isolated vertices 5, 6
STRUCTURE_GAP = Graph(7, [(0, v) for v in range(1, 7)] + [(1, 2), (2, 3), (3, 4)])


def _fs(vertices) -> frozenset[int]:
    return frozenset(int(v) for v in vertices)


def _union(blocks) -> frozenset[int]:
    out: set[int] = set()
    for b in blocks:
        out |= b
    return frozenset(out)


# ---------------------------------------------------------------------------
# split pairs


def _check_split(G: Graph, S, K) -> None:
    if set(S) & set(K):
        raise GraphError("S and K must be disjoint")
    if not G.is_stable(S):
        raise GraphError("S is not a stable set")
    if not G.is_clique(K):
        raise GraphError("K is not a clique")


def is_complete_split_pair(G: Graph, S, K) -> bool:
    """Whether every vertex of ``S`` is adjacent to every vertex of ``K``."""
    _check_split(G, S, K)
    kmask = set_to_bits(K)
    return all(G.adj_mask(s) & kmask == kmask for s in S)


def is_perfect_split_pair(G: Graph, S, K) -> tuple[bool, Optional[tuple[tuple[int, int], ...]]]:
    """Whether the S-K edges form a perfect matching of ``G[S | K]``.

    Returns ``(True, pairs)`` with ``(k, s)`` pairs sorted by ``k`` on success
    and ``(False, None)`` otherwise.
    """
    _check_split(G, S, K)
    smask, kmask = set_to_bits(S), set_to_bits(K)
    pairs = []
    for k in sorted(K):
        nb = G.adj_mask(k) & smask
        if nb.bit_count() != 1:
            return False, None
        pairs.append((k, nb.bit_length() - 1))
    for s in S:
        if (G.adj_mask(s) & kmask).bit_count() != 1:
            return False, None
    return True, tuple(pairs)


# ---------------------------------------------------------------------------
# decomposition types


@dataclass(frozen=True)
class ThresholdDecomposition:
    """Blocks ``A_0..A_n`` (stable side) and ``X_1..X_{n+1}`` (clique side).

    ``A_i`` is joined to ``X_j`` exactly when ``1 <= j <= i``; ``A_0`` carries
    the isolated vertices.
    """

    A: tuple[frozenset[int], ...]
    X: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.A) - 1

    @property
    def S(self) -> frozenset[int]:
        return _union(self.A)

    @property
    def K(self) -> frozenset[int]:
        return _union(self.X)

    def edge_set(self) -> set[tuple[int, int]]:
        K = sorted(self.K)
        edges = {(u, v) for i, u in enumerate(K) for v in K[i + 1:]}
        for i in range(1, self.n + 1):
            for j in range(1, i + 1):
                for a in self.A[i]:
                    for x in self.X[j - 1]:
                        edges.add((min(a, x), max(a, x)))
        return edges

    def clause_checks(self, G: Graph) -> dict[str, bool]:
        blocks = list(self.A) + list(self.X)
        total = sum(len(b) for b in blocks)
        n = self.n
        return {
            "partition": len(self.X) == n + 1 and total == G.order and _union(blocks) == frozenset(G.vertices()),
            "clique": G.is_clique(self.K),
            "stable": G.is_stable(self.S),
            "nonempty": all(self.X[j] for j in range(n)) and all(self.A[i] for i in range(1, n + 1)),
            "no_other_edges": set(G.edges) == self.edge_set(),
        }

    def to_json(self) -> dict:
        return {"A": [sorted(b) for b in self.A], "X": [sorted(b) for b in self.X]}


@dataclass(frozen=True)
class CombDecomposition:
    """Sets of a generalized comb.

    ``A = (A_0..A_n)``, ``M = (M_1..M_l)``, ``X = (X_1..X_{n+1})`` and
    ``Y = (Y_1..Y_{l+2})`` with ``Y[0] == X[0]``.  ``matching`` lists the
    ``(y, m)`` pairs of every perfectly matched ``Y_i``-``M_i`` block.
    """

    A: tuple[frozenset[int], ...]
    M: tuple[frozenset[int], ...]
    X: tuple[frozenset[int], ...]
    Y: tuple[frozenset[int], ...]
    matching: tuple[tuple[int, int], ...]
    isolated: frozenset[int] = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return len(self.A) - 1

    @property
    def l(self) -> int:  # noqa: E743 - the block count has this name everywhere
        return len(self.M)

    @property
    def S(self) -> frozenset[int]:
        return _union(self.A) | _union(self.M)

    @property
    def K(self) -> frozenset[int]:
        return _union(self.X) | _union(self.Y)

    def vertices(self) -> frozenset[int]:
        return self.S | self.K | self.isolated

    def matching_edges(self) -> list[tuple[int, int]]:
        return [(min(y, m), max(y, m)) for y, m in self.matching]

    def block_of(self, v: int) -> tuple[str, int]:
        """Name and index (as in the definition) of the block holding ``v``.

        ``X_1 = Y_1`` is reported as ``("Y", 1)``.
        """
        if v in self.Y[0]:
            return ("Y", 1)
        for i, b in enumerate(self.A):
            if v in b:
                return ("A", i)
        for i, b in enumerate(self.M):
            if v in b:
                return ("M", i + 1)
        for j, b in enumerate(self.X):
            if v in b:
                return ("X", j + 1)
        for j, b in enumerate(self.Y):
            if v in b:
                return ("Y", j + 1)
        if v in self.isolated:
            return ("isolated", 0)
        raise KeyError(v)

    def edge_set(self) -> set[tuple[int, int]]:
        def add(u, v):
            edges.add((min(u, v), max(u, v)))

        edges: set[tuple[int, int]] = set()
        K = sorted(self.K)
        for i, u in enumerate(K):
            for v in K[i + 1:]:
                add(u, v)
        n, l = self.n, self.l
        for i in range(1, n + 1):
            for j in range(1, i + 1):
                for a in self.A[i]:
                    for x in self.X[j - 1]:
                        add(a, x)
        Yall = _union(self.Y)
        for a in _union(self.A):
            for y in Yall:
                add(a, y)
        for y, m in self.matching:
            add(y, m)
        for i in range(1, l + 1):
            for j in range(i + 1, l + 2):
                for m in self.M[i - 1]:
                    for y in self.Y[j - 1]:
                        add(m, y)
        return edges

    def clause_checks(self, G: Graph, within: Optional[frozenset[int]] = None) -> dict[str, bool]:
        """Evaluate each clause of the generalized-comb definition separately.

        ``within`` restricts the check to the subgraph induced by a vertex set
        (used for the comb part of a target decomposition).
        """
        V = frozenset(G.vertices()) if within is None else within
        n, l = self.n, self.l
        shapes_ok = len(self.X) == n + 1 and len(self.Y) == l + 2 and n >= 0
        blocks = list(self.A) + list(self.M) + list(self.X) + list(self.Y[1:]) + [self.isolated]
        checks: dict[str, bool] = {}
        checks["1_sets"] = (
            shapes_ok
            and self.Y[0] == self.X[0]
            and sum(len(b) for b in blocks) == len(V)
            and _union(blocks) == V
        )
        checks["2_stable"] = G.is_stable(self.S | self.isolated)
        checks["3_clique"] = G.is_clique(self.K)
        checks["4_A_X_complete"] = all(
            G.adj_mask(a) & set_to_bits(self.X[j - 1]) == set_to_bits(self.X[j - 1])
            for i in range(1, n + 1) for j in range(1, i + 1) for a in self.A[i]
        )
        ymask = set_to_bits(_union(self.Y))
        checks["5_A_Y_complete"] = all(G.adj_mask(a) & ymask == ymask for a in _union(self.A))
        perfect = True
        pairs = set(self.matching)
        for i in range(1, l + 1):
            Mi, Yi = self.M[i - 1], self.Y[i - 1]
            if not Mi:
                if any(y in Yi or m in Mi for y, m in pairs):
                    perfect = False
                continue
            ok, got = is_perfect_split_pair(G, Mi, Yi) if G.is_clique(Yi) and G.is_stable(Mi) else (False, None)
            if not ok or {p for p in pairs if p[0] in Yi} != set(got):
                perfect = False
        matched_y = {y for y, _ in pairs}
        matched_m = {m for _, m in pairs}
        if len(matched_y) != len(pairs) or len(matched_m) != len(pairs):
            perfect = False
        checks["6_Y_M_perfect"] = perfect
        checks["7_Y_M_complete"] = all(
            G.adj_mask(m) & set_to_bits(self.Y[j - 1]) == set_to_bits(self.Y[j - 1])
            for i in range(1, l + 1) for j in range(i + 1, l + 2) for m in self.M[i - 1]
        )
        # X_1 = Y_1 must be nonempty unless it is both X_{n+1} and Y_{l+1}
        nonempty = shapes_ok and (
            all(self.X[j] for j in range(n))
            and all(self.Y[j] for j in range(l))
            and all(self.A[i] for i in range(1, n + 1))
        )
        checks["8_nonempty"] = nonempty
        sub = {(u, v) for u, v in G.edges if u in V and v in V}
        checks["9_no_other_edges"] = shapes_ok and sub == self.edge_set()
        return checks

    def relabel(self, mapping) -> "CombDecomposition":
        """Rename vertex ``v`` to ``mapping[v]``."""
        def m(b):
            return frozenset(mapping[v] for v in b)

        return CombDecomposition(
            A=tuple(m(b) for b in self.A),
            M=tuple(m(b) for b in self.M),
            X=tuple(m(b) for b in self.X),
            Y=tuple(m(b) for b in self.Y),
            matching=tuple(sorted((mapping[y], mapping[x]) for y, x in self.matching)),
            isolated=m(self.isolated),
        )

    def to_json(self) -> dict:
        out = {
            "A": [sorted(b) for b in self.A],
            "M": [sorted(b) for b in self.M],
            "X": [sorted(b) for b in self.X],
            "Y": [sorted(b) for b in self.Y],
            "matching": [[y, m] for y, m in self.matching],
        }
        if self.isolated:
            out["isolated"] = sorted(self.isolated)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CombDecomposition":
        return cls(
            A=tuple(_fs(b) for b in data["A"]),
            M=tuple(_fs(b) for b in data["M"]),
            X=tuple(_fs(b) for b in data["X"]),
            Y=tuple(_fs(b) for b in data["Y"]),
            matching=tuple((int(y), int(m)) for y, m in data["matching"]),
            isolated=_fs(data.get("isolated", ())),
        )


@dataclass(frozen=True)
class TargetDecomposition:
    """``V = S | K | C``: a generalized comb on ``S | K`` and an optional
    five-cycle ``C`` (listed in cyclic order) joined to all of ``K`` and to
    nothing in ``S``.

    ``comb`` is ``None`` when ``G[S | K]`` is pattern-free but admits no
    decomposition under the literal comb definition (see
    :data:`STRUCTURE_GAP`); ``S`` and ``K`` then come from a split partition.
    """

    S: frozenset[int]
    K: frozenset[int]
    C: tuple[int, ...] = ()
    comb: Optional[CombDecomposition] = None

    @classmethod
    def from_comb(cls, comb: CombDecomposition, C=()) -> "TargetDecomposition":
        return cls(comb.S | comb.isolated, comb.K, tuple(C), comb)

    @property
    def structure_gap(self) -> bool:
        return self.comb is None

    def relabel(self, mapping) -> "TargetDecomposition":
        return TargetDecomposition(
            frozenset(mapping[v] for v in self.S),
            frozenset(mapping[v] for v in self.K),
            tuple(mapping[v] for v in self.C),
            None if self.comb is None else self.comb.relabel(mapping),
        )

    def cycle_edges(self) -> list[tuple[int, int]]:
        if not self.C:
            return []
        return [tuple(sorted((self.C[i], self.C[(i + 1) % 5]))) for i in range(5)]

    def clause_checks(self, G: Graph) -> dict[str, bool]:
        Cset = frozenset(self.C)
        rest = frozenset(G.vertices()) - Cset
        checks: dict[str, bool] = {}
        if self.comb is not None:
            comb_ok = self.comb.clause_checks(G, within=rest)
            checks.update({f"1_comb.{k}": v for k, v in comb_ok.items()})
            checks["1_sets_agree"] = self.comb.S | self.comb.isolated == self.S and self.comb.K == self.K
        checks["1_partition"] = (
            len(Cset) == len(self.C) and not (self.S & self.K) and self.S | self.K == rest
            and G.is_stable(self.S) and G.is_clique(self.K)
        )
        if self.C:
            expected = {tuple(sorted((self.C[i], self.C[(i + 1) % 5]))) for i in range(5)}
            got = {(u, v) for u, v in G.edges if u in Cset and v in Cset}
            checks["2_cycle"] = len(self.C) == 5 and got == expected
        else:
            checks["2_cycle"] = True
        kmask, smask = set_to_bits(self.K), set_to_bits(self.S)
        checks["3_C_joins"] = all(
            G.adj_mask(c) & kmask == kmask and not (G.adj_mask(c) & smask) for c in self.C
        )
        return checks

    def to_json(self) -> dict:
        if self.comb is not None:
            out = self.comb.to_json()
        else:
            out = {"S": sorted(self.S), "K": sorted(self.K), "structure_gap": True}
        out["C"] = list(self.C)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "TargetDecomposition":
        C = tuple(int(c) for c in data.get("C", ()))
        if data.get("structure_gap"):
            return cls(_fs(data["S"]), _fs(data["K"]), C, None)
        return cls.from_comb(CombDecomposition.from_json(data), C)


@dataclass(frozen=True)
class Recognition:
    """Outcome of a recognizer: a decomposition on acceptance, a forbidden
    pattern with its embedding on rejection."""

    graph_class: str
    accepted: bool
    decomposition: object = None
    witness: Optional[tuple[PatternGraph, tuple[int, ...]]] = None
    structure_gap: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.accepted

    def to_json(self) -> dict:
        out: dict = {"class": self.graph_class, "accepted": self.accepted}
        if self.decomposition is not None:
            out["decomposition"] = self.decomposition.to_json()
        if self.witness is not None:
            P, phi = self.witness
            out["witness"] = {"pattern": P.value, "embedding": list(phi)}
        if self.structure_gap is not None:
            out["structure_gap"] = list(self.structure_gap)
        return out


# ---------------------------------------------------------------------------
# threshold graphs


def threshold_decomposition(G: Graph) -> Optional[ThresholdDecomposition]:
    """Peel isolated and dominating vertices until nothing is left.

    Runs of removed vertices alternate between the two kinds; isolated runs
    become ``A`` blocks and dominating runs ``X`` blocks.  Returns ``None``
    when at some point neither kind exists (the graph is not threshold).
    The last remaining vertex counts as dominating.
    """
    remaining = (1 << G.order) - 1
    runs: list[tuple[str, frozenset[int]]] = []
    while remaining:
        iso = [v for v in iter_bits(remaining) if not (G.adj_mask(v) & remaining)]
        if iso and remaining.bit_count() > 1:
            kind, batch = "A", iso
        else:
            dom = [v for v in iter_bits(remaining)
                   if (G.adj_mask(v) | 1 << v) & remaining == remaining]
            if not dom:
                return None
            kind, batch = "X", dom
        if runs and runs[-1][0] == kind:
            runs[-1] = (kind, runs[-1][1] | frozenset(batch))
        else:
            runs.append((kind, frozenset(batch)))
        remaining &= ~set_to_bits(batch)
    A: list[frozenset[int]] = []
    X: list[frozenset[int]] = []
    if runs and runs[0][0] == "A":
        A.append(runs.pop(0)[1])
    else:
        A.append(frozenset())
    for kind, block in runs:
        (X if kind == "X" else A).append(block)
    # A_0..A_n against X_1..X_{n+1}
    if len(X) == len(A) - 1:
        X.append(frozenset())
    return ThresholdDecomposition(tuple(A), tuple(X))


def is_threshold(G: Graph) -> Recognition:
    hit = find_any(G, THRESHOLD_FORBIDDEN)
    if hit is not None:
        return Recognition("threshold", False, witness=hit)
    d = threshold_decomposition(G)
    if d is None or not all(d.clause_checks(G).values()):
        raise ConsistencyError(f"{{C4, co-C4, P4}}-free graph without threshold decomposition: {G!r}")
    return Recognition("threshold", True, decomposition=d)


# ---------------------------------------------------------------------------
# generalized combs


def _maximum_cliques(adj: list[int], within: int) -> list[int]:
    best: list[int] = []
    size = [0]

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            c = R.bit_count()
            if c > size[0]:
                size[0] = c
                best.clear()
            if c == size[0]:
                best.append(R)
            return
        if R.bit_count() + P.bit_count() < size[0]:
            return
        pivot = max(iter_bits(P | X), key=lambda u: (adj[u] & P).bit_count())
        for v in iter_bits(P & ~adj[pivot]):
            expand(R | 1 << v, P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    expand(0, within, 0)
    return sorted(best)


def _split_partitions(adj: list[int], within: int) -> list[tuple[int, int]]:
    """All (stable, clique) partitions of the subgraph induced by ``within``."""
    seen = set()
    out = []
    for K in _maximum_cliques(adj, within):
        S = within & ~K
        if any(adj[s] & S for s in iter_bits(S)):
            continue
        cands = [(S, K)] + [(S | 1 << v, K & ~(1 << v)) for v in iter_bits(K) if not adj[v] & S]
        for c in cands:
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def _build_comb(adj: list[int], S: int, K: int, A: int, isolated: frozenset[int]) -> Optional[CombDecomposition]:
    M = S & ~A
    nb = {s: adj[s] & K for s in iter_bits(S)}
    # clique side adjacent to every A vertex
    if A:
        Y = K
        for a in iter_bits(A):
            Y &= nb[a]
    else:
        Y = K
    Xrest = K & ~Y

    # threshold side: nested A neighbourhoods, smallest equal to Y
    levels = sorted({nb[a] for a in iter_bits(A)}, key=lambda m: m.bit_count())
    for lo, hi in zip(levels, levels[1:]):
        if lo & ~hi:
            return None
    if levels and levels[0] != Y:
        return None
    if len(levels) <= 1 and not Xrest:
        A_blocks = [bits_to_set(A)]
        X_blocks: list[frozenset[int]] = []
    else:
        A_blocks = [frozenset()]
        X_blocks = [frozenset()]  # placeholder for X_1
        prev = Y
        for lv in levels:
            if lv != Y:
                X_blocks.append(bits_to_set(lv & ~prev))
            A_blocks.append(frozenset(a for a in iter_bits(A) if nb[a] == lv))
            prev = lv
        X_blocks.append(bits_to_set(Xrest & ~prev))

    # matched side: M vertices grouped by neighbourhood size, largest first
    matching: list[tuple[int, int]] = []
    M_blocks: list[frozenset[int]] = []
    Y_blocks: list[frozenset[int]] = []
    if M:
        madj = {k: adj[k] & M for k in iter_bits(K)}
        groups: dict[int, list[int]] = {}
        for m in iter_bits(M):
            groups.setdefault(nb[m].bit_count(), []).append(m)
        prev_w = None
        for size in sorted(groups, reverse=True):
            g = groups[size]
            if len(g) >= 2:
                W = K
                for m in g:
                    W &= nb[m]
                priv = {}
                for m in g:
                    p = nb[m] & ~W
                    if p.bit_count() != 1:
                        return None
                    priv[m] = p.bit_length() - 1
                if len(set(priv.values())) != len(g):
                    return None
            else:
                m = g[0]
                mu = min(iter_bits(nb[m]), key=lambda k: (madj[k].bit_count(), k))
                priv = {m: mu}
                W = nb[m] & ~(1 << mu)
            Ymu = set_to_bits(priv.values())
            if prev_w is not None:
                if (Ymu | W) & ~prev_w:
                    return None
                free = prev_w & ~(Ymu | W)
                if free:
                    Y_blocks.append(bits_to_set(free))
                    M_blocks.append(frozenset())
            Y_blocks.append(bits_to_set(Ymu))
            M_blocks.append(frozenset(g))
            matching.extend((priv[m], m) for m in g)
            prev_w = W
        Y_blocks.append(bits_to_set(prev_w))
        used = set_to_bits(_union(Y_blocks))
        if used & ~Y:
            return None
        Y_blocks.append(bits_to_set(Y & ~used))
    else:
        Y_blocks = [bits_to_set(Y), frozenset()]

    if X_blocks:
        X_blocks[0] = Y_blocks[0]
    else:
        X_blocks = [Y_blocks[0]]
    return CombDecomposition(
        A=tuple(A_blocks),
        M=tuple(M_blocks),
        X=tuple(X_blocks),
        Y=tuple(Y_blocks),
        matching=tuple(sorted(matching)),
        isolated=isolated,
    )


def _decomposition_key(d: CombDecomposition):
    return tuple(tuple(tuple(sorted(b)) for b in blocks) for blocks in (d.A, d.M, d.X, d.Y))


def comb_decomposition(G: Graph, within=None, split=None) -> Optional[CombDecomposition]:
    """Search for a generalized-comb decomposition of ``G`` (or of the
    subgraph induced by ``within``).

    ``split=(S, K)`` fixes the stable/clique partition.  Candidates come from
    the split partitions seeded by maximum cliques and, for each, the ``A``
    sets made of the stable vertices with the largest neighbourhoods.  Among
    the candidates passing every clause check the one with the smallest
    sorted block contents is returned.
    """
    V = frozenset(G.vertices()) if within is None else frozenset(within)
    vmask = set_to_bits(V)
    adj = [G.adj_mask(v) & vmask for v in range(G.order)]
    if split is None:
        isolated = frozenset(v for v in V if not adj[v])
        partitions = _split_partitions(adj, vmask & ~set_to_bits(isolated))
    else:
        S0, K0 = set_to_bits(split[0]), set_to_bits(split[1])
        isolated = frozenset(v for v in iter_bits(S0) if not adj[v])
        partitions = [(S0 & ~set_to_bits(isolated), K0)]
    if not vmask & ~set_to_bits(isolated):
        partitions = [(0, 0)]
    best = None
    for S, K in partitions:
        sizes = sorted({(adj[s] & K).bit_count() for s in iter_bits(S)}, reverse=True)
        for theta in sizes + [None]:
            A = 0 if theta is None else set_to_bits(
                s for s in iter_bits(S) if (adj[s] & K).bit_count() >= theta
            )
            d = _build_comb(adj, S, K, A, isolated)
            if d is None or not all(d.clause_checks(G, within=V).values()):
                continue
            if best is None or _decomposition_key(d) < _decomposition_key(best):
                best = d
    return best


def _split_of(G: Graph, within) -> tuple[frozenset[int], frozenset[int]]:
    vmask = set_to_bits(within)
    adj = [G.adj_mask(v) & vmask for v in range(G.order)]
    isolated = set_to_bits(v for v in within if not adj[v])
    parts = _split_partitions(adj, vmask & ~isolated)
    if not parts:
        raise ConsistencyError("pattern-free graph is not split")
    S, K = parts[0]
    return bits_to_set(S | isolated), bits_to_set(K)


def is_generalized_comb(G: Graph) -> Recognition:
    hit = find_any(G, COMB_FORBIDDEN)
    if hit is not None:
        return Recognition("generalized_comb", False, witness=hit)
    d = comb_decomposition(G)
    if d is None:
        gap = find_induced(G, STRUCTURE_GAP)
        if gap is None:
            raise ConsistencyError(f"pattern-free graph without comb decomposition: {G!r}")
        return Recognition("generalized_comb", True, structure_gap=gap)
    return Recognition("generalized_comb", True, decomposition=d)


# ---------------------------------------------------------------------------
# target class


def target_decomposition(G: Graph) -> Optional[TargetDecomposition]:
    """Decompose a {C4, co-C4, S3, chair, co-chair}-free graph into a comb
    part and an optional five-cycle joined to the comb's clique.

    Returns a decomposition without a comb part when the comb part falls in
    the structure gap, and ``None`` when even the split/cycle frame fails.
    """
    phi = find_induced(G, PatternGraph.C5)
    if phi is None:
        d = comb_decomposition(G)
        if d is not None:
            return TargetDecomposition.from_comb(d)
        S, K = _split_of(G, G.vertices())
        return TargetDecomposition(S, K)
    C = tuple(phi)
    cmask = set_to_bits(C)
    rest = [v for v in G.vertices() if v not in C]
    K = [v for v in rest if G.adj_mask(v) & cmask == cmask]
    S = [v for v in rest if not G.adj_mask(v) & cmask]
    if len(K) + len(S) != len(rest) or not G.is_clique(K) or not G.is_stable(S):
        return None
    d = comb_decomposition(G, within=rest, split=(S, K))
    t = TargetDecomposition.from_comb(d, C) if d is not None else TargetDecomposition(_fs(S), _fs(K), C)
    return t if all(t.clause_checks(G).values()) else None


def is_target_free(G: Graph) -> Recognition:
    hit = find_any(G, TARGET_FORBIDDEN)
    if hit is not None:
        return Recognition("target", False, witness=hit)
    d = target_decomposition(G)
    if d is None:
        raise ConsistencyError(f"pattern-free graph without (S, K, C) decomposition: {G!r}")
    gap = None
    if d.structure_gap:
        H, back = G.induced_subgraph(d.S | d.K)
        phi = find_induced(H, STRUCTURE_GAP)
        if phi is None:
            raise ConsistencyError(f"pattern-free comb part without decomposition: {G!r}")
        gap = tuple(back[v] for v in phi)
    return Recognition("target", True, decomposition=d, structure_gap=gap)


def comb_strip(G: Graph, d: CombDecomposition) -> Graph:
    """Remove every matched ``Y_i``-``M_i`` edge; the result is threshold."""
    if not all(d.clause_checks(G, within=d.vertices()).values()):
        raise GraphError("decomposition does not describe this graph")
    H = G.without_edges(d.matching_edges())
    if not is_threshold(H.induced_subgraph(d.vertices())[0]):
        raise ConsistencyError("stripped comb is not threshold")
    return H


RECOGNIZERS = {
    "threshold": is_threshold,
    "comb": is_generalized_comb,
    "target": is_target_free,
}
