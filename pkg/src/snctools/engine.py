"""Constructive search for a vertex with the second neighbourhood property in
oriented graphs whose missing graph has no induced C4, co-C4, S3, chair or
co-chair.

Pipeline: decompose the missing graph, build the dependency digraph, orient
its paths (comb blocks first, then the five-cycle by case), complete the
rest with convenient orientations into a tournament, take the feed vertex of
a median order, turn the good missing edges at it towards it, and check the
property in the original digraph.  Every structural claim the argument
relies on is asserted on the way; a failed assertion raises
:class:`ConsistencyError` carrying the trace built so far.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .dependency import (
    DependencyDigraph,
    all_losing_labelings,
    convenient_orientations,
    delta_is_disjoint_paths,
    dependency_digraph,
    is_convenient,
    maximal_delta_paths,
    missing_graph,
)
from .errors import ClassRejection, ConsistencyError
from .graphs import OrientedGraph, has_snp
from .median import DEFAULT_CAP, feed_vertex, feedback_property_check, median_order
from .recognition import TargetDecomposition, is_target_free, is_threshold

ROLES = "xyzuv"

# losing arcs of each case in terms of the cycle roles x y z u v
CASE_PATTERNS = {
    "I": (),
    "II": (("uv", "xy"),),
    "III": (("uv", "xy"), ("vx", "yz")),
    "IV": (("uv", "xy"), ("xy", "zu")),
    "V": (("uv", "xy"), ("xy", "zu"), ("zu", "vx")),
    "VI": (("uv", "xy"), ("xy", "zu"), ("xv", "zy")),
}

# directions tried first for the path heads of each case
HEAD_PREFERENCE = {
    "I": (),
    "II": ("uv",),
    "III": ("uv", "vx"),
    "IV": ("uv",),
    "V": ("uv",),
    "VI": ("uv", "xv"),
}


@dataclass(frozen=True)
class C5Case:
    case_id: str
    roles: dict = field(default_factory=dict)  # role letter -> vertex

    def edge(self, name: str) -> tuple[int, int]:
        return (self.roles[name[0]], self.roles[name[1]])

    def to_json(self) -> dict:
        return {"case": self.case_id, "roles": {r: self.roles[r] for r in ROLES if r in self.roles}}


@dataclass
class SNPWitness:
    f: int
    d_plus: int
    d_plus_plus: int
    trace: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"f": self.f, "d_plus": self.d_plus, "d_plus_plus": self.d_plus_plus, "trace": self.trace}


def _key(e) -> tuple[int, int]:
    u, v = e
    return (u, v) if u < v else (v, u)


def _fail(message: str, trace: dict, reproducer: Optional[Path] = None):
    if reproducer is not None:
        Path(reproducer).write_text(json.dumps({"error": message, "trace": trace}, indent=2, default=list))
    raise ConsistencyError(message, trace=trace)


def _dihedral_maps(C):
    for r in range(5):
        yield [C[(r + k) % 5] for k in range(5)]
        yield [C[(r - k) % 5] for k in range(5)]


def classify_c5_case(D: OrientedGraph, delta: DependencyDigraph, C) -> C5Case:
    """Match the losing arcs among the cycle's missing edges against the six
    cases, trying every rotation and reflection of ``C``."""
    if not C:
        return C5Case("I")
    cedges = {_key((C[k], C[(k + 1) % 5])) for k in range(5)}
    actual = {(a, b) for a, b in delta.edge_arcs() if a in cedges and b in cedges}
    for case_id, pattern in CASE_PATTERNS.items():
        if len(pattern) != len(actual):
            continue
        for img in _dihedral_maps(C):
            roles = dict(zip(ROLES, img))
            mapped = {
                (_key((roles[p[0]], roles[p[1]])), _key((roles[q[0]], roles[q[1]])))
                for p, q in pattern
            }
            if mapped == actual:
                return C5Case(case_id, roles)
    raise ConsistencyError(
        "losing arcs on the five-cycle match none of the six cases",
        trace={"C": list(C), "arcs": sorted(actual)},
    )


def _propagate(D: OrientedGraph, delta: DependencyDigraph, path, first: tuple[int, int], notes: list) -> list:
    """Orient ``path`` starting from ``first``: when ``x1y1`` loses to
    ``x2y2``, orienting ``x1 -> y1`` forces ``x2 -> y2``."""
    arcs = [first]
    cur = first
    for e1, e2 in zip(path, path[1:]):
        labs = all_losing_labelings(D, e1, e2)
        matchings = {frozenset({(x1, x2), (y1, y2)}) for x1, y1, x2, y2 in labs}
        if len(matchings) > 1:
            notes.append({"ambiguous_labeling": [list(e1), list(e2)]})
        x1, y1, x2, y2 = labs[0]
        nxt = (x2, y2) if cur == (x1, y1) else (y2, x2)
        arcs.append(nxt)
        cur = nxt
    return arcs


def _head_orientation(D: OrientedGraph, e, preferred: tuple[int, int], trace: dict, reproducer):
    options = convenient_orientations(D, e)
    if not options:
        _fail(f"path head {e} has no convenient orientation", trace, reproducer)
    if preferred in options:
        return preferred, False
    return options[0], True


def _check_delta_structure(delta: DependencyDigraph, decomposition: TargetDecomposition, trace, reproducer) -> None:
    check = delta_is_disjoint_paths(delta)
    if not check.ok:
        _fail(f"dependency digraph is not disjoint paths ({check.diagnosis} at {check.where})", trace, reproducer)
    cedges = set(decomposition.cycle_edges())
    if decomposition.comb is None:
        for a, b in delta.edge_arcs():
            if (a in cedges) != (b in cedges):
                _fail(f"losing arc {a}->{b} joins the cycle and the rest", trace, reproducer)
        return
    block = {}
    comb = decomposition.comb
    for y, m in comb.matching:
        block[_key((y, m))] = comb.block_of(y)[1]
    for a, b in delta.edge_arcs():
        if a in cedges and b in cedges:
            continue
        if a in block and b in block and block[a] == block[b]:
            continue
        _fail(f"losing arc {a}->{b} leaves every matched block and the cycle", trace, reproducer)


def orient_delta_paths(D: OrientedGraph, delta: DependencyDigraph, decomposition: TargetDecomposition,
                       trace: Optional[dict] = None, reproducer=None) -> list[tuple[int, int]]:
    """Stage 1: orient every maximal losing path among the matched comb edges.

    With ``(m0, y0)`` convenient the path gets ``(m0, y0), (y1, m1), (m2, y2),
    ...``; otherwise the mirror image.  Without a comb part (structure gap)
    every path off the cycle is oriented by propagating along the losing
    labelings, and unmatched good edges are left for the completion stage.
    """
    trace = trace if trace is not None else {}
    cedges = set(decomposition.cycle_edges())
    split = maximal_delta_paths(delta)
    arcs: list[tuple[int, int]] = []
    notes = trace.setdefault("notes", [])
    comb = decomposition.comb
    if comb is None:
        for path in split.paths:
            if path[0] in cedges:
                continue
            a, b = path[0]
            first, _ = _head_orientation(D, path[0], (a, b), trace, reproducer)
            arcs.extend(_propagate(D, delta, path, first, notes))
        return arcs
    m_side = {_key((y, m)): m for y, m in comb.matching}
    comb_paths = [p for p in split.paths if p[0] in m_side] + [[e] for e in split.isolated if e in m_side]
    comb_paths.sort()
    for path in comb_paths:
        if any(e not in m_side for e in path):
            _fail(f"losing path {path} mixes matched and unmatched edges", trace, reproducer)
        m0 = m_side[path[0]]
        y0 = path[0][0] + path[0][1] - m0
        first, _ = _head_orientation(D, path[0], (m0, y0), trace, reproducer)
        forward = first == (m0, y0)
        for i, e in enumerate(path):
            m = m_side[e]
            y = e[0] + e[1] - m
            arcs.append((m, y) if (i % 2 == 0) == forward else (y, m))
        if len(path) > 1:
            by_labels = _propagate(D, delta, path, first, notes)
            if by_labels != arcs[-len(path):]:
                notes.append({"labeling_rule_differs": [list(e) for e in path]})
    return arcs


def apply_c5_recipe(D: OrientedGraph, delta: DependencyDigraph, case: C5Case,
                    trace: Optional[dict] = None, reproducer=None) -> tuple[list[tuple[int, int]], bool]:
    """Stage 2: orient the cycle's missing edges.

    Losing paths on the cycle start from their head's convenient orientation
    (the named direction ``(u, v)``, ``(v, x)`` or ``(x, v)`` when it is
    convenient, otherwise its reverse, which is reported as mirrored) and
    propagate along the losing labelings; the remaining good edges get a
    convenient orientation with respect to ``D``.  Returns the arcs and the
    mirrored flag.
    """
    trace = trace if trace is not None else {}
    if not case.roles:
        return [], False
    roles = case.roles
    C = [roles[r] for r in ROLES]
    cedges = [_key((C[k], C[(k + 1) % 5])) for k in range(5)]
    sub = delta.restrict(cedges)
    split = maximal_delta_paths(sub)
    named = {_key(case.edge(n)): case.edge(n) for n in HEAD_PREFERENCE[case.case_id]}
    notes = trace.setdefault("notes", [])
    arcs: list[tuple[int, int]] = []
    mirrored = False
    for path in split.paths:
        head = path[0]
        preferred = named.get(head, head)
        first, flipped = _head_orientation(D, head, preferred, trace, reproducer)
        mirrored |= flipped and head in named
        arcs.extend(_propagate(D, sub, path, first, notes))
    for e in split.isolated:
        options = convenient_orientations(D, e)
        if not options:
            _fail(f"isolated cycle edge {e} is not good", trace, reproducer)
        arcs.append(options[0])
    return arcs, mirrored


def complete_to_tournament(D: OrientedGraph, arcs, check_threshold: bool = True,
                           trace: Optional[dict] = None, reproducer=None):
    """Add the stage arcs to get ``D'``, then a convenient orientation (with
    respect to ``D'``) of every remaining missing edge to get ``T``.

    Returns ``(D', T, residual_arcs)``.
    """
    trace = trace if trace is not None else {}
    D1 = D.with_arcs(arcs)
    if check_threshold:
        G1, _ = missing_graph(D1)
        if not is_threshold(G1):
            _fail("missing graph after the path stages is not threshold", trace, reproducer)
    residual = []
    for a, b in D1.missing_pairs():
        if is_convenient(D1, a, b):
            residual.append((a, b))
        elif is_convenient(D1, b, a):
            residual.append((b, a))
        else:
            _fail(f"residual missing edge {a}{b} is not good", trace, reproducer)
    T = D1.with_arcs(residual)
    if not T.is_tournament():
        _fail("completion is not a tournament", trace, reproducer)
    return D1, T, residual


def _target_decomposition_of(D: OrientedGraph) -> TargetDecomposition:
    G, mapping = missing_graph(D)
    rec = is_target_free(G)
    if not rec:
        P, phi = rec.witness
        raise ClassRejection(
            f"missing graph contains an induced {P.value}",
            witness={"pattern": P.value, "embedding": [mapping[v] for v in phi]},
        )
    return rec.decomposition.relabel(mapping)


def snp_witness_constructive(D: OrientedGraph, decomposition: Optional[TargetDecomposition] = None,
                             cap: int = DEFAULT_CAP, reproducer=None,
                             cycle_fallback: bool = False) -> SNPWitness:
    """Follow the construction and return its feed vertex with the full trace.

    ``decomposition`` (in ``D``'s vertex ids) skips recognition when the
    caller already has it, e.g. over all orientations of one missing graph.
    Raises :class:`ClassRejection` when the missing graph is outside the
    class.  When the losing arcs on the five-cycle close into a directed
    cycle no case applies and :class:`ConsistencyError` is raised, unless
    ``cycle_fallback`` is set: then the cycle is cut at each edge in turn and
    the first cut whose feed vertex has the property in ``D`` is returned,
    with ``trace["c5_cycle"]`` set.
    """
    if decomposition is None:
        decomposition = _target_decomposition_of(D)
    trace: dict = {
        "decomposition": decomposition.to_json(),
        "structure_gap": decomposition.structure_gap,
        "notes": [],
    }
    delta = dependency_digraph(D)
    trace["delta"] = delta.to_json()
    cycle = _cycle_on_c(delta, decomposition)
    trace["c5_cycle"] = cycle is not None
    if cycle is not None and not cycle_fallback:
        _fail("losing arcs on the five-cycle form a directed cycle", trace, reproducer)
    rest = delta
    if cycle is not None:
        cedges = set(decomposition.cycle_edges())
        for a, b in delta.edge_arcs():
            if (a in cedges) != (b in cedges):
                _fail(f"losing arc {a}->{b} joins the cycle and the rest", trace, reproducer)
        rest = delta.restrict([e for e in delta.nodes if e not in cedges])
    _check_delta_structure(rest, decomposition, trace, reproducer)

    stage1 = orient_delta_paths(D, rest, decomposition, trace, reproducer)
    trace["arcs_added_stage1"] = [list(a) for a in stage1]
    if cycle is None:
        case = classify_c5_case(D, delta, decomposition.C)
        trace["case_id"] = case.case_id
        trace["case_roles"] = case.to_json()["roles"]
        stage2, mirrored = apply_c5_recipe(D, delta, case, trace, reproducer)
        candidates = [stage2]
    else:
        trace["case_id"] = None
        trace["case_roles"] = {}
        mirrored = False
        candidates = _cycle_candidates(D, delta, cycle, trace["notes"])
    trace["mirrored"] = mirrored

    for k, stage2 in enumerate(candidates):
        last = k == len(candidates) - 1
        try:
            found = _finish(D, delta, decomposition, stage1 + stage2, cap, trace, reproducer, last)
        except ConsistencyError as exc:
            if last:
                raise
            trace["notes"].append({"cycle_candidate_failed": k, "reason": str(exc)})
            continue
        if found is not None:
            trace["arcs_added_stage2"] = [list(a) for a in stage2]
            if cycle is not None:
                trace["cycle_candidate"] = k
            return found
    raise AssertionError("unreachable")  # pragma: no cover


def _cycle_on_c(delta: DependencyDigraph, decomposition: TargetDecomposition):
    """The losing cycle through all five cycle edges, if there is one."""
    cedges = decomposition.cycle_edges()
    if not cedges:
        return None
    check = delta_is_disjoint_paths(delta.restrict(cedges))
    if check.ok or check.diagnosis != "cycle":
        return None
    return list(check.where)


def _cycle_candidates(D: OrientedGraph, delta: DependencyDigraph, cycle, notes: list) -> list:
    """Orientations of the cycle edges when their losing arcs close up:
    cut the cycle before each edge and propagate from either direction of
    that edge.  Only used with ``cycle_fallback``; every candidate is still
    checked in ``D``."""
    out = []
    for k in range(len(cycle)):
        path = cycle[k:] + cycle[:k]
        a, b = path[0]
        for first in ((a, b), (b, a)):
            out.append(_propagate(D, delta, path, first, notes))
    return out


def _finish(D: OrientedGraph, delta: DependencyDigraph, decomposition: TargetDecomposition, arcs, cap,
            trace: dict, reproducer, last: bool = True) -> Optional[SNPWitness]:
    D1, T, stage3 = complete_to_tournament(
        D, arcs, check_threshold=not decomposition.structure_gap, trace=trace, reproducer=reproducer
    )
    trace["arcs_added_stage3"] = [list(a) for a in stage3]

    L = median_order(T, cap)
    trace["median_order"] = list(L.sequence)
    trace["median_exact"] = T.order <= cap
    f = feed_vertex(L)

    flips = []
    for a, b in D.missing_pairs():
        if f not in (a, b) or delta.edge_out_degree((a, b)) != 0:
            continue
        w = b if a == f else a
        if T.has_arc(f, w):
            flips.append((f, w))
    T2 = T.with_reversed(flips)
    trace["reoriented_edges"] = [list(e) for e in flips]
    if not feedback_property_check(T2, L).ok:
        _fail("reorientation broke the feedback property", trace, reproducer)
    if not has_snp(T2, f):
        _fail(f"feed vertex {f} lacks the property in the reoriented tournament", trace, reproducer)
    witness = SNPWitness(f, D.out_degree(f), D.second_out_degree(f), trace)
    if witness.d_plus > witness.d_plus_plus:
        if not last:
            return None
        trace["D"] = sorted(D.arcs)
        _fail(f"vertex {f} does not have the second neighbourhood property in D", trace, reproducer)
    return witness


def snp_witness_bruteforce(D: OrientedGraph) -> Optional[SNPWitness]:
    """The least vertex with the property, or ``None`` (a counterexample to
    the conjecture)."""
    for v in D.vertices():
        if has_snp(D, v):
            return SNPWitness(v, D.out_degree(v), D.second_out_degree(v), {"method": "bruteforce"})
    return None
