"""Command line interface.

Exit codes: 0 accept / success, 1 reject or a failed instance, 2 bad input.
Reports are JSON with sorted keys; identical inputs and seeds give identical
bytes (timings are only included with ``--timing``).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from collections import Counter
from pathlib import Path
from typing import Optional

from . import io
from .dependency import dependency_digraph, delta_is_disjoint_paths, maximal_delta_paths
from .engine import snp_witness_bruteforce, snp_witness_constructive
from .errors import ClassRejection, ConsistencyError, GraphError
from .generators import CombSpec, gen_target_graph, orientable_pairs, orientations_missing
from .graphs import Graph, OrientedGraph
from .median import DEFAULT_CAP, feedback_property_check, median_order
from .recognition import RECOGNIZERS, is_target_free

EXIT_OK, EXIT_REJECT, EXIT_ERROR = 0, 1, 2


def _emit(text: str, out=None) -> None:
    (out or sys.stdout).write(text)


def _json(obj) -> str:
    return io.dumps(obj)


def _line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _read(path, kind: str):
    return io.read_graph(path, kind=kind)


def instance_hash(D) -> str:
    return hashlib.sha256(io.format_edgelist(D).encode()).hexdigest()[:16]


def delta_summary(D: OrientedGraph, delta=None) -> dict:
    delta = delta if delta is not None else dependency_digraph(D)
    check = delta_is_disjoint_paths(delta)
    out = {
        "nodes": len(delta),
        "arcs": len(delta.arcs),
        "disjoint_paths": check.ok,
        "diagnosis": check.diagnosis,
        "max_out_degree": max((delta.out_degree(i) for i in range(len(delta))), default=0),
        "max_in_degree": max((delta.in_degree(i) for i in range(len(delta))), default=0),
    }
    if check.ok:
        out["path_lengths"] = sorted(len(p) - 1 for p in maximal_delta_paths(delta).paths)
    else:
        out["where"] = [list(e) for e in check.where]
    return out


def run_instance(D: OrientedGraph, mode: str = "both", decomposition=None, cap: int = DEFAULT_CAP,
                 cycle_fallback: bool = False, index: Optional[int] = None, timing: bool = False):
    """Check one oriented graph; returns ``(report, trace)``."""
    start = time.perf_counter()
    report: dict = {"hash": instance_hash(D), "order": D.order, "missing_edges": len(D.missing_pairs())}
    if index is not None:
        report["id"] = index
    delta = dependency_digraph(D)
    report["delta"] = delta_summary(D, delta)
    trace = None
    status = "ok"
    if D.order == 0:
        report.update({"class": "target", "case": None, "witness": None, "trivial": True})
        mode = "none"
    if mode in ("constructive", "both"):
        report["witness"] = None
        try:
            w = snp_witness_constructive(D, decomposition, cap=cap, cycle_fallback=cycle_fallback)
        except ClassRejection as exc:
            report["class"] = "rejected"
            report["rejection"] = exc.witness
            status = "rejected"
        except ConsistencyError as exc:
            report["class"] = "target"
            report["error"] = str(exc)
            trace = exc.trace
            status = "consistency_failure"
        else:
            report["class"] = "target"
            report["case"] = w.trace["case_id"]
            report["c5_cycle"] = w.trace["c5_cycle"]
            report["mirrored"] = w.trace["mirrored"]
            report["witness"] = {"f": w.f, "d_plus": w.d_plus, "d_plus_plus": w.d_plus_plus}
            trace = w.trace
    if mode in ("bruteforce", "both"):
        b = snp_witness_bruteforce(D)
        report["bruteforce"] = None if b is None else {"f": b.f, "d_plus": b.d_plus, "d_plus_plus": b.d_plus_plus}
        if b is None:
            status = "no_witness"
    report["status"] = status
    if timing:
        report["seconds"] = round(time.perf_counter() - start, 6)
    return report, trace


# ---------------------------------------------------------------------------
# subcommands


def cmd_recognize(args) -> int:
    G = _read(args.input, "graph")
    rec = RECOGNIZERS[args.graph_class](G)
    _emit(_json(rec.to_json()))
    return EXIT_OK if rec else EXIT_REJECT


def cmd_delta(args) -> int:
    D = _read(args.input, "oriented")
    delta = dependency_digraph(D)
    if args.format == "dot":
        _emit(io.to_dot(delta, "Delta"))
        return EXIT_OK
    _emit(_json({"delta": delta.to_json(), "summary": delta_summary(D, delta), "dot": io.to_dot(delta, "Delta")}))
    return EXIT_OK


def cmd_median(args) -> int:
    D = _read(args.input, "oriented")
    L = median_order(D, args.cap_n)
    check = feedback_property_check(D, L)
    out = L.to_json()
    out["exact"] = D.order <= args.cap_n
    out["feedback_property"] = check.ok
    if L.sequence:
        out["feed_vertex"] = L.sequence[-1]
    _emit(_json(out))
    return EXIT_OK


def cmd_snc_check(args) -> int:
    D = _read(args.input, "oriented")
    report, trace = run_instance(D, args.mode, cap=args.cap_n, cycle_fallback=args.cycle_fallback,
                                 timing=args.timing)
    if args.trace and trace is not None:
        Path(args.trace).write_text(_json(trace))
    _emit(_json(report))
    return EXIT_OK if report["status"] == "ok" else EXIT_REJECT


def _load_spec(text: str) -> CombSpec:
    if text == "-":
        raw = sys.stdin.read()
    elif text.lstrip().startswith("{"):
        raw = text
    else:
        raw = Path(text).read_text()
    try:
        spec = CombSpec.from_json(json.loads(raw))
    except (json.JSONDecodeError, TypeError, AttributeError) as exc:
        raise GraphError(f"malformed spec: {exc}") from None
    spec.validate()
    return spec


def cmd_gen(args) -> int:
    spec = _load_spec(args.spec)
    G, dec = gen_target_graph(spec)
    if args.with_decomposition:
        _emit(_json({"graph": io.graph_to_json(G), "decomposition": dec.to_json(), "spec": spec.to_json()}))
    else:
        _emit(io.write_graph(G, args.format))
    return EXIT_OK


def _core(G: Graph):
    core = [v for v in G.vertices() if G.degree(v)]
    H, _ = G.induced_subgraph(core)
    return H, G.order - H.order


def cmd_enumerate(args) -> int:
    spec = _load_spec(args.spec)
    G, _ = gen_target_graph(spec)
    H, extra = _core(G)
    decomposition = is_target_free(H).decomposition
    p = len(orientable_pairs(H, extra))
    if args.samples is None and p > args.cap_pairs:
        raise GraphError(f"{p} orientable pairs exceed --cap-pairs {args.cap_pairs}; use --samples")
    if H.order == 0 and extra == 0:
        stream = iter([OrientedGraph(0)])
    elif args.samples is None:
        stream = orientations_missing(H, extra, cap_pairs=args.cap_pairs, vary_extra=True)
    else:
        stream = orientations_missing(H, extra, mode="random", seed=args.seed, samples=args.samples, vary_extra=True)
    statuses: Counter = Counter()
    cases: Counter = Counter()
    lengths: Counter = Counter()
    failures = []
    total = 0
    for i, D in enumerate(stream):
        report, trace = run_instance(D, "both", decomposition, args.cap_n, args.cycle_fallback, i, args.timing)
        total += 1
        statuses[report["status"]] += 1
        if report["status"] == "ok" and "case" in report:
            cases[report["case"] or ("cycle" if report.get("c5_cycle") else "none")] += 1
        for k in report["delta"].get("path_lengths", ()):
            lengths[str(k)] += 1
        if report["status"] != "ok":
            failures.append({"id": i, "hash": report["hash"], "status": report["status"],
                             "arcs": [list(a) for a in sorted(D.arcs)], "error": report.get("error")})
        if args.jsonl:
            _emit(_line(report))
    summary = {
        "spec": spec.to_json(),
        "order": G.order,
        "orientable_pairs": p,
        "mode": "exhaustive" if args.samples is None else "random",
        "seed": None if args.samples is None else args.seed,
        "instances": total,
        "failures": total - statuses["ok"],
        "status_counts": dict(sorted(statuses.items())),
        "case_histogram": dict(sorted(cases.items())),
        "path_length_histogram": dict(sorted(lengths.items(), key=lambda kv: int(kv[0]))),
        "failed": failures[: args.max_failures],
    }
    if args.trace:
        Path(args.trace).write_text(_json({"failed": failures}))
    _emit(_line({"summary": summary}) if args.jsonl else _json(summary))
    return EXIT_OK if summary["failures"] == 0 else EXIT_REJECT


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=io.FORMATS, default="json",
                        help="rendering of graph or dependency-digraph output (gen, delta)")
    common.add_argument("--cap-n", type=int, default=DEFAULT_CAP,
                        help="largest order solved exactly by the median-order DP")
    common.add_argument("--cap-pairs", type=int, default=16,
                        help="largest number of free pairs enumerated exhaustively")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trace", metavar="OUT.json", help="write the construction trace here")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds to reports")

    parser = argparse.ArgumentParser(prog="snctools", description="Second neighbourhood tools for oriented graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="recognize a graph class with a certificate")
    p.add_argument("input", help="graph file (edge list or JSON), '-' for stdin")
    p.add_argument("--class", dest="graph_class", choices=sorted(RECOGNIZERS), default="target")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("delta", parents=[common], help="dependency digraph of an oriented graph")
    p.add_argument("input")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("median", parents=[common], help="median order and feed vertex")
    p.add_argument("input")
    p.set_defaults(func=cmd_median)

    p = sub.add_parser("snc-check", parents=[common], help="find a vertex with the second neighbourhood property")
    p.add_argument("input")
    p.add_argument("--mode", choices=("constructive", "bruteforce", "both"), default="both")
    p.add_argument("--cycle-fallback", action="store_true",
                   help="search cuts of a losing 5-cycle instead of failing")
    p.set_defaults(func=cmd_snc_check)

    p = sub.add_parser("gen", parents=[common], help="build the graph of a comb spec")
    p.add_argument("spec", help="CombSpec JSON text or file")
    p.add_argument("--with-decomposition", action="store_true")
    p.set_defaults(func=cmd_gen, format="edgelist")

    p = sub.add_parser("enumerate", parents=[common], help="check every orientation missing a spec's graph")
    p.add_argument("spec", help="CombSpec JSON text or file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", help="all orientations (default)")
    group.add_argument("--samples", type=int, help="seeded random orientations instead")
    p.add_argument("--jsonl", action="store_true", help="stream one report line per instance")
    p.add_argument("--cycle-fallback", action="store_true")
    p.add_argument("--max-failures", type=int, default=10, help="failed instances listed in the summary")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
