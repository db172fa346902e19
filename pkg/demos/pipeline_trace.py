"""Run the construction on C5 plus one whole vertex where a single pair of
cycle edges loses, and print each stage.

    python3 demos/pipeline_trace.py
"""

from snctools.engine import snp_witness_constructive
from snctools.graphs import OrientedGraph, has_snp

arcs = [(0, 3), (0, 5), (2, 0), (3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3), (5, 4)]
D = OrientedGraph(6, arcs)
w = snp_witness_constructive(D)
t = w.trace
print("case", t["case_id"], "roles", t["case_roles"], "mirrored", t["mirrored"])
for k in ("arcs_added_stage1", "arcs_added_stage2", "arcs_added_stage3"):
    print(k, t[k])
print("median order", t["median_order"], "exact", t["median_exact"])
print("reoriented", t["reoriented_edges"])
print(f"feed vertex {w.f}: d+ = {w.d_plus}, d++ = {w.d_plus_plus}, property {has_snp(D, w.f)}")
