"""The chord orientation of C5 whose dependency digraph is a directed
five-cycle, so no case of the five-cycle classification applies.

    python3 demos/rotational_c5.py
"""

from snctools import io
from snctools.dependency import delta_is_disjoint_paths, dependency_digraph
from snctools.engine import snp_witness_bruteforce, snp_witness_constructive
from snctools.errors import ConsistencyError
from snctools.graphs import OrientedGraph

D = OrientedGraph(5, [(0, 3), (1, 4), (2, 0), (3, 1), (4, 2)])
delta = dependency_digraph(D)
print(io.format_edgelist(D))
print("missing edges:", delta.nodes)
print("losing arcs:", delta.edge_arcs())
print("diagnosis:", delta_is_disjoint_paths(delta).diagnosis)
for v in D.vertices():
    print(f"vertex {v}: d+ = {D.out_degree(v)}, d++ = {D.second_out_degree(v)}")

try:
    snp_witness_constructive(D)
except ConsistencyError as exc:
    print("strict engine:", exc)

w = snp_witness_constructive(D, cycle_fallback=True)
print("with cycle fallback: f =", w.f, "candidate", w.trace["cycle_candidate"])
print("brute force: f =", snp_witness_bruteforce(D).f)
