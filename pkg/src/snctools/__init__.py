"""Dependency digraphs, graph-class recognition, median orders and a
constructive second neighbourhood search for oriented graphs."""

from .dependency import (
    DependencyDigraph,
    convenient_orientations,
    delta_is_disjoint_paths,
    dependency_digraph,
    is_good,
    loses_to,
    maximal_delta_paths,
    missing_graph,
    whole_vertices,
)
from .engine import (
    C5Case,
    SNPWitness,
    apply_c5_recipe,
    classify_c5_case,
    complete_to_tournament,
    orient_delta_paths,
    snp_witness_bruteforce,
    snp_witness_constructive,
)
from .errors import ClassRejection, ConsistencyError, GraphError
from .generators import (
    CombSpec,
    gen_generalized_comb,
    gen_target_graph,
    gen_threshold,
    orientations_missing,
    paper_counterexamples,
)
from .graphs import Graph, OrientedGraph, has_snp
from .median import (
    Ordering,
    exact_median_order,
    feed_vertex,
    feedback_property_check,
    forward_arc_count,
    local_median_order,
    median_order,
    reverse_backward_arc,
)
from .patterns import PatternGraph, find_induced
from .recognition import (
    CombDecomposition,
    Recognition,
    TargetDecomposition,
    ThresholdDecomposition,
    comb_strip,
    is_complete_split_pair,
    is_generalized_comb,
    is_perfect_split_pair,
    is_target_free,
    is_threshold,
)

__version__ = "0.1.0"
