"""Topological distances between finite metric graphs.

Computes the intrinsic Cech distance (closed form from the shortest system
of loops) and the persistence distortion distance (Hausdorff-of-bottlenecks
over extended persistence diagrams of geodesic distance functions), plus the
machinery to verify that the first is at most half the second on bouquet and
tree-of-loops inputs.
"""

from .cycles import LoopSystem, cycle_metrics, first_betti, shortest_loop_system
from .diagram_distances import (
    DIAGONAL,
    Ground,
    L1Ground,
    LinfGround,
    Matching,
    bottleneck,
    bottleneck_monotonicity_check,
    bottleneck_value,
    hausdorff_bottleneck,
    yaxis_bottleneck,
)
from .errors import (
    Disconnected,
    EmptySet,
    GraphError,
    GraphFormatError,
    InvalidPoint,
    NegativeValue,
    NonPositiveLength,
    NotABouquet,
    NotAClosedWalk,
    NotTreeOfLoops,
    SizeMismatch,
    SpecNotTreeOfLoops,
)
from .feasibility import (
    FeasibilityGraph,
    HallWitness,
    Report,
    build_feasibility_graph,
    compare_arbitrary,
    ideal_replacement_no_worse,
    in_feasible_region,
    is_bouquet,
    is_tree_of_loops,
    perfect_matching,
    smooth_degree_two,
    verify_bouquet_inequality,
    verify_tree_of_loops_inequality,
)
from .generators import (
    TreeOfLoopsSpec,
    bouquet,
    named,
    random_metric_graph,
    tree_of_loops,
    tree_of_loops_parts,
)
from .geodesics import (
    GeodesicField,
    ShortestPathTree,
    dijkstra,
    geodesic_distance,
    geodesic_field,
    promote_base,
    shortest_path_tree,
)
from .graph_distances import (
    SampledPhi,
    intrinsic_cech_diagram,
    intrinsic_cech_distance,
    persistence_distortion,
    persistence_distortion_from_samples,
    sample_base_points,
    sample_phi,
)
from .harness import pick_delta, random_generic_instance, run_verification
from .metric_graph import (
    Edge,
    GraphPoint,
    MetricGraph,
    from_json_dict,
    load_graph,
    parse_point,
    perturb_to_generic,
    save_graph,
    subdivide,
    to_json_dict,
    validate,
)
from .persistence import (
    Diagram,
    DiagramPoint,
    FilteredComplex,
    build_filtration,
    extended_persistence_1d,
    tree_of_loops_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "DIAGONAL",
    "Diagram",
    "DiagramPoint",
    "Disconnected",
    "Edge",
    "EmptySet",
    "FeasibilityGraph",
    "FilteredComplex",
    "GeodesicField",
    "GraphError",
    "GraphFormatError",
    "GraphPoint",
    "Ground",
    "HallWitness",
    "InvalidPoint",
    "L1Ground",
    "LinfGround",
    "LoopSystem",
    "Matching",
    "MetricGraph",
    "NegativeValue",
    "NonPositiveLength",
    "NotABouquet",
    "NotAClosedWalk",
    "NotTreeOfLoops",
    "Report",
    "SampledPhi",
    "ShortestPathTree",
    "SizeMismatch",
    "SpecNotTreeOfLoops",
    "TreeOfLoopsSpec",
    "bottleneck",
    "bottleneck_monotonicity_check",
    "bottleneck_value",
    "bouquet",
    "build_feasibility_graph",
    "build_filtration",
    "compare_arbitrary",
    "cycle_metrics",
    "dijkstra",
    "extended_persistence_1d",
    "first_betti",
    "from_json_dict",
    "geodesic_distance",
    "geodesic_field",
    "hausdorff_bottleneck",
    "ideal_replacement_no_worse",
    "in_feasible_region",
    "intrinsic_cech_diagram",
    "intrinsic_cech_distance",
    "is_bouquet",
    "is_tree_of_loops",
    "load_graph",
    "named",
    "parse_point",
    "perfect_matching",
    "persistence_distortion",
    "persistence_distortion_from_samples",
    "perturb_to_generic",
    "pick_delta",
    "promote_base",
    "random_generic_instance",
    "random_metric_graph",
    "run_verification",
    "sample_base_points",
    "sample_phi",
    "save_graph",
    "shortest_loop_system",
    "shortest_path_tree",
    "smooth_degree_two",
    "subdivide",
    "to_json_dict",
    "tree_of_loops",
    "tree_of_loops_diagram",
    "tree_of_loops_parts",
    "validate",
    "yaxis_bottleneck",
]
