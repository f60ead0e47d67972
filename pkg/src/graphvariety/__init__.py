"""Exact tools for orthogonality varieties of graphs.

Given a graph and a non-degenerate bilinear form, the variety of interest
consists of all vertex-to-vector assignments whose endpoint vectors pair to
zero along every edge.  This package builds those varieties over exact
fields, certifies smooth and singular points through Jacobian rank and
explicit edge-weight certificates, samples regular points, counts points
over prime fields, and constructs verified splittings of graphs into
matchings via integer vertex weightings.
"""

from .bilinear import BilinearSpace, standard_space
from .counting import (
    DEFAULT_WORK_CAP,
    CountReport,
    CountRequest,
    count_points,
    dimension_probe,
    edge_count_closed_form,
)
from .errors import (
    BoundTooSmallError,
    DisconnectedGraphError,
    FieldMismatchError,
    GraphVarietyError,
    InternalConflictError,
    NotAForestError,
    NotOnVarietyError,
    OddDimensionError,
    PreconditionViolatedError,
    RetriesExhaustedError,
    SearchSpaceTooLargeError,
    UnsupportedCombinationError,
    WorkCapExceededError,
)
from .fields import RATIONALS, FpElement, PrimeField, RationalField, field_from_spec
from .graphs import (
    BfsLayering,
    Graph,
    OrderedGraph,
    bfs_layers,
    biconnected_edge_components,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    degeneracy_order,
    format_edge_list,
    has_even_cycle,
    induced_subgraph,
    induced_subgraph_with_map,
    is_connected,
    is_forest,
    parse_edge_list,
    path_graph,
    proper_vertex_numbering,
    star_graph,
)
from .linalg import Matrix, dot, vectors_independent
from .sampling import SamplerConfig, cycle_singular_point, sample_regular_point, zero_point
from .splitting import (
    BRUTE_FORCE_CAP,
    EdgeVerdict,
    SplittingReport,
    VertexWeighting,
    brute_force_min_colors,
    color_budget,
    color_classes,
    palette,
    split_forest_into_matchings,
    split_into_matchings,
)
from .variety import (
    EdgeEquation,
    ProjectiveVerdict,
    SingularityCertificate,
    VarietyContext,
    VertexAssignment,
    canonical_degrees,
    equations,
    expected_dimension,
    is_anti_ample,
    is_member,
    is_smooth_point,
    jacobian,
    projective_smoothness,
    regular_part_test,
    residual,
    singular_certificate,
    verify_certificate,
)

__version__ = "0.1.0"
