"""Local antimagic labelings: matrices, graph families, verifier, search oracle."""

from .families import (
    ACCEPTANCE_GRID,
    BuiltFamily,
    ColorClass,
    ExpectedColors,
    FAMILIES,
    ParameterError,
    build_family,
)
from .graph import (
    Bipartition,
    DuplicateName,
    GraphError,
    GraphTooLarge,
    InvalidPlan,
    LabeledEdge,
    LabeledGraph,
    Loop,
    LoopCreated,
    MergeGroup,
    MergePlan,
    NotAPartition,
    ParallelEdge,
    ParallelEdgeCreated,
    add_edge,
    apply_merge,
    chromatic_number_small,
    degrees,
    disjoint_union,
    is_bipartite,
    merge_plan,
    new_graph,
    split_vertex,
)
from .matrices import (
    LabelMatrix,
    ValidationReport,
    matrix_5x2k,
    matrix_6x4n,
    matrix_kx10,
    row_structure_6x4n,
    sequences_6x4n,
    validate,
    validate_5x2k,
    validate_6x4n,
    validate_kx10,
)
from .search import (
    SearchResult,
    SearchStats,
    chi_la_exact,
    confirm_three,
)
from .verify import (
    ColorReport,
    ExpectedCheck,
    GateReport,
    TwoColorGate,
    check_expected,
    induced_coloring,
    lower_bound,
    two_color_gate,
)

__version__ = "0.1.0"
