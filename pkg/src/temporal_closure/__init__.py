"""Temporal triadic-closure parameters and maximal dense-pattern enumeration."""

from .bounds import BOUND_KINDS, BoundCheck, theorem_bound, verify_bounds
from .closure import (
    ClosureParams,
    ClosureRateCurve,
    CurvePoint,
    OrderingResult,
    closure_number,
    closure_rate_curve,
    vertex_closure,
    vertex_closures,
    weak_closure_number,
)
from .core import (
    Interval,
    StaticGraph,
    TemporalGraph,
    common_neighbors,
    graph_in_interval,
    induced_subgraph,
    neighbors_in_interval,
    remove_vertex,
)
from .enumeration import (
    KINDS,
    DensePattern,
    check_patterns,
    edge_valid_intervals,
    enumerate_maximal_cliques,
    enumerate_maximal_defective,
    enumerate_maximal_plexes,
    enumerate_patterns,
    format_pattern,
    parse_pattern,
)
from .exceptions import GraphError, ParseError, PreconditionError, SizeGuardError, TemporalClosureError
from .fileio import ContactRecord, parse_contacts, parse_native, write_native
from .generate import (
    MODELS,
    GeneratorSpec,
    gen_example1,
    gen_moonmoser,
    gen_random_evolving,
    gen_static_lift,
    generate,
)
from .instability import (
    InstabilityReport,
    PairwiseMode,
    combined_weak_value,
    instability_report,
    local_instability,
    pairwise_instability,
    weak_pairwise_instability,
)

__version__ = "0.1.0"
