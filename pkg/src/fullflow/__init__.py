"""Flow-based pair quantities and group centrality on capacitated digraphs."""

from .centrality import (
    CentralityReport,
    PairTerm,
    centrality_report,
    decimal_text,
    full_flow_betweenness,
    full_flow_vitality,
)
from .errors import (
    BadTokenError,
    BudgetExceededError,
    DuplicateArcError,
    FullFlowError,
    InvalidFlowError,
    InvalidSpecError,
    InvariantViolationError,
    MixedEndpointsError,
    NetworkParseError,
    NotArcDisjointError,
    NotAugmentingError,
    SameEndpointsError,
    SelfLoopError,
    ShortcutInvalidError,
    TooFewVerticesError,
    UnknownVertexError,
)
from .figures import (
    FIGURE_NAMES,
    FigureCheck,
    fig2_stored_flow,
    figure_checks,
    figure_network,
    figure_networks,
)
from .flows import (
    Decomposition,
    Flow,
    FlowViolation,
    ResidualView,
    augment,
    decompose,
    find_augmenting_path,
    flow_through,
    flow_to_text,
    flow_value,
    max_flow,
    min_cost_max_flow,
    null_flow,
    parse_flow,
    recompose,
    validate_flow,
)
from .network import (
    Arc,
    Network,
    VertexId,
    boundary_arcs,
    build_network,
    capacity_of_set,
    load_network,
    network_to_text,
    ordered_pairs,
    parse_network,
    restrict,
    vertex_group,
)
from .oracle import (
    CrossCheckReport,
    InstanceSpec,
    brute_force_flows,
    brute_force_min_throughput,
    cross_check,
    generate,
)
from .paths import (
    BACKWARD,
    FORWARD,
    ArcDisjointSequence,
    Cycle,
    GeneralizedPath,
    Path,
    chi,
    cycle_of,
    induced_flow,
    is_arc_disjoint,
    passage_count,
    passes_through,
    path_of,
    sequences_equivalent,
)
from .quantities import (
    DEFAULT_NODE_BUDGET,
    PairQuantities,
    enumerate_max_sequences,
    forced_passage,
    forced_throughput,
    pair_report,
    render_group,
    vitality_drop,
)

__version__ = "0.1.0"
