"""Upper irredundance numbers and token-sliding reconfiguration graphs.

A small research library for graphs of at most 64 vertices: exact
computation of IR(G), exhaustive enumeration of the maximum irredundant
sets, construction of the reconfiguration graph they span under
single-token slides, structured flip/skip moves between them, a few
built-in graph families whose reconfiguration graphs are double stars,
and corpus-level verification and conjecture scanning utilities.
"""

from .errors import (
    CapacityExceeded,
    GraphError,
    IndexOutOfRange,
    InternalInvariantError,
    InvalidParameter,
    InvalidPartition,
    MalformedEdgeList,
    MalformedGraph6,
    NotAMember,
    NotIrredundant,
    NotIrredundantResult,
    PreconditionViolated,
    SelfLoop,
    TooManyIRSets,
)
from .graph_core import (
    MAX_VERTICES,
    Graph,
    Shape,
    VertexSet,
    are_isomorphic,
    classify_shape,
    closed_neighborhood,
    complete_graph,
    cycle_graph,
    diameter,
    distance,
    distances_from,
    graph_from_edges,
    has_induced_c4,
    induced_subgraph,
    is_connected,
    mask_of,
    members,
    path_graph,
    relabel_graph,
)
from .graph_io import (
    export_dot,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    parse_graph6_lines,
    to_graph6,
)
from .irredundance import (
    EpnIsoPartition,
    ISOLATED_TO_EPN,
    ISOLATED_TO_ISO,
    all_ir_sets,
    epn_iso_partition,
    external_private_neighborhood,
    ir_number,
    is_irredundant,
    private_neighborhood,
    private_neighborhoods,
)
from .constructions import (
    RoleMap,
    build_double_star,
    build_gn,
    build_gprime,
    expected_ir_sets_gn,
)
from .reconfig import (
    DEFAULT_FLIP_CAP,
    DEFAULT_NODE_CAP,
    FlipEnumeration,
    FourCluster,
    IRGraph,
    build_ir_graph,
    enumerate_flip_sets,
    find_four_clusters,
    flip_set,
    skip_set,
    swap_adjacent,
)
from .verifier import (
    Finding,
    Report,
    ScanMatch,
    ScanReport,
    ShapeTarget,
    audit_leaf_clusters,
    check_c4_lemma,
    check_diameter_lemma,
    check_flip_theorem,
    combine_verdicts,
    conjecture_scan,
    target_cycle,
    target_double_star,
    target_path,
    target_tree_diam,
    verify_gn,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
