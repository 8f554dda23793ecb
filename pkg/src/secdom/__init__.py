"""secdom: exact solvers, verifiers, recognizers, and reduction gadgets for
five graph-domination variants (plain, independent, isolate, secure, and
secure independent domination)."""

from .classes import (
    EliminationOrdering,
    PebResult,
    PebStatus,
    SplitPartition,
    ThresholdCertificate,
    bipartition,
    is_bisimplicial,
    perfect_edge_elimination,
    recognize_threshold,
    split_partition,
    threshold_insds,
    verify_elimination_ordering,
)
from .families import (
    ClosedFormResult,
    GridWitnessError,
    ceil_div,
    closed_form,
    grid_upper_bound,
    grid_witness,
    path_witness,
)
from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    apex_join,
    bits,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    generate,
    graph_new,
    grid,
    is_connected,
    mask_of,
    parse_graph,
    path,
    serialize_graph,
    star,
    wheel,
)
from .reductions import (
    ReductionOutput,
    SetCoverInstance,
    apx_gadget,
    bipartite_dom_to_peb,
    extract_cover,
    extract_solution,
    forward_witness,
    gp_graph,
    gp_insds_witness,
    indm_to_insdm,
    parse_set_cover,
    serialize_set_cover,
    setcover_to_split,
)
from .solve import (
    BudgetExceededError,
    Decision,
    SearchBudget,
    Solution,
    all_minimum_sets,
    feasible_mask,
    solve,
    solve_decision,
)
from .verify import (
    CertificateReport,
    Variant,
    Violation,
    defenders,
    external_private_neighbors,
    is_dominating,
    is_independent,
    is_isolate_dominating,
    is_secure_dominating,
    verify_set,
)

__version__ = "0.1.0"
