"""Sign structure of smallest signless-Laplacian eigenvectors over an independent set."""

from .graphs import (
    Graph,
    CompositeInstance,
    DeleteCross,
    AddIntra,
    apply_noise,
    common_neighbors,
    complement,
    complete_bipartite,
    complete_graph,
    compose,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    emit_edge_list,
    emit_graph6,
    instance_from_graph,
    instance_to_json,
    is_connected,
    join,
    join_decomposition,
    parse_edge_list,
    parse_graph6,
    path_graph,
)
from .spectra import (
    EigenSystem,
    EigensolverError,
    SmallestEigenpair,
    exact_kernel_dim,
    full_spectrum,
    integer_candidate,
    laplacian,
    mu_lower_bound_degrees,
    mu_upper_bound_cut,
    rayleigh_quotient_signless,
    signless_laplacian,
    smallest_eigenpair,
)
from .analysis import (
    BoundaryCharacterization,
    HarmonicCondition,
    MatrixClassReport,
    RothVerdict,
    SchurMatrix,
    ReducedMatrix,
    RowSumCheck,
    alpha_of,
    bdeg_check,
    boundary_characterization,
    build_q_mu,
    build_r_mu,
    classification_record,
    classify_q_mu,
    deg2_predicate,
    gavrilov_check,
    gc_check,
    gdeg_check,
    harmcond_check,
    is_complete_scaffold,
    r_mu_rowsum_check,
    s_roth_oracle,
    st_check,
)
from .bounds import (
    InverseBoundReport,
    bai_golub_trace_bounds,
    cycle_block_bounds,
    diag_dominance_inverse_bound,
    path_block_rowsums,
)
from .enumeration import all_graphs, all_trees, enumerate_connected_bipartite
from .census import (
    CensusRow,
    classify_instance,
    conjecture_sweep,
    run_census,
    ultra_roth_probe,
)

__version__ = "0.1.0"
