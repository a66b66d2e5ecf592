"""pathlab: exact long-path/long-cycle toolkit for small graphs.

Core pieces: an exact longest-(x,y)-path and circumference solver,
block-level graph surgery with certified 2-connectivity postconditions,
the degree-shifting edge switch with path lifting, fan extraction from
cycle-complement components, extremal family generators, and a claim
verifier that sweeps corpora for counterexamples.
"""

from .connectivity import (
    BlockDecomposition,
    EndBlock,
    add_binding_vertex,
    connected_components,
    cut_components,
    decompose,
    end_block_anchors,
    is_separable,
    is_two_connected,
    join_to_end_blocks,
    remove_simplicial,
    two_cut_piece,
)
from .errors import CapacityError, Graph6Error, InvariantViolation, PathlabError
from .fan import (
    AttachmentGraph,
    Fan,
    attachment_graph,
    cycle_components,
    extract_fan,
    fan_implies_long_cycle,
    max_fan_edges,
    validate_fan,
)
from .families import LabeledFamily, alpha_family, hj_g1, hj_g2, sharpness_family
from .graph import (
    Graph,
    GraphBuilder,
    SequenceOrder,
    complement,
    count_high_degree,
    degree_sequence,
    disjoint_union,
    induced_subgraph,
    join,
    max_vertices,
    set_max_vertices,
    tau_compare,
)
from .graph6 import parse_graph6, serialize_graph6
from .kelmans import KelmansRecord, kelmans, lift_path, tau_increases
from .solver import (
    Cycle,
    Path,
    brute_oracle_row,
    brute_oracle_xy,
    circumference,
    has_cycle_at_least,
    has_xy_path_at_least,
    longest_cycle,
    longest_path,
    longest_path_length,
    longest_xy_path,
    xy_length_row,
)
from .verify import (
    GraphContext,
    SweepOptions,
    SweepResult,
    VerificationReport,
    ascending_degree_labeling,
    bermond_all_labelings,
    bermond_condition_holds,
    check_bermond,
    check_blw,
    check_bondy_jackson,
    check_conj_hj,
    check_conj_alpha,
    check_dirac,
    check_dirac_fan,
    check_eg_classic,
    check_fan_cycle,
    check_fan_theorem,
    check_feasible_count_lemma,
    check_fournier_fraisse,
    check_independent_path,
    check_main,
    check_one_exception,
    check_sigma,
    check_woodall,
    count_non_feasible,
    max_disjoint_paths_to_set,
    min_degree_sum_independent,
    min_max_degree_independent,
    run_single_check,
    sweep,
    vertex_connectivity_at_least,
)

__version__ = "0.1.0"
