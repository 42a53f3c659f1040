"""(i,j)-step competition graphs, specialised to bipartite tournaments."""

from .competition import (
    EdgeWitness,
    StepParams,
    c12_fast,
    competes,
    competition_graph,
    explain_edge,
    one_two_competes,
    step_competition_graph,
)
from .constructors import (
    UnsupportedParameters,
    complete_c12_witness,
    cover_to_orientation,
    disjoint_union_witness,
    fig2_witness,
    min_edge_witness,
    pair_k10_k5_witness,
    star_witness,
)
from .graphs import (
    BipartiteTournament,
    Digraph,
    SimpleGraph,
    bt_from_digraph,
    bt_from_matrix,
    bt_to_digraph,
)
from .iso import are_isomorphic, canonical_form, find_isomorphism
from .realizability import (
    Budget,
    CliqueCover,
    RealizabilityAnswer,
    find_clique_cover,
    is_c12_realizable,
    is_competition_realizable_pair,
)
from .structure import ComponentShape, classify_shape, diameter, has_edge_sharing_cycles, has_edge_sharing_triangles
from .verify import (
    EnumerationSpec,
    VerificationReport,
    enumerate_orientations,
    extremal_edge_counts,
    tree_census,
    verify_component_theorem,
    verify_diameter_theorem,
    verify_invariant_suite,
)

__version__ = "0.1.0"
