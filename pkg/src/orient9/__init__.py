"""Modular orientations, circular flows, and odd-cycle homomorphisms.

A verification and construction toolkit for plane (optionally signed)
multigraphs: Z_k-boundary orientation solvers with exact dynamic programs,
strong-connectivity variants, homomorphism search to odd cycles with the
planar-dual flow correspondence, partition-weight machinery, a reducible-
configuration catalog with detection and lifting, face discharging in exact
rational arithmetic, and a certificate-emitting command line.  Everything a
search returns is re-checkable by an independent verifier in this package,
and the randomized acceptance suite behind ``orient9 verify-paper`` pins the
brute-forceable facts the design rests on.
"""

from ._caps import Caps, DEFAULT_CAPS, caps_from_env
from .errors import CapExceeded, FalsificationEvent, InvalidInput, Orient9Error
from .graph import (
    ContractionResult,
    Edge,
    Multigraph,
    contract_partition,
    contract_subset,
    edge_connectivity,
    odd_edge_connectivity,
    odd_girth,
)
from .embedding import (
    DualResult,
    Face,
    PlaneEmbedding,
    add_chord,
    add_parallel_edge,
    dual,
    embed_cycle,
    embed_cycle_multigraph,
    embed_two_vertex,
    subdivide_edge,
)
from .families import alpha_k2, cycle_multigraph, pentagon, quad, triangle
from .partitions import (
    GAP_THRESHOLDS,
    DEFAULT_WEIGHTS,
    FamilyTag,
    GoodnessReport,
    Partition,
    RefinementIdentity,
    WeightConstants,
    classify_family,
    is_N_good,
    is_S_good,
    iter_partitions,
    min_weight,
    partition_bound_check,
    refinement_identity,
    weight_of_partition,
)
from .orientations import (
    AchievableSet,
    Orientation,
    PcBoundary,
    ScReport,
    SzReport,
    ZkBoundary,
    achievable_boundaries,
    check_zk_orientation,
    find_sc_orientation,
    find_zk_orientation,
    is_in_SC,
    is_strongly_zk_connected,
    is_weakly_contractible,
    modular_orientation,
    pc_boundaries,
)
from .homomorphism import HomResult, check_hom, find_homomorphism, gadget
from .flows import (
    UnsignedCircularFlow,
    dual_flow_to_hom,
    flow_to_orientation,
    hom_to_dual_flow,
    orientation_to_flow,
)
from .signedgraphs import (
    SignedCircularFlow,
    SignedFlowCertificate,
    SignedGraph,
    boundary_from_signature,
    build_signed_flow,
    double_graph,
    find_tight_cut,
    signed_flow_pipeline,
    verify_signed_flow,
)
from .configurations import CATALOG, ConfigMatch, ConfigPattern, detect_config, pattern_by_name
from .reduction import (
    DEFAULT_SOLVE,
    SCALED_SOLVE,
    ReductionCertificate,
    SolveConstants,
    solve_modular_9,
    theorem_1_12_witness,
    zhang_split,
)
from .discharging import (
    CHARGE_DENOMINATOR,
    TARGET_CHARGE,
    ChargeLedger,
    DeficiencyReport,
    FaceClass,
    apply_rules,
    case_table_verify,
    classify_faces,
    euler_density_check,
    t444_exclusion_check,
    verdict,
    weak_adjacency_map,
    weakly_adjacent,
)
from .formats import (
    ParsedModel,
    model_json,
    parse_boundary,
    parse_model,
    parse_model_file,
    parse_rotation,
    serialize_model,
    to_dot,
)
from .verify import ItemReport, SuiteReport, run_verify_paper

__version__ = "0.1.0"

__all__ = [
    "Caps",
    "DEFAULT_CAPS",
    "caps_from_env",
    "CapExceeded",
    "FalsificationEvent",
    "InvalidInput",
    "Orient9Error",
    "ContractionResult",
    "Edge",
    "Multigraph",
    "contract_partition",
    "contract_subset",
    "edge_connectivity",
    "odd_edge_connectivity",
    "odd_girth",
    "DualResult",
    "Face",
    "PlaneEmbedding",
    "add_chord",
    "add_parallel_edge",
    "dual",
    "embed_cycle",
    "embed_cycle_multigraph",
    "embed_two_vertex",
    "subdivide_edge",
    "alpha_k2",
    "cycle_multigraph",
    "pentagon",
    "quad",
    "triangle",
    "GAP_THRESHOLDS",
    "DEFAULT_WEIGHTS",
    "FamilyTag",
    "GoodnessReport",
    "Partition",
    "RefinementIdentity",
    "WeightConstants",
    "classify_family",
    "is_N_good",
    "is_S_good",
    "iter_partitions",
    "min_weight",
    "partition_bound_check",
    "refinement_identity",
    "weight_of_partition",
    "AchievableSet",
    "Orientation",
    "PcBoundary",
    "ScReport",
    "SzReport",
    "ZkBoundary",
    "achievable_boundaries",
    "check_zk_orientation",
    "find_sc_orientation",
    "find_zk_orientation",
    "is_in_SC",
    "is_strongly_zk_connected",
    "is_weakly_contractible",
    "modular_orientation",
    "pc_boundaries",
    "HomResult",
    "check_hom",
    "find_homomorphism",
    "gadget",
    "UnsignedCircularFlow",
    "dual_flow_to_hom",
    "flow_to_orientation",
    "hom_to_dual_flow",
    "orientation_to_flow",
    "SignedCircularFlow",
    "SignedFlowCertificate",
    "SignedGraph",
    "boundary_from_signature",
    "build_signed_flow",
    "double_graph",
    "find_tight_cut",
    "signed_flow_pipeline",
    "verify_signed_flow",
    "CATALOG",
    "ConfigMatch",
    "ConfigPattern",
    "detect_config",
    "pattern_by_name",
    "DEFAULT_SOLVE",
    "SCALED_SOLVE",
    "ReductionCertificate",
    "SolveConstants",
    "solve_modular_9",
    "theorem_1_12_witness",
    "zhang_split",
    "CHARGE_DENOMINATOR",
    "TARGET_CHARGE",
    "ChargeLedger",
    "DeficiencyReport",
    "FaceClass",
    "apply_rules",
    "case_table_verify",
    "classify_faces",
    "euler_density_check",
    "t444_exclusion_check",
    "verdict",
    "weak_adjacency_map",
    "weakly_adjacent",
    "ParsedModel",
    "model_json",
    "parse_boundary",
    "parse_model",
    "parse_model_file",
    "parse_rotation",
    "serialize_model",
    "to_dot",
    "ItemReport",
    "SuiteReport",
    "run_verify_paper",
    "__version__",
]
