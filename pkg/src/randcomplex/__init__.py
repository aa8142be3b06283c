"""Workbench for random 2-dimensional simplicial complexes.

Generation of G(n,p) graphs and Y(n,p) complexes, homology over
GF(2)/GF(q)/Q/Z, exact densest-subcomplex search with witnesses,
simple-connectivity and noncontractibility certificates, homotopy-type
classification of admissible complexes, and a Monte Carlo sweep harness.
"""

from .complexes import (
    FULL,
    ID3,
    Complex2,
    Graph,
    LoopWord,
    build_complex,
    connected_components,
    euler_characteristic,
    face_degree,
    induced_subcomplex,
    is_connected,
    length_L,
    link,
    link_intersection_graph,
    skeleton_graph,
    spanning_tree,
)
from .homology import (
    BettiProfile,
    BoundaryPair,
    SnfResult,
    betti,
    boundary_matrices,
    h1_integral,
    rank_gf2,
    rank_gfq,
    rank_rational,
    smith_normal_form,
)
from .randgen import (
    LinkPairStats,
    RngSpec,
    face_process_order,
    gen_Y,
    gen_Y_coupled,
    gen_graph,
    link_pair_statistics,
)
from .density import (
    DensityReport,
    SparsityVerdict,
    as_fraction,
    check_sparse,
    check_sparse3,
    density_e,
    density_e_w,
    enumerate_dense_prototypes,
    find_embedding,
    is_admissible,
    is_admissible_anchored,
    verify_dense_witness,
)
from .pi1 import (
    AreaBound,
    EvidenceReport,
    GroupPresentation,
    Id3Certificate,
    ScCertificate,
    area_search,
    certify_id3_noncontractible,
    certify_simply_connected,
    evidence_pi1_nontrivial,
    presentation,
)
from .classify import (
    BoundReport,
    ComponentType,
    HomotopyType,
    collapse_core,
    homotopy_type,
    popped_bound_check,
)
from .sweep import SweepConfig, load_config, plot, run_sweep, wilson_interval

__version__ = "0.1.0"

__all__ = [
    "FULL",
    "ID3",
    "Complex2",
    "Graph",
    "LoopWord",
    "build_complex",
    "connected_components",
    "euler_characteristic",
    "face_degree",
    "induced_subcomplex",
    "is_connected",
    "length_L",
    "link",
    "link_intersection_graph",
    "skeleton_graph",
    "spanning_tree",
    "BettiProfile",
    "BoundaryPair",
    "SnfResult",
    "betti",
    "boundary_matrices",
    "h1_integral",
    "rank_gf2",
    "rank_gfq",
    "rank_rational",
    "smith_normal_form",
    "LinkPairStats",
    "RngSpec",
    "face_process_order",
    "gen_Y",
    "gen_Y_coupled",
    "gen_graph",
    "link_pair_statistics",
    "DensityReport",
    "SparsityVerdict",
    "as_fraction",
    "check_sparse",
    "check_sparse3",
    "density_e",
    "density_e_w",
    "enumerate_dense_prototypes",
    "find_embedding",
    "is_admissible",
    "is_admissible_anchored",
    "verify_dense_witness",
    "AreaBound",
    "EvidenceReport",
    "GroupPresentation",
    "Id3Certificate",
    "ScCertificate",
    "area_search",
    "certify_id3_noncontractible",
    "certify_simply_connected",
    "evidence_pi1_nontrivial",
    "presentation",
    "BoundReport",
    "ComponentType",
    "HomotopyType",
    "collapse_core",
    "homotopy_type",
    "popped_bound_check",
    "SweepConfig",
    "load_config",
    "plot",
    "run_sweep",
    "wilson_interval",
    "__version__",
]
