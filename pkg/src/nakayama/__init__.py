from .algebra import (
    NakayamaSpec,
    ThetaProfile,
    UniserialModule,
    ar_distance,
    cyclic,
    decompose_ell,
    normalize_module,
    syzygy,
    theta,
)
from .homological import (
    ext1_dim,
    ext1_report,
    hom_dim,
    hom_dim_combinatorial,
    intertwiner_basis,
    projective_check,
    projective_factoring_dim,
    socle_vertices,
    stable_hom_dim,
    syzygy_by_linear_algebra,
)
from .representation import (
    MatrixRep,
    block_order,
    block_slices,
    build_rho,
    chain_representation,
    commutator_system,
    dual_number_strict_equivalence,
    uniserial_hom,
    verify_rep,
)
from .sequences import (
    ExtSequence,
    beta_map,
    build_ext_basis_sequences,
    derived_dual_number_lift,
    dual_number_lift,
    verify_dual_number_lifts_independent,
)

__all__ = [
    "ExtSequence",
    "MatrixRep",
    "NakayamaSpec",
    "ThetaProfile",
    "UniserialModule",
    "ar_distance",
    "beta_map",
    "block_order",
    "block_slices",
    "build_ext_basis_sequences",
    "build_rho",
    "chain_representation",
    "commutator_system",
    "cyclic",
    "decompose_ell",
    "derived_dual_number_lift",
    "dual_number_lift",
    "dual_number_strict_equivalence",
    "ext1_dim",
    "ext1_report",
    "hom_dim",
    "hom_dim_combinatorial",
    "intertwiner_basis",
    "normalize_module",
    "projective_check",
    "projective_factoring_dim",
    "socle_vertices",
    "stable_hom_dim",
    "syzygy",
    "syzygy_by_linear_algebra",
    "theta",
    "uniserial_hom",
    "verify_dual_number_lifts_independent",
    "verify_rep",
]
