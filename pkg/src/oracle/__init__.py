from .checks import (
    check_centralizer_lifting,
    check_representability,
    deformation_count,
    emitted_ring,
    tangent_dimension,
    tangent_report,
)
from .equivalence import (
    StrictEquivClass,
    commutant_basis,
    count_strict_classes,
    group_order,
    stabilizer_dimension,
    strict_equiv_classes,
)
from .lifts import LiftCandidate, enumerate_lifts, free_parameters

__all__ = [
    "LiftCandidate",
    "StrictEquivClass",
    "check_centralizer_lifting",
    "check_representability",
    "commutant_basis",
    "count_strict_classes",
    "deformation_count",
    "emitted_ring",
    "enumerate_lifts",
    "free_parameters",
    "group_order",
    "stabilizer_dimension",
    "strict_equiv_classes",
    "tangent_dimension",
    "tangent_report",
]
