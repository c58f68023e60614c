from .centralizer import CentralizerDescription, centralizer_structure, recipe_matrix
from .grid import GridResult, VerificationOptions, run_verification_grid, verify_case, verify_spec
from .lift import (
    UniversalLift,
    build_universal_lift,
    build_universal_lift_for,
    lift_over_smaller_ideal_fails,
    path_entries_ideal,
    specialize,
    verify_lift_relations,
    verify_minimality,
    verify_tangent_specializations,
)
from .presentation import (
    DeformationPresentation,
    loewy_length_two_case,
    m_v,
    presentation_for,
    trivial_presentation,
    udr_presentation,
)

__all__ = [
    "CentralizerDescription",
    "DeformationPresentation",
    "GridResult",
    "UniversalLift",
    "VerificationOptions",
    "build_universal_lift",
    "build_universal_lift_for",
    "centralizer_structure",
    "lift_over_smaller_ideal_fails",
    "loewy_length_two_case",
    "m_v",
    "path_entries_ideal",
    "presentation_for",
    "recipe_matrix",
    "run_verification_grid",
    "specialize",
    "trivial_presentation",
    "udr_presentation",
    "verify_case",
    "verify_lift_relations",
    "verify_minimality",
    "verify_spec",
    "verify_tangent_specializations",
]
