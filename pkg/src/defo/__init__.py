from .poly_matrix import PolyMatrix
from .structured import (
    HPolynomialTable,
    build_j_ideal,
    build_nn,
    build_nn_tilde,
    h_poly,
    h_table,
    integer_ring,
    matrix_power_closed_form,
    power_entries_ideal,
    verify_power_lemma,
    weighted_ring,
)

__all__ = [
    "HPolynomialTable",
    "PolyMatrix",
    "build_j_ideal",
    "build_nn",
    "build_nn_tilde",
    "h_poly",
    "h_table",
    "integer_ring",
    "matrix_power_closed_form",
    "power_entries_ideal",
    "verify_power_lemma",
    "weighted_ring",
]
