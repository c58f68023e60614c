from .artin import ArtinTestRing, SmallExtension, SmallExtensionFactory, TestRingFactory
from .coefficients import CoefficientDomain, CoefficientDomainFactory
from .homs import count_homs, evaluate
from .polynomial import (
    Monomial,
    TruncatedPolynomial,
    TruncatedRing,
    monomial_sort_key,
    monomials_of_weight,
    poly_add,
    poly_mul,
)
from .quotient import (
    IdealBasis,
    QuotientModel,
    QuotientModelBuilder,
    build_quotient_model,
    ideal_difference_witness,
    ideal_equal,
    ideal_membership,
    normal_form,
    quotient_dimension_stabilized,
)

__all__ = [
    "ArtinTestRing",
    "CoefficientDomain",
    "CoefficientDomainFactory",
    "IdealBasis",
    "Monomial",
    "QuotientModel",
    "QuotientModelBuilder",
    "SmallExtension",
    "SmallExtensionFactory",
    "TestRingFactory",
    "TruncatedPolynomial",
    "TruncatedRing",
    "build_quotient_model",
    "count_homs",
    "evaluate",
    "ideal_difference_witness",
    "ideal_equal",
    "ideal_membership",
    "monomial_sort_key",
    "monomials_of_weight",
    "normal_form",
    "poly_add",
    "poly_mul",
    "quotient_dimension_stabilized",
]
