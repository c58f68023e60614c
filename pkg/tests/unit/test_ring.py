# tests/unit/test_ring.py
import numpy as np
import pytest

from src.core.exceptions import (
    DimensionMismatchError,
    NotArtinianError,
    ResourceCapError,
    UnsupportedModeError,
)
from src.deformation.presentation import presentation_for, trivial_presentation
from src.nakayama.algebra import NakayamaSpec
from src.ring.artin import ArtinTestRing, SmallExtensionFactory, TestRingFactory
from src.ring.coefficients import CoefficientDomainFactory
from src.ring.homs import count_homs, evaluate
from src.ring.polynomial import TruncatedRing, poly_add, poly_mul
from src.ring.quotient import (
    IdealBasis,
    QuotientModelBuilder,
    build_quotient_model,
    ideal_equal,
    ideal_membership,
    quotient_dimension_stabilized,
)


@pytest.fixture
def gf2():
    return CoefficientDomainFactory.prime_field(2)


@pytest.fixture
def ring2(gf2):
    return TruncatedRing(2, 6, gf2)


class TestCoefficients:
    """Coefficient modes and labels"""

    def test_labels(self):
        assert CoefficientDomainFactory.integers().label == "ZZ"
        assert CoefficientDomainFactory.rationals().label == "QQ"
        assert CoefficientDomainFactory.prime_field(3).label == "GF(3)"

    def test_from_label(self):
        assert CoefficientDomainFactory.from_label("GF(5)").p == 5
        assert CoefficientDomainFactory.from_label("qq").is_field
        assert not CoefficientDomainFactory.from_label("ZZ").is_field

    def test_prime_field_reduces(self, gf2):
        assert gf2.to_python(gf2.element(3)) == 1
        assert gf2.to_python(gf2.element(-1)) == 1

    def test_non_prime_rejected(self):
        with pytest.raises(UnsupportedModeError):
            CoefficientDomainFactory.prime_field(4)

    def test_unknown_mode(self):
        with pytest.raises(UnsupportedModeError):
            CoefficientDomainFactory.create("reals")
        assert set(CoefficientDomainFactory.get_available_modes()) >= {"zz", "qq", "gf"}


class TestTruncatedPolynomial:
    """Arithmetic and text form of truncated polynomials"""

    def test_additive_inverse(self):
        R = TruncatedRing(2, 6, CoefficientDomainFactory.integers())
        t1 = R.variable(1)
        assert (t1 + (-t1)).is_zero

    def test_disjoint_sum(self):
        R = TruncatedRing(2, 6, CoefficientDomainFactory.integers())
        t1, t2 = R.variable(1), R.variable(2)
        total = (t2 + t1 ** 2) + t1 * t2
        assert total.terms() == {(0, 1): 1, (2, 0): 1, (1, 1): 1}

    def test_characteristic_two(self, ring2):
        t1 = ring2.variable(1)
        assert (t1 + t1).is_zero

    def test_products_and_truncation(self):
        R = TruncatedRing(2, 3, CoefficientDomainFactory.integers())
        t1, t2 = R.variable(1), R.variable(2)
        assert (t1 * t2).terms() == {(1, 1): 1}
        assert (t1 * t1 ** 2).is_zero

        R4 = R.with_degree_bound(5)
        t1, t2 = R4.variable(1), R4.variable(2)
        assert ((t2 + t1 ** 2) * t1).terms() == {(1, 1): 1, (3, 0): 1}

    def test_ring_axioms_on_samples(self):
        R = TruncatedRing(2, 7, CoefficientDomainFactory.integers())
        t1, t2 = R.variable(1), R.variable(2)
        a = t1 + 2 * t2 + R.one()
        b = t1 * t2 - t2 ** 2
        c = 3 * t1 ** 2 + t2
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    def test_mismatched_rings(self):
        R = TruncatedRing(2, 5, CoefficientDomainFactory.integers())
        S = R.with_degree_bound(6)
        with pytest.raises(DimensionMismatchError):
            R.variable(1) + S.variable(1)

    def test_zero_degree(self, ring2):
        assert ring2.zero().degree() == float("-inf")
        assert ring2.zero().to_text() == "0"

    def test_text_form(self):
        R = TruncatedRing(2, 8, CoefficientDomainFactory.integers(), (1, 2))
        t1, t2 = R.variable(1), R.variable(2)
        assert (t1 ** 2 * t2 + t2 ** 2).to_text() == "t2^2 + t1^2*t2"
        assert (t1 ** 3 + 2 * t1 * t2).to_text() == "2*t1*t2 + t1^3"
        assert (t2 - t1 ** 2).to_text() == "t2 - t1^2"

    def test_weighted_truncation(self):
        R = TruncatedRing(2, 4, CoefficientDomainFactory.integers(), (1, 2))
        assert R.variable(2) ** 2 == R.zero()
        assert not (R.variable(1) ** 3).is_zero

    def test_functional_forms(self):
        R = TruncatedRing(2, 6, CoefficientDomainFactory.integers())
        t1, t2 = R.variable(1), R.variable(2)
        assert poly_add(t1, t2) == t1 + t2
        assert poly_mul(t1 + t2, t1 - t2) == t1 ** 2 - t2 ** 2


class TestQuotientModel:
    """Quotient models, membership and ideal comparison"""

    def test_principal_monomial_ideal(self, gf2):
        R = TruncatedRing(1, 5, gf2)
        ideal = IdealBasis.generated_by([R.variable(1) ** 2])
        model = build_quotient_model(ideal, 5, gf2)
        assert model.standard_monomials == [(0,), (1,)]
        assert model.dimension == 2
        assert ideal_membership(R.variable(1) ** 3, model)
        assert not ideal_membership(R.variable(1), model)

    def test_non_monomial_ideal(self, ring2, gf2):
        t1, t2 = ring2.variable(1), ring2.variable(2)
        ideal = IdealBasis.generated_by([t1 * t2, t2 + t1 ** 2])
        model = build_quotient_model(ideal, 6, gf2)
        assert model.dimension == 3
        assert model.standard_monomials == [(0, 0), (1, 0), (2, 0)]
        assert model.contains(t1 ** 3)

    def test_maximal_ideal(self, ring2, gf2):
        ideal = IdealBasis.generated_by([ring2.variable(1), ring2.variable(2)])
        for D in (2, 4, 6):
            assert build_quotient_model(ideal, D, gf2).dimension == 1

    def test_normal_form_idempotent(self, ring2, gf2):
        t1, t2 = ring2.variable(1), ring2.variable(2)
        model = build_quotient_model(IdealBasis.generated_by([t1 * t2, t2 + t1 ** 2]), 6, gf2)
        for m in ring2.monomials_below():
            once = model.normal_form(ring2.monomial(m))
            assert model.normal_form(once) == once

    def test_integer_mode_rejected(self):
        R = TruncatedRing(1, 4, CoefficientDomainFactory.integers())
        ideal = IdealBasis.generated_by([R.variable(1) ** 2])
        with pytest.raises(UnsupportedModeError):
            build_quotient_model(ideal, 4, CoefficientDomainFactory.integers())

    def test_ideal_equal(self, gf2):
        R = TruncatedRing(1, 6, gf2)
        t = R.variable(1)
        assert ideal_equal(IdealBasis.generated_by([t ** 2]), IdealBasis.generated_by([t ** 2, t ** 3]), 6, gf2)
        assert not ideal_equal(IdealBasis.generated_by([t]), IdealBasis.generated_by([t ** 2]), 6, gf2)

    def test_stabilization(self, gf2):
        R = TruncatedRing(1, 8, gf2)
        dimension, witness = quotient_dimension_stabilized(IdealBasis.generated_by([R.variable(1) ** 3]), 2, 16, gf2)
        assert dimension == 3
        assert witness <= 4

        R2 = TruncatedRing(2, 8, gf2)
        t1, t2 = R2.variable(1), R2.variable(2)
        assert quotient_dimension_stabilized(IdealBasis.generated_by([t1 * t2, t2 + t1 ** 2]), 2, 16, gf2)[0] == 3
        assert quotient_dimension_stabilized(IdealBasis.generated_by([t1, t2]), 2, 16, gf2)[0] == 1

    def test_non_artinian_reported(self, gf2):
        R = TruncatedRing(2, 8, gf2)
        ideal = IdealBasis.generated_by([R.variable(1)])
        with pytest.raises(NotArtinianError) as info:
            quotient_dimension_stabilized(ideal, 2, 10, gf2)
        assert info.value.exit_code == 3

    def test_shared_builder_ignores_truncation(self, gf2):
        shallow = TruncatedRing(1, 4, gf2)
        deep = TruncatedRing(1, 9, gf2)
        first = QuotientModelBuilder.shared(IdealBasis.generated_by([shallow.variable(1) ** 3]), gf2)
        second = QuotientModelBuilder.shared(IdealBasis.generated_by([deep.variable(1) ** 3]), gf2)
        assert first is second
        assert first.build(6).dimension == 3


class TestArtinTestRings:
    """Catalog rings and small extensions"""

    @pytest.mark.parametrize("name", TestRingFactory.get_available_rings())
    def test_catalog_axioms(self, name):
        for p in (2, 3):
            assert TestRingFactory.create_ring(name, p).verify_axioms().passed

    def test_dimensions(self):
        assert TestRingFactory.create_ring("fp").dimension == 1
        assert TestRingFactory.create_ring("dual-numbers").dimension == 2
        assert TestRingFactory.create_ring("u3").dimension == 3
        assert TestRingFactory.create_ring("x2y2").dimension == 4

    def test_square_zero(self):
        assert TestRingFactory.create_ring("dual-numbers").is_square_zero
        assert TestRingFactory.create_ring("xy2").is_square_zero
        assert not TestRingFactory.create_ring("u3").is_square_zero

    def test_dual_number_arithmetic(self):
        R = TestRingFactory.create_ring("dual-numbers", 3)
        eps = R.element({"eps": 1})
        assert not np.any(R.multiply(eps, eps))
        assert len(R.maximal_ideal_elements()) == 3

    def test_from_quotient_model(self, gf2):
        R = TruncatedRing(1, 5, gf2)
        model = build_quotient_model(IdealBasis.generated_by([R.variable(1) ** 3]), 5, gf2)
        A = ArtinTestRing.from_quotient_model(model, name="cube")
        assert A.dimension == 3
        assert A.verify_axioms().passed
        t = A.element({"t1": 1})
        assert np.any(A.multiply(t, t))
        assert not np.any(A.multiply(t, A.multiply(t, t)))

    def test_unknown_ring(self):
        with pytest.raises(UnsupportedModeError):
            TestRingFactory.create_ring("octonions")

    @pytest.mark.parametrize("name", SmallExtensionFactory.get_available_extensions())
    def test_small_extensions_valid(self, name):
        assert SmallExtensionFactory.create_extension(name).validate().passed


class TestCountHoms:
    """Homomorphism counts from presentations into test rings"""

    def test_square_relation_into_dual_numbers(self):
        pres = presentation_for(NakayamaSpec(1, 2), 1, 0)
        assert count_homs(pres, TestRingFactory.create_ring("dual-numbers")) == 2

    def test_trivial_presentation(self):
        for name in ("fp", "dual-numbers", "u3"):
            assert count_homs(trivial_presentation(), TestRingFactory.create_ring(name)) == 1

    def test_cube_relation_into_u3(self):
        pres = presentation_for(NakayamaSpec(1, 3), 1, 0)
        assert count_homs(pres, TestRingFactory.create_ring("u3")) == 4

    def test_tangent_count(self):
        pres = presentation_for(NakayamaSpec(3, 13), 2, 0)
        for p in (2, 3):
            assert count_homs(pres, TestRingFactory.create_ring("dual-numbers", p)) == p ** 2

    def test_cap(self):
        pres = presentation_for(NakayamaSpec(3, 13), 2, 0)
        with pytest.raises(ResourceCapError):
            count_homs(pres, TestRingFactory.create_ring("u3"), cap=4)

    def test_evaluate(self):
        R = TestRingFactory.create_ring("u3")
        S = TruncatedRing(1, 4, CoefficientDomainFactory.integers())
        u = R.element({"u": 1})
        image = evaluate(S.variable(1) ** 2, u[None, :], R)
        assert np.array_equal(image, R.element({"u^2": 1}))
