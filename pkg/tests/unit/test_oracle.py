# tests/unit/test_oracle.py
import pytest

from config.setting import settings
from src.core.exceptions import DimensionMismatchError, ResourceCapError
from src.core.models import LiftMethod
from src.deformation.presentation import udr_presentation
from src.nakayama.algebra import NakayamaSpec
from src.nakayama.representation import chain_representation
from src.oracle.checks import (
    check_centralizer_lifting,
    check_representability,
    deformation_count,
    emitted_ring,
    tangent_dimension,
    tangent_report,
)
from src.oracle.equivalence import count_strict_classes, group_order, stabilizer_dimension, strict_equiv_classes
from src.oracle.lifts import enumerate_lifts
from src.ring.artin import SmallExtensionFactory, TestRingFactory


@pytest.fixture
def dual():
    return TestRingFactory.create_ring("dual-numbers", 2)


@pytest.fixture
def u3():
    return TestRingFactory.create_ring("u3", 2)


def simple(e, ell):
    return NakayamaSpec(e, ell).module(1, 1)


class TestEnumerateLifts:
    """Lifts of field representations with pinned idempotents"""

    def test_simple_over_dual_numbers(self, dual):
        assert len(enumerate_lifts(chain_representation(simple(1, 2)), dual)) == 2
        assert len(enumerate_lifts(chain_representation(simple(1, 3)), dual)) == 2

    def test_trivial_ring(self):
        fp = TestRingFactory.create_ring("fp", 2)
        assert len(enumerate_lifts(chain_representation(simple(1, 3)), fp)) == 1

    def test_exhaustive_agrees_with_square_zero(self, dual):
        for V in (NakayamaSpec(2, 5).module(1, 2), NakayamaSpec(1, 4).module(1, 2)):
            base = chain_representation(V)
            linear = enumerate_lifts(base, dual, method=LiftMethod.SQUARE_ZERO_LINEAR)
            exhaustive = enumerate_lifts(base, dual, method=LiftMethod.EXHAUSTIVE)
            assert [lift.key for lift in linear] == [lift.key for lift in exhaustive]

    def test_workers_do_not_change_result(self, u3):
        base = chain_representation(NakayamaSpec(1, 4).module(1, 2))
        serial = enumerate_lifts(base, u3, workers=1)
        parallel = enumerate_lifts(base, u3, workers=2)
        assert [lift.key for lift in serial] == [lift.key for lift in parallel]

    def test_cap(self, u3):
        with pytest.raises(ResourceCapError) as info:
            enumerate_lifts(chain_representation(NakayamaSpec(1, 4).module(1, 2)), u3, cap=16)
        assert info.value.exit_code == 3

    def test_characteristic_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            enumerate_lifts(chain_representation(simple(1, 3), 2), TestRingFactory.create_ring("dual-numbers", 3))


class TestStrictEquivalence:
    """Orbits of lifts under conjugation by G⁰"""

    def test_one_dimensional(self, dual):
        lifts = enumerate_lifts(chain_representation(simple(1, 3)), dual)
        classes = strict_equiv_classes(lifts)
        assert len(classes) == len(lifts) == 2

    def test_stabilizer_of_one_dimensional_lift(self, dual):
        lifts = enumerate_lifts(chain_representation(simple(1, 3)), dual)
        assert all(stabilizer_dimension(lift) == 1 for lift in lifts)
        assert group_order(lifts[0]) == 2

    def test_conjugate_lifts_merge(self, dual):
        lifts = enumerate_lifts(chain_representation(NakayamaSpec(2, 5).module(1, 2)), dual)
        classes = strict_equiv_classes(lifts)
        assert len(lifts) == 4
        assert len(classes) == 2
        assert all(cls.orbit_size == 2 for cls in classes)

    def test_orbit_sizes_divide_group_order(self, u3):
        lifts = enumerate_lifts(chain_representation(NakayamaSpec(1, 4).module(1, 2)), u3)
        order = group_order(lifts[0])
        classes = strict_equiv_classes(lifts)
        assert all(order % cls.orbit_size == 0 for cls in classes)
        assert sum(cls.orbit_size for cls in classes) == len(lifts)

    def test_orbit_stabilizer_agrees(self, dual, u3):
        for R in (dual, u3):
            lifts = enumerate_lifts(chain_representation(NakayamaSpec(1, 4).module(1, 2)), R)
            assert count_strict_classes(lifts) == len(strict_equiv_classes(lifts))

    def test_group_cap(self, dual):
        lifts = enumerate_lifts(chain_representation(NakayamaSpec(1, 4).module(1, 2)), dual)
        with pytest.raises(ResourceCapError):
            strict_equiv_classes(lifts, max_group=2)
        assert deformation_count(lifts[0].base, dual)[0] == 4

    def test_representatives_sorted(self, dual):
        lifts = enumerate_lifts(chain_representation(NakayamaSpec(2, 5).module(1, 2)), dual)
        keys = [cls.key for cls in strict_equiv_classes(lifts)]
        assert keys == sorted(keys)


class TestRepresentability:
    """Deformation counts against homomorphism counts"""

    def test_cube_into_dual_numbers(self, dual):
        V = simple(1, 3)
        report = check_representability(V, udr_presentation(V), dual)
        assert report.passed
        assert report.observations["deformations"] == 2

    def test_cube_into_u3(self, u3):
        V = simple(1, 3)
        report = check_representability(V, udr_presentation(V), u3)
        assert report.passed
        assert report.observations["homomorphisms"] == 4

    def test_trivial_presentation(self, dual, u3):
        V = NakayamaSpec(3, 7).module(1, 2)
        for R in (dual, u3):
            report = check_representability(V, udr_presentation(V), R)
            assert report.passed
            assert report.observations["deformations"] == 1

    @pytest.mark.parametrize("name", ["dual-numbers", "u2", "xy2"])
    def test_two_vertex_case(self, name):
        V = NakayamaSpec(2, 5).module(1, 2)
        assert check_representability(V, udr_presentation(V), TestRingFactory.create_ring(name, 2)).passed

    def test_emitted_ring(self):
        V = NakayamaSpec(2, 5).module(1, 2)
        presentation = udr_presentation(V)
        R = emitted_ring(presentation)
        assert R.dimension == 2
        assert check_representability(V, presentation, R).passed

    def test_capped_orbit_enumeration_is_not_a_pass(self, dual, monkeypatch):
        monkeypatch.setattr(settings, "ORACLE_MAX_GROUP", 1)
        V = simple(1, 3)
        report = check_representability(V, udr_presentation(V), dual)
        assert "orbit enumeration agrees with orbit-stabilizer" not in [check.name for check in report.checks]
        assert report.observations["orbit_enumeration"].startswith("not run")
        assert report.observations["deformations"] == 2


class TestTangentDimension:
    """log_p |Def(V, k[ε])| = dim Ext^1(V, V)"""

    def test_examples(self):
        assert tangent_dimension(NakayamaSpec(2, 5).module(1, 2)) == 1
        assert tangent_dimension(NakayamaSpec(3, 7).module(1, 2)) == 0
        assert tangent_dimension(NakayamaSpec(1, 4).module(1, 2), 2) == 2

    def test_independent_of_prime(self):
        V = NakayamaSpec(1, 4).module(1, 2)
        assert tangent_dimension(V, 2) == tangent_dimension(V, 3)

    def test_report(self):
        assert tangent_report(NakayamaSpec(2, 6).module(2, 3)).passed
        projective = tangent_report(NakayamaSpec(2, 5).module(1, 5))
        assert projective.passed
        assert projective.observations["tangent_dimension"] == 0


class TestCentralizerLifting:
    """Centralizers of lifts surject along small extensions"""

    def test_one_dimensional(self):
        V = simple(1, 3)
        extension = SmallExtensionFactory.create_extension("u3->dual")
        assert check_centralizer_lifting(V, udr_presentation(V), extension).passed

    def test_onto_residue_field(self):
        extension = SmallExtensionFactory.create_extension("dual->fp")
        for V in (NakayamaSpec(2, 5).module(1, 2), NakayamaSpec(1, 4).module(1, 2)):
            assert check_centralizer_lifting(V, None, extension).passed

    def test_two_dimensional(self):
        V = NakayamaSpec(1, 4).module(1, 2)
        extension = SmallExtensionFactory.create_extension("u3->dual")
        report = check_centralizer_lifting(V, udr_presentation(V), extension)
        assert report.passed, report.failures()
        assert report.observations["presentation"] == "k[[t1,t2]]/(t2^2 + t1^2*t2, 2*t1*t2 + t1^3)"
