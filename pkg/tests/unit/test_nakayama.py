# tests/unit/test_nakayama.py
import numpy as np
import pytest

from src.core.exceptions import (
    IndexOutOfRangeError,
    ProjectiveModuleError,
    UnsupportedModeError,
    ZeroModuleError,
)
from src.nakayama.algebra import (
    NakayamaSpec,
    ThetaProfile,
    ar_distance,
    decompose_ell,
    normalize_module,
    syzygy,
)
from src.nakayama.homological import (
    ext1_dim,
    ext1_report,
    hom_dim,
    projective_check,
    socle_vertices,
    stable_hom_dim,
    syzygy_by_linear_algebra,
)
from src.nakayama.representation import build_rho, chain_representation, uniserial_hom, verify_rep
from src.nakayama.sequences import (
    build_ext_basis_sequences,
    dual_number_lift,
    verify_dual_number_lifts_independent,
)

SMALL_SPECS = [NakayamaSpec(e, ell) for e in range(1, 4) for ell in range(2, 10)]


class TestNakayamaSpec:
    """Decomposition of ℓ and module bookkeeping"""

    def test_decompose(self):
        assert decompose_ell(3, 7) == (2, 1)
        assert decompose_ell(1, 5) == (5, 0)
        assert decompose_ell(4, 8) == (2, 0)

    def test_invalid_algebras(self):
        with pytest.raises(UnsupportedModeError):
            NakayamaSpec(0, 4)
        with pytest.raises(UnsupportedModeError):
            NakayamaSpec(2, 1)

    def test_module_bounds(self):
        spec = NakayamaSpec(2, 5)
        with pytest.raises(IndexOutOfRangeError):
            spec.module(3, 1)
        with pytest.raises(IndexOutOfRangeError):
            spec.module(1, 6)

    def test_modules_sorted(self):
        modules = NakayamaSpec(2, 4).modules()
        assert len(modules) == 8
        assert [m.key for m in modules] == sorted(m.key for m in modules)

    def test_theta_profile_total(self):
        for e in range(1, 9):
            for n in range(0, 9):
                for i in range(e):
                    assert ThetaProfile(e, n, i).total == n * e + i

    def test_str(self):
        assert str(NakayamaSpec(2, 5).module(1, 2)) == "N(2,5)(top=1, len=2)"


class TestSyzygyAndNormalization:
    """Ω, normalization and AR distance"""

    def test_syzygy_examples(self):
        omega = syzygy(NakayamaSpec(2, 5).module(1, 2))
        assert omega.key == (1, 3)
        assert syzygy(NakayamaSpec(1, 3).module(1, 1)).length == 2

    @pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
    def test_syzygy_twice_shifts_top_by_ell(self, spec):
        for V in spec.modules():
            if not V.is_projective:
                twice = syzygy(syzygy(V))
                assert twice.length == V.length
                assert twice.top == spec.vertex(V.top + spec.ell)
                assert ar_distance(syzygy(V)) == ar_distance(V)

    def test_syzygy_by_linear_algebra(self):
        for spec in (NakayamaSpec(2, 5), NakayamaSpec(3, 7), NakayamaSpec(2, 4)):
            for V in spec.modules():
                if not V.is_projective:
                    assert syzygy_by_linear_algebra(V) == syzygy(V)

    def test_projective_has_no_syzygy(self):
        with pytest.raises(ProjectiveModuleError):
            syzygy(NakayamaSpec(2, 5).module(1, 5))

    def test_normalize(self):
        W, applied, rotation = normalize_module(NakayamaSpec(2, 5).module(1, 4))
        assert W.length == 1 and applied

        W, applied, rotation = normalize_module(NakayamaSpec(2, 5).module(2, 2))
        assert W.top == 1 and rotation == 1 and not applied

        V = NakayamaSpec(3, 7).module(1, 3)
        assert normalize_module(V) == (V, False, 0)

    def test_half_length_not_replaced(self):
        W, applied, _ = normalize_module(NakayamaSpec(2, 6).module(1, 3))
        assert W.length == 3 and not applied

    def test_ar_distance(self):
        assert ar_distance(NakayamaSpec(3, 7).module(2, 1)) == 0
        assert ar_distance(NakayamaSpec(2, 6).module(1, 3)) == 2
        assert ar_distance(NakayamaSpec(2, 6).module(1, 5)) == 0


class TestRepresentations:
    """ρ_{n,i} on the block basis"""

    def test_rho_e2(self):
        rep = build_rho(NakayamaSpec(2, 5), 1, 0)
        assert np.array_equal(rep.field_arrows()[0], [[0, 0], [1, 0]])
        assert not np.any(rep.field_arrows()[1])

    def test_rho_e1(self):
        rep = build_rho(NakayamaSpec(1, 5), 2, 0)
        assert np.array_equal(rep.field_arrows()[0], [[0, 0], [1, 0]])

    def test_rho_n0(self):
        rep = build_rho(NakayamaSpec(3, 7), 0, 2)
        assert np.array_equal(rep.field_arrows()[0], [[0, 0], [1, 0]])
        assert not np.any(rep.field_arrows()[1])

    @pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
    def test_rho_satisfies_relations(self, spec):
        for n in range(0, spec.ell // spec.e + 1):
            for i in range(spec.e):
                if 0 < n * spec.e + i <= spec.ell:
                    assert verify_rep(build_rho(spec, n, i)).passed

    def test_projective_rep(self):
        assert verify_rep(chain_representation(NakayamaSpec(2, 5).module(2, 5))).passed

    def test_perturbed_rep_fails(self):
        rep = chain_representation(NakayamaSpec(1, 3).module(1, 3))
        rep.arrow_mats[0][0, 2, 0] = 1
        report = verify_rep(rep)
        assert not report.passed
        assert any("path of length 3" in check.name for check in report.failures())

    def test_zero_module(self):
        with pytest.raises(ZeroModuleError):
            build_rho(NakayamaSpec(2, 5), 0, 0)


class TestHomological:
    """Hom and Ext^1 dimensions, socles of projectives"""

    def test_hom_examples(self):
        spec = NakayamaSpec(2, 5)
        V = spec.module(1, 2)
        assert hom_dim(syzygy(V), V) == 1
        assert hom_dim(V, V) >= 1
        assert hom_dim(spec.module(1, 1), spec.module(2, 1)) == 0

    def test_stable_hom(self):
        V = NakayamaSpec(2, 5).module(1, 2)
        assert stable_hom_dim(syzygy(V), V) == V.n == 1
        assert stable_hom_dim(V, V.spec.projective(1)) == 0

    def test_uniserial_hom(self):
        spec = NakayamaSpec(2, 5)
        P = spec.projective(1)
        V = spec.module(1, 2)
        projection = uniserial_hom(P, V, 0)
        assert projection.shape == (2, 5)
        assert np.array_equal(projection[:, :2], np.eye(2, dtype=np.int64))
        assert not np.any(projection[:, 2:])
        with pytest.raises(IndexOutOfRangeError):
            uniserial_hom(spec.module(1, 1), V, 1)

    def test_ext1(self):
        assert ext1_dim(NakayamaSpec(2, 5).module(1, 2)) == 1
        assert ext1_dim(NakayamaSpec(3, 9).module(1, 2)) == 0
        assert ext1_dim(NakayamaSpec(1, 7).module(1, 3)) == 3

    def test_ext1_projective(self):
        with pytest.raises(ProjectiveModuleError):
            ext1_dim(NakayamaSpec(2, 5).module(1, 5))

    @pytest.mark.parametrize("spec", [NakayamaSpec(2, 5), NakayamaSpec(3, 8), NakayamaSpec(1, 6)], ids=str)
    def test_ext1_report(self, spec):
        for V in spec.modules():
            if not V.is_projective:
                assert ext1_report(V).passed

    def test_socles(self):
        assert all(projective_check(NakayamaSpec(3, 7)).checks[k].passed for k in range(3))
        assert socle_vertices(NakayamaSpec(2, 4).projective(1)) == [2]
        assert socle_vertices(NakayamaSpec(1, 4).projective(1)) == [1]

    def test_symmetric(self):
        assert NakayamaSpec(3, 7).is_symmetric
        assert not NakayamaSpec(2, 4).is_symmetric
        assert projective_check(NakayamaSpec(2, 4)).passed


class TestExtensionSequences:
    """The basis extensions and their dual-number lifts"""

    @pytest.mark.parametrize("e,ell,length", [(2, 5, 2), (1, 6, 3), (3, 9, 4), (2, 9, 4)])
    def test_sequences_verify(self, e, ell, length):
        V = NakayamaSpec(e, ell).module(1, length)
        for s in range(1, V.n + 1):
            report = build_ext_basis_sequences(V, s).verify()
            assert report.passed, report.failures()

    def test_lift_reduces_to_rho(self):
        spec = NakayamaSpec(2, 9)
        lift = dual_number_lift(spec, 2, 0, 1)
        assert lift.residue() == build_rho(spec, 2, 0)

    def test_lifts_independent(self):
        for p in (2, 3):
            assert verify_dual_number_lifts_independent(NakayamaSpec(1, 7).module(1, 3), p).passed

    def test_s_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            dual_number_lift(NakayamaSpec(2, 5), 1, 0, 2)
