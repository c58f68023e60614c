# tests/unit/test_defo.py
import pytest

from src.core.exceptions import IndexOutOfRangeError
from src.defo.poly_matrix import PolyMatrix
from src.defo.structured import (
    build_j_ideal,
    build_nn,
    build_nn_tilde,
    h_poly,
    integer_ring,
    matrix_power_closed_form,
    power_entries_ideal,
    verify_power_lemma,
    weighted_ring,
)
from src.ring.coefficients import CoefficientDomainFactory
from src.ring.quotient import ideal_equal


class TestStructuredMatrices:
    """N_n and Ñ_n"""

    def test_nn_small(self):
        assert build_nn(1).to_text() == [["t1"]]
        assert build_nn(2).to_text() == [["0", "t2"], ["1", "t1"]]

    def test_nn_three(self):
        assert build_nn(3).to_text() == [
            ["0", "0", "t3"],
            ["1", "0", "t2"],
            ["0", "1", "t1"],
        ]

    def test_nn_tilde(self):
        assert build_nn_tilde(1).to_text() == [["0", "0"], ["1", "t1"]]
        assert build_nn_tilde(2).to_text() == [
            ["0", "0", "0"],
            ["1", "0", "t2"],
            ["0", "1", "t1"],
        ]

    def test_zero_order_rejected(self):
        with pytest.raises(IndexOutOfRangeError):
            build_nn(0)


class TestHPolynomials:
    """The h_{a,ν} recursion"""

    def test_base_values(self):
        assert h_poly(1, 1, 0).to_text() == "1"
        assert h_poly(2, 2, 0).is_zero
        assert h_poly(2, 2, 1).to_text() == "1"

    def test_small_values(self):
        assert h_poly(2, 2, 3).to_text() == "t2 + t1^2"
        assert h_poly(2, 1, 3).to_text() == "t1*t2"
        assert h_poly(2, 1, 4).to_text() == "t2^2 + t1^2*t2"
        assert h_poly(2, 2, 4).to_text() == "2*t1*t2 + t1^3"

    def test_one_variable(self):
        for m in range(1, 6):
            assert h_poly(1, 1, m).terms() == {(m,): 1}

    def test_homogeneous_weight(self):
        for nu in range(1, 9):
            for a in range(1, 4):
                h = h_poly(3, a, nu)
                if not h.is_zero:
                    assert h.homogeneous_weight() == nu - a + 1

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            h_poly(2, 3, 1)
        with pytest.raises(IndexOutOfRangeError):
            h_poly(2, 1, -1)


class TestPowerLemma:
    """Closed form of N_n powers and the characteristic identities"""

    def test_closed_form_first_power(self):
        ring = integer_ring(2, 4)
        assert matrix_power_closed_form(2, 1, ring) == build_nn(2, ring)

    def test_closed_form_square(self):
        assert matrix_power_closed_form(2, 2).to_text() == [["t2", "t1*t2"], ["t1", "t2 + t1^2"]]

    def test_matches_direct_powers(self):
        ring = integer_ring(3, 9)
        N = build_nn(3, ring)
        power = PolyMatrix.identity(ring, 3)
        for nu in range(1, 7):
            power = power @ N
            assert matrix_power_closed_form(3, nu, ring) == power

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_verify_power_lemma(self, n):
        report = verify_power_lemma(n, 8)
        assert report.passed, report.failures()
        assert report.observations["h_nonnegative_coefficients"]


class TestJIdeals:
    """J_n(m) from the first column of N_n^m"""

    def test_one_variable(self):
        assert build_j_ideal(1, 3).text() == ["t1^3"]

    def test_two_variables(self):
        assert build_j_ideal(2, 3).text() == ["t1*t2", "t2 + t1^2"]
        assert build_j_ideal(2, 4).text() == ["t2^2 + t1^2*t2", "2*t1*t2 + t1^3"]

    def test_zero_ideal_of_k(self):
        assert build_j_ideal(0, 5).is_zero_ideal_of_k

    @pytest.mark.parametrize("n,m", [(1, 4), (2, 3), (2, 5), (3, 4), (3, 6)])
    def test_equals_all_power_entries(self, n, m):
        field = CoefficientDomainFactory.prime_field(3)
        assert ideal_equal(build_j_ideal(n, m), power_entries_ideal(n, m), m + n + 2, field)

    def test_weighted_ring_is_homogeneous(self):
        assert build_j_ideal(3, 5, weighted_ring(3, 6)).is_homogeneous()
