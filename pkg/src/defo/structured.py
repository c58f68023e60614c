"""The companion-type matrices N_n and Ñ_n, the polynomials h_{a,ν} and the ideals J_n(m).

N_n has first row (0, ..., 0, t_n); below it sits I_{n-1} on the left and the
column (t_{n-1}, ..., t_1) on the right. Ñ_n is N_{n+1} with t_{n+1} set to 0.
The first column of (N_n)^ν is (h_{1,ν}, ..., h_{n,ν}), where

    h_{1,0} = 1,  h_{a,0} = 0 (a >= 2)
    h_{1,ν} = t_n h_{n,ν-1}
    h_{a,ν} = h_{a-1,ν-1} + t_{n-a+1} h_{n,ν-1}      (a >= 2)

With variable weights w(t_j) = j every h_{a,ν} is homogeneous of weight ν - a + 1.
"""

from functools import lru_cache
from typing import Dict, List, Optional

from src.core.exceptions import IndexOutOfRangeError
from src.core.log import get_logger
from src.core.models import VerificationReport
from src.defo.poly_matrix import PolyMatrix
from src.ring.coefficients import CoefficientDomain, CoefficientDomainFactory
from src.ring.polynomial import TruncatedPolynomial, TruncatedRing, weighted_degree
from src.ring.quotient import IdealBasis

logger = get_logger(__name__)


def integer_ring(n: int, degree_bound: int) -> TruncatedRing:
    """ZZ[t1..tn] truncated at total degree"""
    return TruncatedRing(n, degree_bound, CoefficientDomainFactory.integers())


def weighted_ring(n: int, degree_bound: int, coefficients: Optional[CoefficientDomain] = None) -> TruncatedRing:
    """k[t1..tn] with w(t_j) = j, the grading under which J_n(m) is homogeneous"""
    return TruncatedRing(
        n, degree_bound, coefficients or CoefficientDomainFactory.integers(), tuple(range(1, n + 1))
    )


def _require_order(n: int):
    if n < 1:
        raise IndexOutOfRangeError(f"N_n needs n >= 1, got {n}; J_0 is the zero ideal of k")


def _companion(size: int, ring: TruncatedRing, top_variable: bool) -> PolyMatrix:
    # column `size` holds (t_size, t_{size-1}, ..., t_1) top to bottom; t_size dropped for Ñ
    entries = [[ring.zero() for _ in range(size)] for _ in range(size)]
    for r in range(size):
        if r >= 1:
            entries[r][r - 1] = ring.one()
        variable = size - r
        if r == 0 and not top_variable:
            continue
        entries[r][size - 1] = entries[r][size - 1] + ring.variable(variable)
    return PolyMatrix(ring, entries)


def build_nn(n: int, ring: Optional[TruncatedRing] = None) -> PolyMatrix:
    _require_order(n)
    ring = ring or integer_ring(n, n + 2)
    if ring.n < n:
        raise IndexOutOfRangeError(f"N_{n} needs {n} variables, ring has {ring.n}")
    return _companion(n, ring, top_variable=True)


def build_nn_tilde(n: int, ring: Optional[TruncatedRing] = None) -> PolyMatrix:
    """(n+1)x(n+1): N_{n+1} with t_{n+1} -> 0, so only t_1..t_n occur"""
    _require_order(n)
    ring = ring or integer_ring(n, n + 3)
    if ring.n < n:
        raise IndexOutOfRangeError(f"Ñ_{n} needs {n} variables, ring has {ring.n}")
    return _companion(n + 1, ring, top_variable=False)


class HPolynomialTable:
    """Memoized values h_{a,ν} for one ring, grown on demand"""

    def __init__(self, ring: TruncatedRing):
        _require_order(ring.n)
        self.ring = ring
        self.n = ring.n
        self._columns: List[List[TruncatedPolynomial]] = [
            [ring.one() if a == 1 else ring.zero() for a in range(1, self.n + 1)]
        ]

    @property
    def max_nu(self) -> int:
        return len(self._columns) - 1

    def extend_to(self, nu: int) -> "HPolynomialTable":
        n, ring = self.n, self.ring
        while self.max_nu < nu:
            previous = self._columns[-1]
            last = previous[n - 1]
            column = [ring.variable(n) * last]
            for a in range(2, n + 1):
                column.append(previous[a - 2] + ring.variable(n - a + 1) * last)
            self._columns.append(column)
        return self

    def value(self, a: int, nu: int) -> TruncatedPolynomial:
        if not 1 <= a <= self.n:
            raise IndexOutOfRangeError(f"h index a={a} outside 1..{self.n}")
        if nu < 0:
            raise IndexOutOfRangeError(f"h index ν={nu} must be >= 0")
        self.extend_to(nu)
        return self._columns[nu][a - 1]

    def column(self, nu: int) -> List[TruncatedPolynomial]:
        return [self.value(a, nu) for a in range(1, self.n + 1)]

    @property
    def values(self) -> Dict[tuple, TruncatedPolynomial]:
        return {(a, nu): self._columns[nu][a - 1] for nu in range(self.max_nu + 1) for a in range(1, self.n + 1)}


@lru_cache(maxsize=256)
def h_table(ring: TruncatedRing) -> HPolynomialTable:
    return HPolynomialTable(ring)


def h_poly(n: int, a: int, nu: int, ring: Optional[TruncatedRing] = None) -> TruncatedPolynomial:
    _require_order(n)
    if not 1 <= a <= n:
        raise IndexOutOfRangeError(f"h index a={a} outside 1..{n}")
    if nu < 0:
        raise IndexOutOfRangeError(f"h index ν={nu} must be >= 0")
    ring = ring or weighted_ring(n, nu + 1)
    return h_table(ring).value(a, nu)


def matrix_power_closed_form(n: int, nu: int, ring: Optional[TruncatedRing] = None) -> PolyMatrix:
    """The n x n matrix with (a, b) entry h_{a, ν+b-1}"""
    _require_order(n)
    if nu < 1:
        raise IndexOutOfRangeError(f"closed form needs ν >= 1, got {nu}")
    ring = ring or integer_ring(n, nu + 2)
    table = h_table(ring)
    return PolyMatrix(ring, [[table.value(a, nu + b - 1) for b in range(1, n + 1)] for a in range(1, n + 1)])


def _weighted_combination(ring: TruncatedRing, powers: List[PolyMatrix], n: int, start: int) -> PolyMatrix:
    # Σ_{j=1..n} t_{n-j+1} · powers[j - 1 + start]
    total = PolyMatrix.zeros(ring, *powers[0].shape)
    for j in range(1, n + 1):
        total = total + powers[j - 1 + start].scale(ring.variable(n - j + 1))
    return total


def verify_power_lemma(n: int, nu_max: int) -> VerificationReport:
    """Closed-form powers, the two characteristic identities and the Ñ_n block formula, exactly over ZZ"""
    _require_order(n)
    report = VerificationReport(subject=f"power lemma n={n} nu<={nu_max}")
    top = max(nu_max, n + 1)
    ring = integer_ring(n, top + 2)
    table = h_table(ring)
    N = build_nn(n, ring)
    tilde = build_nn_tilde(n, ring)

    powers = [PolyMatrix.identity(ring, n)]
    tilde_powers = [PolyMatrix.identity(ring, n + 1)]
    for _ in range(top + 1):
        powers.append(powers[-1] @ N)
        tilde_powers.append(tilde_powers[-1] @ tilde)

    mismatches = []
    for nu in range(1, nu_max + 1):
        position = powers[nu].first_difference(matrix_power_closed_form(n, nu, ring))
        if position is not None:
            mismatches.append(f"(n={n}, ν={nu}, entry={position[0] + 1},{position[1] + 1})")
    report.add("closed form of N_n powers", not mismatches, "; ".join(mismatches))

    identity = _weighted_combination(ring, powers, n, start=0)
    position = powers[n].first_difference(identity)
    report.add(
        "N_n^n = sum t_(n-j+1) N_n^(j-1)",
        position is None,
        "" if position is None else f"(n={n}, ν={n}, entry={position[0] + 1},{position[1] + 1})",
    )

    tilde_identity = _weighted_combination(ring, tilde_powers, n, start=1)
    position = tilde_powers[n + 1].first_difference(tilde_identity)
    report.add(
        "Ñ_n^(n+1) = sum t_(n-j+1) Ñ_n^j",
        position is None,
        "" if position is None else f"(n={n}, ν={n + 1}, entry={position[0] + 1},{position[1] + 1})",
    )

    block_mismatches = []
    for nu in range(1, nu_max + 1):
        expected = [[ring.zero() for _ in range(n + 1)]]
        for a in range(1, n + 1):
            row = [powers[nu - 1][a - 1, b] for b in range(n)]
            row.append(table.value(a, n + nu - 1))
            expected.append(row)
        position = tilde_powers[nu].first_difference(PolyMatrix(ring, expected))
        if position is not None:
            block_mismatches.append(f"(n={n}, ν={nu}, entry={position[0] + 1},{position[1] + 1})")
    report.add("block formula for Ñ_n powers", not block_mismatches, "; ".join(block_mismatches))

    weights = tuple(range(1, n + 1))
    inhomogeneous = []
    negative = []
    for nu in range(nu_max + 1):
        for a in range(1, n + 1):
            h = table.value(a, nu)
            if any(weighted_degree(m, weights) != nu - a + 1 for m in h.monomials()):
                inhomogeneous.append(f"h_({a},{nu})")
            if any(value < 0 for _, value in h.python_terms()):
                negative.append(f"h_({a},{nu})")
    report.add("h_(a,ν) homogeneous of weight ν-a+1", not inhomogeneous, ", ".join(inhomogeneous))
    report.observations["h_nonnegative_coefficients"] = not negative
    if negative:
        report.observations["h_negative_coefficients"] = negative

    logger.debug("power_lemma_verified", n=n, nu_max=nu_max, passed=report.passed)
    return report


def build_j_ideal(n: int, m: int, ring: Optional[TruncatedRing] = None) -> IdealBasis:
    """J_n(m) = (h_{1,m}, ..., h_{n,m}); n = 0 gives the zero ideal of k"""
    if n == 0:
        return IdealBasis.zero_ideal_of_k()
    _require_order(n)
    if m < 1:
        raise IndexOutOfRangeError(f"J_n(m) needs m >= 1, got {m}")
    ring = ring or weighted_ring(n, m + 1)
    return IdealBasis.generated_by(h_table(ring).column(m), ring)


def power_entries_ideal(n: int, m: int, ring: Optional[TruncatedRing] = None) -> IdealBasis:
    """The ideal of all n^2 entries of (N_n)^m"""
    _require_order(n)
    ring = ring or weighted_ring(n, m + n)
    return IdealBasis.generated_by((build_nn(n, ring) ** m).entry_list(), ring)
