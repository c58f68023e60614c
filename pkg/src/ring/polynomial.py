"""Truncated multivariate polynomials over ZZ, QQ or F_p, backed by sympy's sparse PolyRing.

A truncated ring k[t1..tn]/(monomials of weighted degree >= D) carries positive
variable weights; the default weights are all 1, which is ordinary total-degree
truncation.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from src.core.exceptions import DimensionMismatchError, IndexOutOfRangeError
from src.ring.coefficients import CoefficientDomain

Monomial = Tuple[int, ...]


def weighted_degree(monomial: Monomial, weights: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(weights, monomial))


def monomial_sort_key(monomial: Monomial, weights: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Local degree order: lower weighted degree first, then lex with t_n > ... > t_1"""
    return weighted_degree(monomial, weights), tuple(-e for e in reversed(monomial))


def monomials_of_weight(weight: int, weights: Sequence[int]) -> List[Monomial]:
    """All exponent vectors of the given weighted degree, in local order"""
    n = len(weights)
    found: List[Monomial] = []

    def extend(index: int, remaining: int, prefix: List[int]):
        if index < 0:
            if remaining == 0:
                found.append(tuple(reversed(prefix)))
            return
        w = weights[index]
        for e in range(remaining // w, -1, -1):
            prefix.append(e)
            extend(index - 1, remaining - e * w, prefix)
            prefix.pop()

    if n == 0:
        return [()] if weight == 0 else []
    extend(n - 1, weight, [])
    return sorted(found, key=lambda m: monomial_sort_key(m, weights))


def render_monomial(monomial: Monomial) -> str:
    factors = []
    for j, e in enumerate(monomial, start=1):
        if e == 1:
            factors.append(f"t{j}")
        elif e > 1:
            factors.append(f"t{j}^{e}")
    return "*".join(factors)


@dataclass(frozen=True)
class TruncatedRing:
    """k[t1..tn] modulo all monomials of weighted degree >= degree_bound"""

    n: int
    degree_bound: int
    coefficients: CoefficientDomain
    weights: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise IndexOutOfRangeError(f"variable count must be >= 0, got {self.n}")
        if self.degree_bound < 1:
            raise IndexOutOfRangeError(f"truncation degree must be >= 1, got {self.degree_bound}")
        weights = tuple(self.weights) if self.weights else (1,) * self.n
        if len(weights) != self.n or any(w < 1 for w in weights):
            raise DimensionMismatchError(f"need {self.n} positive weights, got {weights}")
        object.__setattr__(self, "weights", weights)

    @cached_property
    def poly_ring(self) -> PolyRing:
        symbols = ",".join(f"t{j}" for j in range(1, self.n + 1))
        return PolyRing(symbols, self.coefficients.domain, grlex)

    @property
    def is_standard_weighting(self) -> bool:
        return all(w == 1 for w in self.weights)

    def with_degree_bound(self, degree_bound: int) -> "TruncatedRing":
        return TruncatedRing(self.n, degree_bound, self.coefficients, self.weights)

    def with_coefficients(self, coefficients: CoefficientDomain) -> "TruncatedRing":
        return TruncatedRing(self.n, self.degree_bound, coefficients, self.weights)

    def degree(self, monomial: Monomial) -> int:
        return weighted_degree(monomial, self.weights)

    def sort_key(self, monomial: Monomial):
        return monomial_sort_key(monomial, self.weights)

    def monomials_below(self, bound: Optional[int] = None) -> List[Monomial]:
        """All monomials of weighted degree < bound (default: the truncation degree), in local order"""
        limit = self.degree_bound if bound is None else bound
        out: List[Monomial] = []
        for w in range(limit):
            out.extend(monomials_of_weight(w, self.weights))
        return out

    # Element constructors
    def zero(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self, {})

    def one(self) -> "TruncatedPolynomial":
        return self.constant(1)

    def constant(self, value: Union[int, Fraction]) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self, {(0,) * self.n: self.coefficients.element(value)})

    def variable(self, j: int) -> "TruncatedPolynomial":
        """t_j, 1-based"""
        if not 1 <= j <= self.n:
            raise IndexOutOfRangeError(f"variable t{j} not in t1..t{self.n}")
        exps = [0] * self.n
        exps[j - 1] = 1
        return TruncatedPolynomial(self, {tuple(exps): self.coefficients.element(1)})

    def monomial(self, exponents: Sequence[int], coefficient: Union[int, Fraction] = 1) -> "TruncatedPolynomial":
        if len(exponents) != self.n:
            raise DimensionMismatchError(f"exponent vector {tuple(exponents)} has wrong length")
        return TruncatedPolynomial(self, {tuple(exponents): self.coefficients.element(coefficient)})

    def from_terms(self, terms: Mapping[Monomial, Union[int, Fraction]]) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self, {m: self.coefficients.element(c) for m, c in terms.items()})

    def __str__(self) -> str:
        variables = ",".join(f"t{j}" for j in range(1, self.n + 1))
        return f"{self.coefficients.label}[{variables}]/(deg >= {self.degree_bound}, weights {self.weights})"


class TruncatedPolynomial:
    """Immutable element of a TruncatedRing"""

    __slots__ = ("ring", "element")

    def __init__(self, ring: TruncatedRing, terms):
        bound = ring.degree_bound
        weights = ring.weights
        kept = {m: c for m, c in dict(terms).items() if c and weighted_degree(m, weights) < bound}
        self.ring = ring
        self.element = ring.poly_ring.from_dict(kept) if kept else ring.poly_ring.zero

    # Structure
    def _check(self, other: "TruncatedPolynomial"):
        if not isinstance(other, TruncatedPolynomial):
            raise DimensionMismatchError(f"cannot combine a truncated polynomial with {type(other).__name__}")
        if other.ring != self.ring:
            raise DimensionMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def terms(self) -> Dict[Monomial, object]:
        return dict(self.element.items())

    def sorted_terms(self) -> List[Tuple[Monomial, object]]:
        return sorted(self.element.items(), key=lambda item: self.ring.sort_key(item[0]))

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.sorted_terms()]

    def coefficient(self, monomial: Monomial):
        return self.element.get(tuple(monomial), self.ring.coefficients.domain.zero)

    @property
    def is_zero(self) -> bool:
        return not self.element

    def degree(self) -> float:
        """Weighted degree; -inf for zero"""
        if self.is_zero:
            return float("-inf")
        return max(self.ring.degree(m) for m in self.element)

    def order(self) -> float:
        """Lowest weighted degree of a term; +inf for zero"""
        if self.is_zero:
            return float("inf")
        return min(self.ring.degree(m) for m in self.element)

    def homogeneous_weight(self) -> Optional[int]:
        """The common weighted degree of all terms, or None (zero counts as homogeneous of any weight)"""
        degrees = {self.ring.degree(m) for m in self.element}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def leading_term(self) -> Tuple[Monomial, object]:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    # Arithmetic
    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        return TruncatedPolynomial(self.ring, self.element + other.element)

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        return TruncatedPolynomial(self.ring, self.element - other.element)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.ring, -self.element)

    def __mul__(self, other) -> "TruncatedPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.ring.zero()
        return TruncatedPolynomial(self.ring, self.element * other.element)

    def __rmul__(self, other) -> "TruncatedPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, value: Union[int, Fraction]) -> "TruncatedPolynomial":
        factor = self.ring.coefficients.element(value)
        return TruncatedPolynomial(self.ring, {m: c * factor for m, c in self.element.items()})

    def __pow__(self, exponent: int) -> "TruncatedPolynomial":
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.ring == other.ring and dict(self.element) == dict(other.element)

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.element.items())))

    # Conversions
    def with_ring(self, ring: TruncatedRing) -> "TruncatedPolynomial":
        """Re-home into a ring with the same variables (coefficients converted, truncation reapplied)"""
        if ring.n != self.ring.n:
            raise DimensionMismatchError(f"variable count {self.ring.n} vs {ring.n}")
        source = self.ring.coefficients
        target = ring.coefficients
        return TruncatedPolynomial(ring, {m: target.convert_from(c, source) for m, c in self.element.items()})

    def kill_variables(self, keep: Iterable[int]) -> "TruncatedPolynomial":
        """Substitute t_j -> 0 for every j (1-based) not in keep"""
        allowed = set(keep)
        return TruncatedPolynomial(
            self.ring,
            {m: c for m, c in self.element.items() if all(e == 0 or (j + 1) in allowed for j, e in enumerate(m))},
        )

    def python_terms(self) -> Iterator[Tuple[Monomial, Union[int, Fraction]]]:
        coefficients = self.ring.coefficients
        for m, c in self.sorted_terms():
            yield m, coefficients.to_python(c)

    def normalized(self) -> "TruncatedPolynomial":
        """Leading coefficient scaled to 1 (field modes only)"""
        if self.is_zero or not self.ring.coefficients.is_field:
            return self
        _, lead = self.leading_term()
        inverse = self.ring.coefficients.domain.one / lead
        return TruncatedPolynomial(self.ring, {m: c * inverse for m, c in self.element.items()})

    def to_text(self) -> str:
        """Terms in local order, leading term first, e.g. 't2^2 + t1^2*t2'"""
        pieces: List[str] = []
        for m, value in self.python_terms():
            negative = value < 0
            magnitude = -value if negative else value
            body = render_monomial(m)
            if not body:
                term = str(magnitude)
            elif magnitude == 1:
                term = body
            else:
                term = f"{magnitude}*{body}"
            if not pieces:
                pieces.append(f"-{term}" if negative else term)
            else:
                pieces.append(f" - {term}" if negative else f" + {term}")
        return "".join(pieces) if pieces else "0"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self.to_text()!r}, D={self.ring.degree_bound}, {self.ring.coefficients.label})"


def poly_add(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    return a + b


def poly_mul(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    return a * b
