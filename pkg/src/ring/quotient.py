"""Ideals inside truncated rings and finite quotient models k[t]/(J + m^D)."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.setting import settings
from src.core.exceptions import DimensionMismatchError, NotArtinianError, UnsupportedModeError
from src.core.linalg import rref_exact, rref_mod_p
from src.core.log import get_logger
from src.core.models import CoefficientMode
from src.ring.coefficients import CoefficientDomain, CoefficientDomainFactory
from src.ring.polynomial import Monomial, TruncatedPolynomial, TruncatedRing, monomials_of_weight

logger = get_logger(__name__)


@dataclass(frozen=True)
class IdealBasis:
    """Generator list of an ideal; n = 0 with no ring is the zero ideal of k"""

    n: int
    generators: Tuple[TruncatedPolynomial, ...] = ()
    ring: Optional[TruncatedRing] = None

    @classmethod
    def zero_ideal_of_k(cls) -> "IdealBasis":
        return cls(n=0)

    @classmethod
    def generated_by(cls, generators: Sequence[TruncatedPolynomial], ring: Optional[TruncatedRing] = None) -> "IdealBasis":
        gens = tuple(g for g in generators if not g.is_zero)
        if ring is None:
            if not gens:
                raise DimensionMismatchError("cannot infer the ring of an empty generator list")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise DimensionMismatchError(f"generator {g} does not live in {ring}")
        return cls(n=ring.n, generators=gens, ring=ring)

    @property
    def is_zero_ideal_of_k(self) -> bool:
        return self.n == 0 and self.ring is None

    def in_ring(self, ring: TruncatedRing) -> "IdealBasis":
        """Same generators re-homed into another truncation or coefficient domain"""
        if self.is_zero_ideal_of_k:
            return self
        return IdealBasis.generated_by([g.with_ring(ring) for g in self.generators], ring)

    def is_homogeneous(self) -> bool:
        return all(g.homogeneous_weight() is not None for g in self.generators)

    def text(self) -> List[str]:
        return [g.to_text() for g in self.generators]

    def __len__(self) -> int:
        return len(self.generators)


def _check_field(coefficients: CoefficientDomain):
    if not coefficients.is_field:
        raise UnsupportedModeError(
            "row reduction needs a field; run quotient models over QQ or GF(p), not exact integers"
        )


def _reduce_block(
    columns: List[Monomial],
    rows: List[Dict[Monomial, object]],
    coefficients: CoefficientDomain,
) -> Tuple[List[Monomial], Dict[Monomial, Dict[Monomial, object]]]:
    """Row-reduce one block; returns standard monomials and normal forms of every column"""
    index = {m: k for k, m in enumerate(columns)}
    domain = coefficients.domain
    if not rows or not columns:
        return list(columns), {m: {m: domain.one} for m in columns}

    if coefficients.mode == CoefficientMode.PRIME:
        p = coefficients.p
        dense = np.zeros((len(rows), len(columns)), dtype=np.int64)
        for r, row in enumerate(rows):
            for m, c in row.items():
                dense[r, index[m]] = int(c) % p
        reduced, pivots = rref_mod_p(dense, p)
        pivot_set = set(pivots)
        free = [c for c in range(len(columns)) if c not in pivot_set]
        table = {columns[c]: {columns[c]: domain.one} for c in free}
        for r, c in enumerate(pivots):
            row = reduced[r]
            table[columns[c]] = {columns[f]: domain.convert(int(-row[f]) % p) for f in free if row[f]}
        return [columns[c] for c in free], table
    else:
        dense_rows = [[domain.zero] * len(columns) for _ in rows]
        for r, row in enumerate(rows):
            for m, c in row.items():
                dense_rows[r][index[m]] = c
        reduced_rows, pivots = rref_exact(dense_rows, len(columns), domain)

    pivot_set = set(pivots)
    free = [c for c in range(len(columns)) if c not in pivot_set]
    standard = [columns[c] for c in free]
    table: Dict[Monomial, Dict[Monomial, object]] = {columns[c]: {columns[c]: domain.one} for c in free}
    for r, c in enumerate(pivots):
        table[columns[c]] = {columns[f]: -reduced_rows[r][f] for f in free if reduced_rows[r][f]}
    return standard, table


def _shift(generator: TruncatedPolynomial, monomial: Monomial) -> Dict[Monomial, object]:
    return {tuple(a + b for a, b in zip(m, monomial)): c for m, c in generator.element.items()}


class QuotientModelBuilder:
    """Builds quotient models of one ideal over one field, caching weighted components"""

    def __init__(self, ideal: IdealBasis, coefficients: Optional[CoefficientDomain] = None):
        self.coefficients = coefficients or CoefficientDomainFactory.prime_field(settings.DEFAULT_PRIME)
        _check_field(self.coefficients)
        self.ideal = ideal
        self.homogeneous = ideal.is_zero_ideal_of_k or ideal.is_homogeneous()
        self._components: Dict[int, Tuple[List[Monomial], Dict[Monomial, Dict[Monomial, object]]]] = {}

    @classmethod
    def shared(cls, ideal: IdealBasis, coefficients: Optional[CoefficientDomain] = None) -> "QuotientModelBuilder":
        """One builder per (generators, field) for the whole process, whatever the truncation"""
        coefficients = coefficients or CoefficientDomainFactory.prime_field(settings.DEFAULT_PRIME)
        if ideal.is_zero_ideal_of_k or not ideal.generators:
            return cls(ideal, coefficients)
        bound = int(max(g.degree() for g in ideal.generators)) + 1
        return _shared_builder(ideal.in_ring(ideal.ring.with_degree_bound(bound)), coefficients)

    def _field_ideal(self, degree_bound: int) -> IdealBasis:
        ring = self.ideal.ring.with_degree_bound(degree_bound).with_coefficients(self.coefficients)
        return self.ideal.in_ring(ring)

    def component(self, weight: int):
        """Standard monomials and normal forms in one weighted degree (homogeneous ideals only)"""
        if weight not in self._components:
            ideal = self._field_ideal(weight + 1)
            weights = ideal.ring.weights
            columns = monomials_of_weight(weight, weights)
            rows = []
            for g in ideal.generators:
                g_weight = g.homogeneous_weight()
                if g_weight is None or g_weight > weight:
                    continue
                for m in monomials_of_weight(weight - g_weight, weights):
                    rows.append(_shift(g, m))
            self._components[weight] = _reduce_block(columns, rows, self.coefficients)
        return self._components[weight]

    def component_dimension(self, weight: int) -> int:
        return len(self.component(weight)[0])

    def build(self, degree_bound: int) -> "QuotientModel":
        if degree_bound < 1:
            raise DimensionMismatchError(f"truncation degree must be >= 1, got {degree_bound}")
        if self.ideal.is_zero_ideal_of_k:
            raise UnsupportedModeError("the zero ideal of k has no truncated model; its quotient is k")
        ideal = self._field_ideal(degree_bound)
        if self.homogeneous:
            standard: List[Monomial] = []
            table: Dict[Monomial, Dict[Monomial, object]] = {}
            for w in range(degree_bound):
                block_standard, block_table = self.component(w)
                standard.extend(block_standard)
                table.update(block_table)
        else:
            ring = ideal.ring
            columns = ring.monomials_below()
            rows = []
            for g in ideal.generators:
                for m in columns:
                    product = {k: c for k, c in _shift(g, m).items() if ring.degree(k) < degree_bound}
                    if product:
                        rows.append(product)
            standard, table = _reduce_block(columns, rows, self.coefficients)
        model = QuotientModel(ideal, ideal.ring, standard, table)
        logger.debug(
            "quotient_model_built",
            n=ideal.n,
            degree_bound=degree_bound,
            dimension=model.dimension,
            field=self.coefficients.label,
        )
        return model

    def stabilized(self, initial_degree: int, max_degree: Optional[int] = None, window: Optional[int] = None) -> Tuple[int, int]:
        """Increase D until the dimension is unchanged over `window` consecutive increments"""
        limit = max_degree if max_degree is not None else settings.TRUNCATION_MAX_DEGREE
        if initial_degree >= limit:
            raise DimensionMismatchError(f"initial degree {initial_degree} must be below {limit}")
        if self.ideal.is_zero_ideal_of_k:
            return 1, max(initial_degree, 1)
        if window is None:
            window = max(settings.STABILIZATION_WINDOW, max(self.ideal.ring.weights, default=1))

        dimension_at = (
            self._homogeneous_dimensions(limit) if self.homogeneous else (lambda D: self.build(D).dimension)
        )
        previous = dimension_at(initial_degree)
        run_start, run_length = initial_degree, 0
        for D in range(initial_degree + 1, limit + 1):
            current = dimension_at(D)
            if current == previous:
                run_length += 1
                if run_length >= window:
                    logger.info(
                        "quotient_dimension_stabilized",
                        n=self.ideal.n,
                        dimension=current,
                        witness_degree=run_start,
                        field=self.coefficients.label,
                    )
                    return current, run_start
            else:
                run_start, run_length = D, 0
            previous = current
        raise NotArtinianError(
            f"quotient dimension did not stabilize by D = {limit}", last_degree=limit, last_dimension=previous
        )

    def _homogeneous_dimensions(self, limit: int):
        totals: Dict[int, int] = {}

        def dimension_at(D: int) -> int:
            if D not in totals:
                totals[D] = sum(self.component_dimension(w) for w in range(D))
            return totals[D]

        return dimension_at


@lru_cache(maxsize=256)
def _shared_builder(ideal: IdealBasis, coefficients: CoefficientDomain) -> QuotientModelBuilder:
    return QuotientModelBuilder(ideal, coefficients)


class QuotientModel:
    """k-basis of standard monomials of k[t]/(J + m^D) with a normal form for every monomial below D"""

    def __init__(
        self,
        ideal: IdealBasis,
        ring: TruncatedRing,
        standard_monomials: List[Monomial],
        reduction_table: Dict[Monomial, Dict[Monomial, object]],
    ):
        self.ideal = ideal
        self.ring = ring
        self.standard_monomials = sorted(standard_monomials, key=ring.sort_key)
        self.reduction_table = reduction_table
        self._index = {m: k for k, m in enumerate(self.standard_monomials)}

    @property
    def dimension(self) -> int:
        return len(self.standard_monomials)

    @property
    def coefficients(self) -> CoefficientDomain:
        return self.ring.coefficients

    @property
    def degree_bound(self) -> int:
        return self.ring.degree_bound

    def index_of(self, monomial: Monomial) -> int:
        return self._index[monomial]

    def standard_weights(self) -> List[int]:
        return [self.ring.degree(m) for m in self.standard_monomials]

    def _coerce(self, p: TruncatedPolynomial) -> TruncatedPolynomial:
        if (
            p.ring.n != self.ring.n
            or p.ring.degree_bound != self.ring.degree_bound
            or p.ring.weights != self.ring.weights
        ):
            raise DimensionMismatchError(
                f"polynomial in {p.ring} does not match model truncation {self.ring}"
            )
        return p if p.ring == self.ring else p.with_ring(self.ring)

    def normal_form(self, p: TruncatedPolynomial) -> TruncatedPolynomial:
        return TruncatedPolynomial(self.ring, self.coordinates(p))

    def coordinates(self, p: TruncatedPolynomial) -> Dict[Monomial, object]:
        """Normal form as {standard monomial: coefficient}"""
        p = self._coerce(p)
        domain = self.coefficients.domain
        out: Dict[Monomial, object] = {}
        for m, c in p.element.items():
            for s, a in self.reduction_table[m].items():
                out[s] = out.get(s, domain.zero) + c * a
        return {s: c for s, c in out.items() if c}

    def vector(self, p: TruncatedPolynomial) -> np.ndarray:
        """Coordinates over F_p as an integer vector in standard-monomial order"""
        if self.coefficients.mode != CoefficientMode.PRIME:
            raise UnsupportedModeError("integer coordinate vectors need a prime field")
        v = np.zeros(self.dimension, dtype=np.int64)
        for s, c in self.coordinates(p).items():
            v[self._index[s]] = int(c) % self.coefficients.p
        return v

    def contains(self, p: TruncatedPolynomial) -> bool:
        return not self.coordinates(p)

    def basis_element(self, monomial: Monomial) -> TruncatedPolynomial:
        return self.ring.monomial(monomial)

    def multiplication_matrix(self, element: TruncatedPolynomial) -> np.ndarray:
        """Matrix of x -> element * x on the standard basis (prime fields)"""
        element = self._coerce(element)
        columns = [self.vector(element * self.basis_element(s)) for s in self.standard_monomials]
        if not columns:
            return np.zeros((0, 0), dtype=np.int64)
        return np.stack(columns, axis=1)

    def __repr__(self) -> str:
        return f"QuotientModel(n={self.ring.n}, D={self.degree_bound}, dim={self.dimension}, {self.coefficients.label})"


def build_quotient_model(ideal: IdealBasis, degree_bound: int, coefficients: Optional[CoefficientDomain] = None) -> QuotientModel:
    return QuotientModelBuilder.shared(ideal, coefficients).build(degree_bound)


def normal_form(p: TruncatedPolynomial, model: QuotientModel) -> TruncatedPolynomial:
    return model.normal_form(p)


def ideal_membership(p: TruncatedPolynomial, model: QuotientModel) -> bool:
    return model.contains(p)


def ideal_difference_witness(
    first: IdealBasis, second: IdealBasis, degree_bound: int, coefficients: Optional[CoefficientDomain] = None
) -> Optional[TruncatedPolynomial]:
    """A generator of one ideal that is not in the other at truncation D, or None if they agree"""
    if first.n != second.n:
        raise DimensionMismatchError(f"ideals in {first.n} and {second.n} variables")
    if first.is_zero_ideal_of_k or second.is_zero_ideal_of_k:
        return None
    first_model = build_quotient_model(first, degree_bound, coefficients)
    second_model = build_quotient_model(second, degree_bound, coefficients)
    for g in first_model.ideal.generators:
        if not second_model.contains(g.with_ring(second_model.ring)):
            return g
    for g in second_model.ideal.generators:
        if not first_model.contains(g.with_ring(first_model.ring)):
            return g
    return None


def ideal_equal(first: IdealBasis, second: IdealBasis, degree_bound: int, coefficients: Optional[CoefficientDomain] = None) -> bool:
    return ideal_difference_witness(first, second, degree_bound, coefficients) is None


def quotient_dimension_stabilized(
    ideal: IdealBasis,
    initial_degree: int,
    max_degree: Optional[int] = None,
    coefficients: Optional[CoefficientDomain] = None,
    window: Optional[int] = None,
) -> Tuple[int, int]:
    """(stabilized dimension, witness D); NotArtinianError when Dmax is reached first"""
    return QuotientModelBuilder.shared(ideal, coefficients).stabilized(initial_degree, max_degree, window)
