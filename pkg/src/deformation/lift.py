"""The universal lift f_{n,i}: N(e,ℓ) -> Mat(k[[t]]/J_{n,i}) and its symbolic checks."""

from dataclasses import dataclass, field
from math import ceil
from typing import Dict, List, Optional

import numpy as np

from config.setting import settings
from src.core.exceptions import IndexOutOfRangeError, TrivialLiftError, VerificationError
from src.core.log import get_logger
from src.core.models import VerificationReport
from src.defo.poly_matrix import PolyMatrix
from src.defo.structured import build_j_ideal, weighted_ring
from src.deformation.presentation import m_v, stabilized_j_quotient
from src.nakayama.algebra import NakayamaSpec, UniserialModule, cyclic, normalize_module
from src.nakayama.representation import MatrixRep, block_slices, build_rho, dual_number_strict_equivalence
from src.nakayama.sequences import build_ext_basis_sequences, verify_dual_number_lifts_independent
from src.ring.artin import ArtinTestRing, TestRingFactory
from src.ring.coefficients import CoefficientDomain, CoefficientDomainFactory
from src.ring.homs import evaluate
from src.ring.polynomial import TruncatedRing
from src.ring.quotient import IdealBasis, QuotientModelBuilder, ideal_difference_witness

logger = get_logger(__name__)


def covering_ring(ring: TruncatedRing, m: int) -> TruncatedRing:
    """`ring`, or a deeper truncation of it, in which every generator of J_n(m) is nonzero"""
    return ring if ring.degree_bound > m else ring.with_degree_bound(m + 1)


@dataclass
class UniversalLift:
    """Vertex and arrow images over ZZ[t1..tn] (weights w(t_j) = j), untruncated in practice.

    Only α_{v*} with v* ≡ i mod e differs from ρ_{n,i}: the last column of its
    block (v*+1, v*) carries (t_n, ..., t_1).
    """

    spec: NakayamaSpec
    n: int
    i: int
    m_v: int
    ring: TruncatedRing
    vertex_mats: List[PolyMatrix]
    arrow_mats: List[PolyMatrix]
    perturbed_vertex: int
    _paths: Dict[int, PolyMatrix] = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return self.n * self.spec.e + self.i

    @property
    def ideal(self) -> IdealBasis:
        return build_j_ideal(self.n, self.m_v, covering_ring(self.ring, self.m_v))

    def arrow(self, v: int) -> PolyMatrix:
        return self.arrow_mats[self.spec.vertex(v) - 1]

    def vertex(self, v: int) -> PolyMatrix:
        return self.vertex_mats[self.spec.vertex(v) - 1]

    def path_product(self, v: int) -> PolyMatrix:
        """E_v: the image of the length-ℓ path α_{v+ℓ-1} ... α_v"""
        v = self.spec.vertex(v)
        if v not in self._paths:
            product = PolyMatrix.identity(self.ring, self.dim)
            for step in range(self.spec.ell):
                product = self.arrow(v + step) @ product
            self._paths[v] = product
        return self._paths[v]

    def with_ring(self, ring: TruncatedRing) -> "UniversalLift":
        return UniversalLift(
            self.spec,
            self.n,
            self.i,
            self.m_v,
            ring,
            [m.with_ring(ring) for m in self.vertex_mats],
            [m.with_ring(ring) for m in self.arrow_mats],
            self.perturbed_vertex,
        )

    def at_zero(self, p: Optional[int] = None) -> MatrixRep:
        """Specialization t_j -> 0 as a field representation"""
        R = TestRingFactory.create_ring("fp", p or settings.DEFAULT_PRIME)
        return specialize(self, R, np.zeros((self.n, 1), dtype=np.int64))


def build_universal_lift(spec: NakayamaSpec, n: int, i: int) -> UniversalLift:
    if n == 0:
        raise TrivialLiftError("n = 0: the deformation ring is k and the lift is ρ itself")
    if not 0 <= i < spec.e:
        raise IndexOutOfRangeError(f"i={i} outside 0..{spec.e - 1}")
    if 2 * (n * spec.e + i) > spec.ell:
        raise IndexOutOfRangeError(f"ℓ_(n,i) = {n * spec.e + i} exceeds ℓ/2 = {spec.ell / 2}")
    # each length-ℓ path meets α_{v*} at most ceil(ℓ/e) times, each time raising weight by <= n;
    # the bound also keeps every generator of J_n(m_V + 1) nonzero
    mv = m_v(spec.mu, spec.ell_prime, i)
    ring = weighted_ring(n, max(n * ceil(spec.ell / spec.e), mv + 1) + 1)
    rho = build_rho(spec, n, i)
    vertex_mats = [PolyMatrix.from_ints(ring, E.tolist()) for E in rho.field_vertices()]
    arrow_mats = [PolyMatrix.from_ints(ring, A.tolist()) for A in rho.field_arrows()]

    star = spec.vertex(i)
    slices = block_slices(spec.e, n, i)
    column = slices[star - 1][-1]
    target = slices[cyclic(star + 1, spec.e) - 1]
    perturbed = arrow_mats[star - 1]
    for w in range(1, n + 1):
        row = target[w - 1]
        perturbed = perturbed.with_entry(row, column, perturbed[row, column] + ring.variable(n - w + 1))
    arrow_mats[star - 1] = perturbed
    return UniversalLift(spec, n, i, mv, ring, vertex_mats, arrow_mats, star)


def build_universal_lift_for(V: UniserialModule) -> UniversalLift:
    W, _, _ = normalize_module(V)
    return build_universal_lift(V.spec, W.n, W.i)


def specialize(lift: UniversalLift, R: ArtinTestRing, images: np.ndarray) -> MatrixRep:
    """γ ∘ f for the local morphism γ: t_j -> images[j - 1] (an (n, dim R) array)"""
    images = np.mod(np.asarray(images, dtype=np.int64), R.p)

    def convert(matrix: PolyMatrix) -> np.ndarray:
        out = np.zeros((matrix.rows, matrix.cols, R.dimension), dtype=np.int64)
        for r, c, entry in matrix.nonzero_items():
            out[r, c] = evaluate(entry, images, R)
        return out

    return MatrixRep(
        lift.spec,
        R,
        [convert(m) for m in lift.vertex_mats],
        [convert(m) for m in lift.arrow_mats],
        label=f"specialized lift ({lift.n},{lift.i}) into {R.name}",
    )


def _model_builder(ideal: IdealBasis, coefficients: Optional[CoefficientDomain]) -> QuotientModelBuilder:
    return QuotientModelBuilder.shared(ideal, coefficients)


def verify_lift_relations(
    lift: UniversalLift,
    ideal: Optional[IdealBasis] = None,
    coefficients: Optional[CoefficientDomain] = None,
) -> VerificationReport:
    """Idempotent and arrow relations, and E_v ≡ 0 modulo the ideal (J_{n,i} by default)"""
    if ideal is None:
        ideal = lift.ideal
    builder = _model_builder(ideal, coefficients)
    _, witness = builder.stabilized(lift.m_v)
    # every weight component at or above the witness is inside the ideal
    model = builder.build(witness)
    report = VerificationReport(subject=f"lift relations ({lift.n},{lift.i}) over {lift.spec} mod {len(ideal)} generators")

    ring = lift.ring
    for v in range(1, lift.spec.e + 1):
        E = lift.vertex(v)
        report.add(f"e{v}^2 = e{v}", E @ E == E)
        for w in range(1, lift.spec.e + 1):
            if w != v:
                report.add(f"e{v} e{w} = 0", (E @ lift.vertex(w)).is_zero)
    total = PolyMatrix.zeros(ring, lift.dim, lift.dim)
    for E in lift.vertex_mats:
        total = total + E
    report.add("sum of idempotents = 1", total == PolyMatrix.identity(ring, lift.dim))
    for v in range(1, lift.spec.e + 1):
        A = lift.arrow(v)
        report.add(f"e{lift.spec.vertex(v + 1)} alpha{v} e{v} = alpha{v}", lift.vertex(v + 1) @ A @ lift.vertex(v) == A)

    for v in range(1, lift.spec.e + 1):
        offending = []
        for r, c, entry in lift.path_product(v).nonzero_items():
            reduced = model.normal_form(entry.with_ring(model.ring))
            if not reduced.is_zero:
                offending.append(f"(v={v}, row={r + 1}, col={c + 1}, normal form {reduced.to_text()})")
        report.add(f"E_{v} vanishes in the quotient", not offending, "; ".join(offending[:3]))
    logger.debug("lift_relations_verified", n=lift.n, i=lift.i, spec=str(lift.spec), passed=report.passed)
    return report


def path_entries_ideal(lift: UniversalLift, vertices: Optional[List[int]] = None) -> IdealBasis:
    vertices = vertices or list(range(1, lift.spec.e + 1))
    entries = []
    for v in vertices:
        entries.extend(entry for _, _, entry in lift.path_product(v).nonzero_items())
    return IdealBasis.generated_by(entries, lift.ring)


def minimality_degree(n: int, m: int, coefficients: CoefficientDomain) -> int:
    """Truncation at which J_n(m) and the E_v entry ideal are compared.

    Both are weighted-homogeneous. Generators of J_n(m) sit below weight m + 1, and every
    component from the stabilization witness on lies in J_n(m), so any entry the truncation
    drops is already in J_n(m).
    """
    _, _, stable_from = stabilized_j_quotient(n, m, coefficients, settings.TRUNCATION_MAX_DEGREE)
    return max(m + 1, stable_from)


def verify_minimality(
    spec: NakayamaSpec,
    n: int,
    i: int,
    coefficients: Optional[CoefficientDomain] = None,
    spot_check_primes: Optional[List[int]] = None,
) -> VerificationReport:
    """The entries of all E_v (and of E_{v0} alone, v0 ≡ ℓ' mod e) generate J_n(m_V) exactly"""
    coefficients = coefficients or CoefficientDomainFactory.from_label(settings.EXACT_FIELD)
    primes = settings.SPOT_CHECK_PRIMES if spot_check_primes is None else spot_check_primes
    lift = build_universal_lift(spec, n, i)
    J = lift.ideal
    degree = lift.m_v + 1
    report = VerificationReport(subject=f"minimality ({n},{i}) over {spec}")

    everything = path_entries_ideal(lift)
    v0 = cyclic(spec.ell_prime, spec.e)
    alone = path_entries_ideal(lift, [v0])
    for label, field_ in [(coefficients.label, coefficients)] + [
        (f"GF({p})", CoefficientDomainFactory.prime_field(p)) for p in primes
    ]:
        compare_below = minimality_degree(n, lift.m_v, field_)
        witness = ideal_difference_witness(everything, J, compare_below, field_)
        report.add(
            f"ideal of all E_v entries = J_{n}({lift.m_v}) over {label}",
            witness is None,
            "" if witness is None else f"witness {witness.to_text()}",
        )
        if field_ is coefficients:
            witness = ideal_difference_witness(alone, J, compare_below, field_)
            report.add(
                f"entries of E_{v0} alone generate J_{n}({lift.m_v}) over {label}",
                witness is None,
                "" if witness is None else f"witness {witness.to_text()}",
            )

    rest = IdealBasis.generated_by(J.generators[1:], J.ring)
    model = QuotientModelBuilder.shared(rest, coefficients).build(degree)
    first = J.generators[0]
    report.add(
        f"h_(1,{lift.m_v}) is not redundant",
        not model.contains(first.with_ring(model.ring)),
        first.to_text(),
    )
    logger.debug("minimality_verified", n=n, i=i, spec=str(spec), passed=report.passed)
    return report


def verify_tangent_specializations(lift: UniversalLift, V: UniserialModule, p: Optional[int] = None) -> VerificationReport:
    """t_s -> ε, t_j -> 0 (j != s) is strictly equivalent over k[ε] to ρ_{n,i,s}, for every s"""
    p = p or settings.DEFAULT_PRIME
    dual = TestRingFactory.create_ring("dual-numbers", p)
    rho = build_rho(lift.spec, lift.n, lift.i, p)
    report = VerificationReport(subject=f"tangent specializations ({lift.n},{lift.i}) over {lift.spec}, GF({p})")
    for s in range(1, lift.n + 1):
        images = np.zeros((lift.n, dual.dimension), dtype=np.int64)
        images[s - 1] = dual.basis_vector(1)
        specialized = specialize(lift, dual, images)
        report.add(f"t{s} -> ε reduces to ρ_(n,i)", specialized.residue() == rho)
        sequence = build_ext_basis_sequences(V, s, p)
        report.extend(sequence.verify(), prefix=f"E_{s}: ")
        equivalent = dual_number_strict_equivalence(specialized, sequence.lift) is not None
        report.add(f"t{s} -> ε strictly equivalent to ρ_(n,i,{s})", equivalent)
    report.extend(verify_dual_number_lifts_independent(V, p))
    return report


def lift_over_smaller_ideal_fails(lift: UniversalLift, coefficients: Optional[CoefficientDomain] = None) -> bool:
    """True when some E_v entry survives modulo J_n(m_V + 1)"""
    smaller = build_j_ideal(lift.n, lift.m_v + 1, covering_ring(lift.ring, lift.m_v + 1))
    if not smaller.generators:
        raise VerificationError(f"J_{lift.n}({lift.m_v + 1}) truncated to the zero ideal in {smaller.ring}")
    return not verify_lift_relations(lift, smaller, coefficients).passed

