"""Universal deformation ring presentations R(N(e,ℓ), V) = k[[t_1..t_n]] / J_n(m_V)."""

from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from typing import List, Optional, Tuple

from config.setting import settings
from src.core.exceptions import UnsupportedModeError
from src.core.log import get_logger
from src.core.models import PresentationRecord, ProvenanceRecord, VerificationReport
from src.defo.structured import build_j_ideal
from src.nakayama.algebra import NakayamaSpec, UniserialModule, normalize_module
from src.ring.coefficients import CoefficientDomain, CoefficientDomainFactory
from src.ring.polynomial import TruncatedPolynomial
from src.ring.quotient import IdealBasis, QuotientModelBuilder

logger = get_logger(__name__)


def m_v(mu: int, ell_prime: int, i: int) -> int:
    """μ when 0 <= i <= ℓ', μ - 1 when ℓ' < i"""
    if i < 0:
        raise UnsupportedModeError(f"i must be >= 0, got {i}")
    return mu if i <= ell_prime else mu - 1


@dataclass
class DeformationPresentation:
    n: int
    m_v: Optional[int]
    ideal: IdealBasis
    k_dimension: int = 1
    witness_degree: Optional[int] = None
    field: str = "GF(2)"
    provenance: Optional[ProvenanceRecord] = None
    module: Optional[UniserialModule] = None
    notes: List[str] = dataclass_field(default_factory=list)

    @property
    def generators(self) -> List[TruncatedPolynomial]:
        return list(self.ideal.generators)

    @property
    def is_trivial(self) -> bool:
        return self.n == 0

    def generator_texts(self, coefficients: Optional[CoefficientDomain] = None) -> List[str]:
        """Integer generators, or generators over a field with leading coefficient 1"""
        if coefficients is None or not coefficients.is_field:
            return [g.to_text() for g in self.generators]
        ring = self.ideal.ring.with_coefficients(coefficients)
        texts = []
        for g in self.generators:
            image = g.with_ring(ring).normalized()
            if not image.is_zero:
                texts.append(image.to_text())
        return texts

    def to_record(self, coefficients: Optional[CoefficientDomain] = None) -> PresentationRecord:
        return PresentationRecord(
            n=self.n,
            m_v=self.m_v,
            generators=self.generator_texts(coefficients),
            k_dimension=self.k_dimension,
            field=self.field,
        )

    @property
    def text(self) -> str:
        return self.to_record().text


def _field(coefficients: Optional[CoefficientDomain]) -> CoefficientDomain:
    return coefficients or CoefficientDomainFactory.prime_field(settings.DEFAULT_PRIME)


@lru_cache(maxsize=512)
def stabilized_j_quotient(
    n: int, m: int, coefficients: CoefficientDomain, max_degree: Optional[int] = None
) -> Tuple[IdealBasis, int, int]:
    """(J_n(m), dim k[[t]]/J_n(m), witness degree); shared by every module with the same (n, m_V)"""
    ideal = build_j_ideal(n, m)
    dimension, witness = QuotientModelBuilder.shared(ideal, coefficients).stabilized(m, max_degree)
    return ideal, dimension, witness


def trivial_presentation(coefficients: Optional[CoefficientDomain] = None, **kwargs) -> DeformationPresentation:
    return DeformationPresentation(
        n=0, m_v=None, ideal=IdealBasis.zero_ideal_of_k(), k_dimension=1, field=_field(coefficients).label, **kwargs
    )


def presentation_for(
    spec: NakayamaSpec,
    n: int,
    i: int,
    coefficients: Optional[CoefficientDomain] = None,
    max_degree: Optional[int] = None,
) -> DeformationPresentation:
    """J_n(m_V) with its stabilized quotient dimension, for the normalized module V_{n,i}"""
    field_ = _field(coefficients)
    if n == 0:
        return trivial_presentation(field_)
    m = m_v(spec.mu, spec.ell_prime, i)
    limit = max_degree if max_degree is not None else settings.TRUNCATION_MAX_DEGREE
    ideal, dimension, witness = stabilized_j_quotient(n, m, field_, limit)
    return DeformationPresentation(
        n=n, m_v=m, ideal=ideal, k_dimension=dimension, witness_degree=witness, field=field_.label
    )


def udr_presentation(
    V: UniserialModule,
    coefficients: Optional[CoefficientDomain] = None,
    max_degree: Optional[int] = None,
) -> DeformationPresentation:
    """Presentation of the universal deformation ring of V; k for projective V"""
    if V.is_projective:
        presentation = trivial_presentation(coefficients, module=V)
        presentation.notes.append("projective module")
        return presentation
    spec = V.spec
    W, applied_omega, rotation = normalize_module(V)
    presentation = presentation_for(spec, W.n, W.i, coefficients, max_degree)
    presentation.module = V
    presentation.provenance = ProvenanceRecord(
        mu=spec.mu,
        ell_prime=spec.ell_prime,
        ell_v=W.length,
        i=W.i,
        d_v=W.d_v,
        applied_omega=applied_omega,
        rotation=rotation,
    )
    logger.debug(
        "presentation_computed",
        module=str(V),
        n=presentation.n,
        m_v=presentation.m_v,
        k_dimension=presentation.k_dimension,
    )
    return presentation


def loewy_length_two_case(e: int, top: int = 1) -> VerificationReport:
    """Simple modules over N(e, 2): k[[t]]/(t^2) for e = 1, k otherwise"""
    spec = NakayamaSpec(e, 2)
    simple = spec.module(top, 1)
    presentation = udr_presentation(simple)
    expected = (1, 2) if e == 1 else (0, None)
    report = VerificationReport(subject=f"simple module S{top} of {spec}")
    report.add(
        "Loewy length two presentation",
        (presentation.n, presentation.m_v) == expected,
        presentation.text,
    )
    return report
