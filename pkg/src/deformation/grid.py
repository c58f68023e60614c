"""Per-module verification cases and the (e, ℓ) verification grid."""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from config.setting import settings
from src.core.log import get_logger
from src.core.models import VerificationReport
from src.deformation.centralizer import centralizer_structure
from src.deformation.lift import (
    build_universal_lift,
    lift_over_smaller_ideal_fails,
    verify_lift_relations,
    verify_minimality,
    verify_tangent_specializations,
)
from src.deformation.presentation import loewy_length_two_case, udr_presentation
from src.nakayama.algebra import NakayamaSpec, UniserialModule, normalize_module, syzygy
from src.nakayama.homological import ext1_report, projective_check
from src.ring.coefficients import CoefficientDomainFactory

logger = get_logger(__name__)


class VerificationOptions(BaseModel):
    """Which checks a grid case runs, and over which fields"""

    p: int = settings.DEFAULT_PRIME
    exact_field: str = settings.EXACT_FIELD
    lift_relations: bool = True
    minimality: bool = True
    tangent: bool = True
    centralizer: bool = True
    ext1: bool = True
    centralizer_max_unknowns: Optional[int] = None
    # replaces J_n(m_V) by the smaller J_n(m_V + 1) in the relation check
    perturb: bool = False

    def cache_key(self) -> Tuple:
        return tuple(self.model_dump().values())


@dataclass
class GridResult:
    e_max: int
    ell_max: int
    reports: List[VerificationReport] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def failures(self) -> List[Tuple[str, str]]:
        return [(report.subject, check.name) for report in self.reports for check in report.failures()]


@lru_cache(maxsize=256)
def _lift_checks(spec: NakayamaSpec, n: int, i: int, options_key: Tuple) -> VerificationReport:
    """Checks that depend only on (spec, n, i); shared by V, ΩV and every rotation"""
    options = VerificationOptions(**dict(zip(VerificationOptions.model_fields, options_key)))
    field_ = CoefficientDomainFactory.prime_field(options.p)
    report = VerificationReport(subject=f"lift ({n},{i}) over {spec}")
    lift = build_universal_lift(spec, n, i)
    if options.perturb:
        lift = replace(lift, m_v=lift.m_v + 1)

    if options.lift_relations:
        report.extend(verify_lift_relations(lift, coefficients=field_))
        report.add("lift fails over J_n(m_V + 1)", lift_over_smaller_ideal_fails(lift, field_))
    if options.minimality:
        exact = CoefficientDomainFactory.from_label(options.exact_field)
        report.extend(verify_minimality(spec, n, i, exact))
    if options.centralizer:
        description, centralizer_report = centralizer_structure(lift, field_, options.centralizer_max_unknowns)
        report.extend(centralizer_report, prefix="centralizer: ")
        report.observations["centralizer_pieces"] = len(description.piece_dimensions)
    if options.tangent:
        # tangent directions come from ρ itself, so the unperturbed lift is used
        report.extend(
            verify_tangent_specializations(build_universal_lift(spec, n, i), spec.module(1, n * spec.e + i), options.p),
            prefix="tangent: ",
        )
    return report


def verify_case(V: UniserialModule, options: Optional[VerificationOptions] = None) -> VerificationReport:
    """All checks for one indecomposable module"""
    options = options or VerificationOptions()
    field_ = CoefficientDomainFactory.prime_field(options.p)
    report = VerificationReport(subject=f"{V} over {V.spec}")
    presentation = udr_presentation(V, field_)
    report.observations["presentation"] = presentation.text
    if V.is_projective:
        report.add("projective module has presentation k", presentation.text == "k")
        return report

    W, _, _ = normalize_module(V)
    n = presentation.n
    report.add("presentation is invariant under Ω", udr_presentation(syzygy(V), field_).text == presentation.text)
    report.add(
        "presentation is invariant under rotation",
        udr_presentation(V.rotated(1), field_).text == presentation.text,
    )
    if options.ext1:
        ext1 = ext1_report(W, options.p)
        report.extend(ext1, prefix="ext1: ")
    if n == 0:
        report.add("n = 0 gives k with dimension 1", presentation.k_dimension == 1 and not presentation.generators)
        return report

    report.add("one generator per Ext^1 dimension", len(presentation.generators) == n)
    if n == 1:
        report.add("dim k[[t]]/(t^m_V) = m_V", presentation.k_dimension == presentation.m_v)
    report.observations["k_dimension_is_binomial"] = presentation.k_dimension == comb(presentation.m_v, n)

    report.extend(_lift_checks(V.spec, W.n, W.i, options.cache_key()).model_copy(deep=True))
    if not report.passed:
        for check in report.failures():
            logger.warning("verification_case_failed", case=str(V), spec=str(V.spec), check=check.name)
    return report


def verify_spec(spec: NakayamaSpec, options: Optional[VerificationOptions] = None) -> List[VerificationReport]:
    """Every module of one algebra, sorted by (top, len), plus the projective-module checks"""
    options = options or VerificationOptions()
    reports = [projective_check(spec, options.p)]
    if spec.ell == 2:
        reports.append(loewy_length_two_case(spec.e))
    reports.extend(verify_case(V, options) for V in spec.modules())
    return reports


def _grid_specs(e_max: int, ell_max: int) -> List[NakayamaSpec]:
    return [NakayamaSpec(e, ell) for e in range(1, e_max + 1) for ell in range(2, ell_max + 1)]


def run_verification_grid(
    e_max: int,
    ell_max: int,
    options: Optional[VerificationOptions] = None,
    workers: Optional[int] = None,
) -> GridResult:
    """Deterministic over sorted (e, ℓ) cases; one process per algebra when workers > 1"""
    options = options or VerificationOptions()
    workers = workers or settings.MAX_WORKERS
    specs = _grid_specs(e_max, ell_max)
    started = time.perf_counter()
    by_spec: Dict[Tuple[int, int], List[VerificationReport]] = {}

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(verify_spec, spec, options): spec for spec in specs}
            for future in as_completed(futures):
                spec = futures[future]
                by_spec[(spec.e, spec.ell)] = future.result()
    else:
        for spec in specs:
            by_spec[(spec.e, spec.ell)] = verify_spec(spec, options)

    result = GridResult(e_max=e_max, ell_max=ell_max, elapsed=time.perf_counter() - started)
    for key in sorted(by_spec):
        result.reports.extend(by_spec[key])
    logger.info(
        "verification_grid_finished",
        e_max=e_max,
        ell_max=ell_max,
        cases=len(result.reports),
        failures=len(result.failures()),
        elapsed=round(result.elapsed, 3),
    )
    return result
