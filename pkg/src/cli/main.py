"""Command-line surface: ring, table, verify, oracle, brauer.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource cap.
"""

import functools
import time
from typing import List, Optional

import click
from pydantic import TypeAdapter

from config.setting import settings
from src.cli.brauer import BrauerTreeSpec, brauer_record, brauer_report
from src.core.exceptions import DeformationRingError
from src.core.log import configure_logging, get_logger
from src.core.models import (
    GRID_BOUNDS,
    BrauerRecord,
    GridName,
    ModuleKey,
    ResultRecord,
    VerificationReport,
    VerificationSummary,
)
from src.defo.structured import verify_power_lemma
from src.deformation.grid import VerificationOptions, run_verification_grid, verify_case
from src.deformation.presentation import DeformationPresentation, udr_presentation
from src.nakayama.algebra import NakayamaSpec, UniserialModule, syzygy
from src.oracle.checks import (
    check_centralizer_lifting,
    check_representability,
    emitted_ring,
    tangent_report,
)
from src.ring.artin import SmallExtensionFactory, TestRingFactory
from src.ring.coefficients import CoefficientDomainFactory

logger = get_logger(__name__)

EXIT_FAILURE = 1


def common_options(command):
    """--json, --log-level, --p and --workers on every subcommand"""
    options = [
        click.option("--json", "as_json", is_flag=True, help="Emit JSON on stdout"),
        click.option("--log-level", default=None, help="Override LOG_LEVEL"),
        click.option("--p", "p", type=int, default=None, help="Prime for quotient models and the oracle"),
        click.option("--workers", type=int, default=None, help="Worker processes"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def handle_errors(command):
    """Map engine errors to their exit codes"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        configure_logging(kwargs.get("log_level"))
        try:
            return command(*args, **kwargs)
        except DeformationRingError as error:
            logger.error("command_failed", error=type(error).__name__, message=str(error))
            click.echo(f"Error: {error}", err=True)
            click.get_current_context().exit(error.exit_code)

    return wrapper


def _exit_with(passed: bool):
    if not passed:
        click.get_current_context().exit(EXIT_FAILURE)


def result_record(
    V: UniserialModule,
    presentation: DeformationPresentation,
    input_echo: dict,
    reports: Optional[List[VerificationReport]] = None,
    timings: Optional[dict] = None,
) -> ResultRecord:
    checks = [check for report in reports or [] for check in report.checks]
    return ResultRecord(
        input=input_echo,
        presentation=presentation.to_record(),
        provenance=presentation.provenance,
        checks=checks,
        timings=timings or {},
        omega_partner=None if V.is_projective else ModuleKey(top=syzygy(V).top, len=syzygy(V).length),
    )


def _echo_record(record: ResultRecord):
    presentation = record.presentation
    label = ", ".join(f"{k}={v}" for k, v in record.input.items())
    click.echo(f"{label}: {presentation.text}  (dim {presentation.k_dimension})")
    for check in record.checks:
        click.echo(f"  [{'PASS' if check.passed else 'FAIL'}] {check.name} {check.detail}".rstrip())


def _echo_summary(summary: VerificationSummary):
    for report in summary.reports:
        failures = report.failures()
        click.echo(f"[{'PASS' if not failures else 'FAIL'}] {report.subject} ({len(report.checks)} checks)")
        for check in failures:
            click.echo(f"    {check.name}: {check.detail}")
    click.echo(f"{'passed' if summary.passed else 'FAILED'}: {summary.scope}")


@click.group()
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
def cli():
    """Universal deformation rings of modules over self-injective Nakayama algebras"""


@cli.command()
@click.option("--e", type=int, help="Vertices of the circular quiver")
@click.option("--ell", type=int, help="Loewy length")
@click.option("--top", type=int, default=1, show_default=True)
@click.option("--len", "length", type=int, help="Length of the uniserial module")
@click.option("--brauer-edges", type=int, help="Edges of a Brauer tree (instead of --e/--ell)")
@click.option("--multiplicity", type=int, help="Exceptional multiplicity of the Brauer tree")
@click.option("--distance", type=int, help="Distance d_V from the boundary of the stable AR-quiver")
@click.option("--verify", "run_checks", is_flag=True, help="Run the verification case for this module")
@click.option("--field", type=click.Choice(["gf", "qq"]), default="gf", show_default=True)
@common_options
@handle_errors
def ring(e, ell, top, length, brauer_edges, multiplicity, distance, run_checks, field, as_json, log_level, p, workers):
    """Presentation of R(N(e,ℓ), V) for one module"""
    p = p or settings.DEFAULT_PRIME
    if brauer_edges is not None:
        if multiplicity is None or distance is None:
            raise click.UsageError("--brauer-edges needs --multiplicity and --distance")
        spec = BrauerTreeSpec(brauer_edges, multiplicity).nakayama
        V = spec.module(1, distance + 1)
        input_echo = {"brauerEdges": brauer_edges, "multiplicity": multiplicity, "distance": distance}
    else:
        if e is None or ell is None or length is None:
            raise click.UsageError("give --e, --ell and --len, or the Brauer tree flags")
        spec = NakayamaSpec(e, ell)
        V = spec.module(top, length)
        input_echo = {"e": e, "ell": ell, "top": top, "len": length}

    coefficients = CoefficientDomainFactory.prime_field(p) if field == "gf" else CoefficientDomainFactory.rationals()
    started = time.perf_counter()
    presentation = udr_presentation(V, coefficients)
    timings = {"presentation": round(time.perf_counter() - started, 6)}
    reports = []
    if run_checks:
        started = time.perf_counter()
        reports.append(verify_case(V, VerificationOptions(p=p)))
        timings["verification"] = round(time.perf_counter() - started, 6)
    record = result_record(V, presentation, input_echo, reports, timings)
    if as_json:
        click.echo(record.to_json())
    else:
        _echo_record(record)
    _exit_with(record.passed)


@cli.command()
@click.option("--e", type=int, required=True)
@click.option("--ell", type=int, required=True)
@common_options
@handle_errors
def table(e, ell, as_json, log_level, p, workers):
    """One presentation per indecomposable module, sorted by (top, len)"""
    coefficients = CoefficientDomainFactory.prime_field(p or settings.DEFAULT_PRIME)
    spec = NakayamaSpec(e, ell)
    records = [
        result_record(V, udr_presentation(V, coefficients), {"e": e, "ell": ell, "top": V.top, "len": V.length})
        for V in spec.modules()
    ]
    if as_json:
        click.echo(TypeAdapter(List[ResultRecord]).dump_json(records, by_alias=True, indent=2).decode())
        return
    click.echo(f"{'top':>4} {'len':>4} {'n':>3} {'mV':>4} {'dim':>5}  {'Ω-partner':<10} presentation")
    for record in records:
        partner = f"({record.omega_partner.top},{record.omega_partner.len})" if record.omega_partner else "-"
        presentation = record.presentation
        click.echo(
            f"{record.input['top']:>4} {record.input['len']:>4} {presentation.n:>3} "
            f"{presentation.m_v if presentation.m_v is not None else '-':>4} {presentation.k_dimension:>5}  "
            f"{partner:<10} {presentation.text}"
        )


@cli.command()
@click.option("--grid", type=click.Choice([g.value for g in GridName]), default=GridName.SMALL.value, show_default=True)
@click.option("--e-max", type=int, help="Override the grid's e bound")
@click.option("--ell-max", type=int, help="Override the grid's ℓ bound")
@click.option("--power-lemma", is_flag=True, help="Only check the matrix-power lemma")
@click.option("--n-max", type=int, default=6, show_default=True)
@click.option("--nu-max", type=int, default=10, show_default=True)
@click.option("--brauer", "with_brauer", is_flag=True, help="Also compare Brauer tree m_V for e <= 4, m <= 3")
@click.option("--perturb", is_flag=True, help="Check the lift against a strictly smaller ideal (must fail)")
@click.option("--skip-centralizer", is_flag=True)
@click.option("--skip-tangent", is_flag=True)
@click.option("--skip-minimality", is_flag=True)
@click.option("--centralizer-cap", type=int, default=None, help="Override CENTRALIZER_MAX_UNKNOWNS")
@common_options
@handle_errors
def verify(
    grid, e_max, ell_max, power_lemma, n_max, nu_max, with_brauer, perturb,
    skip_centralizer, skip_tangent, skip_minimality, centralizer_cap, as_json, log_level, p, workers,
):
    """Run a verification grid; nonzero exit on any failure"""
    started = time.perf_counter()
    if power_lemma:
        summary = VerificationSummary(
            scope=f"power lemma n <= {n_max}, ν <= {nu_max}",
            reports=[verify_power_lemma(n, nu_max) for n in range(1, n_max + 1)],
        )
    else:
        default_e, default_ell = GRID_BOUNDS[GridName(grid)]
        options = VerificationOptions(
            p=p or settings.DEFAULT_PRIME,
            centralizer=not skip_centralizer,
            tangent=not skip_tangent,
            minimality=not skip_minimality,
            centralizer_max_unknowns=centralizer_cap,
            perturb=perturb,
        )
        result = run_verification_grid(e_max or default_e, ell_max or default_ell, options, workers)
        summary = VerificationSummary(scope=f"grid e <= {result.e_max}, ℓ <= {result.ell_max}", reports=result.reports)
        if with_brauer:
            summary.reports.append(brauer_report(4, 3))
    summary.timings["total"] = round(time.perf_counter() - started, 6)
    if as_json:
        click.echo(summary.to_json())
    else:
        _echo_summary(summary)
    _exit_with(summary.passed)


@cli.command()
@click.option("--e", type=int, required=True)
@click.option("--ell", type=int, required=True)
@click.option("--top", type=int, default=1, show_default=True)
@click.option("--len", "length", type=int, required=True)
@click.option(
    "--ring",
    "ring_name",
    type=click.Choice(TestRingFactory.get_available_rings() + ["emitted"]),
    default=None,
    help="Test ring for the representability check ('emitted' checks R(Λ,V) itself)",
)
@click.option("--tangent", is_flag=True, help="Compare log_p |Def(V, k[ε])| with dim Ext^1")
@click.option(
    "--centralizer-lifting",
    "extension_name",
    type=click.Choice(SmallExtensionFactory.get_available_extensions()),
    default=None,
)
@click.option("--cap", type=int, default=None, help="Override ORACLE_MAX_CANDIDATES")
@common_options
@handle_errors
def oracle(e, ell, top, length, ring_name, tangent, extension_name, cap, as_json, log_level, p, workers):
    """Brute-force deformation counts over finite test rings"""
    p = p or settings.DEFAULT_PRIME
    spec = NakayamaSpec(e, ell)
    V = spec.module(top, length)
    presentation = udr_presentation(V, CoefficientDomainFactory.prime_field(p))
    started = time.perf_counter()
    reports = []
    if tangent:
        reports.append(tangent_report(V, p))
    if extension_name:
        extension = SmallExtensionFactory.create_extension(extension_name, p)
        reports.append(check_centralizer_lifting(V, presentation, extension, cap, workers))
    if ring_name or not reports:
        name = ring_name or "dual-numbers"
        R = emitted_ring(presentation, p) if name == "emitted" else TestRingFactory.create_ring(name, p)
        reports.append(check_representability(V, presentation, R, cap, workers))
    summary = VerificationSummary(scope=f"oracle for {V}", reports=reports)
    summary.timings["total"] = round(time.perf_counter() - started, 6)
    if as_json:
        click.echo(summary.to_json())
    else:
        for report in reports:
            for key, value in report.observations.items():
                click.echo(f"{key}: {value}")
        _echo_summary(summary)
    _exit_with(summary.passed)


@cli.command()
@click.option("--edges", type=int, required=True)
@click.option("--multiplicity", type=int, required=True)
@click.option("--distance", type=int, default=None, help="One distance; all valid distances when omitted")
@common_options
@handle_errors
def brauer(edges, multiplicity, distance, as_json, log_level, p, workers):
    """m_V for Brauer tree algebras with e edges and exceptional multiplicity m"""
    tree = BrauerTreeSpec(edges, multiplicity)
    distances = [distance] if distance is not None else tree.distances()
    records = [brauer_record(edges, multiplicity, d) for d in distances]
    if as_json:
        click.echo(TypeAdapter(List[BrauerRecord]).dump_json(records, by_alias=True, indent=2).decode())
    else:
        for record in records:
            ring_text = "k" if record.n == 0 else f"k[[t1..t{record.n}]]/({', '.join(record.generators)})"
            click.echo(f"d={record.distance}: n={record.n} i={record.i} mV={record.m_v}  {ring_text}")
    _exit_with(all(record.agrees_with_nakayama for record in records))


if __name__ == "__main__":
    cli()
