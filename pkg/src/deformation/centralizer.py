"""Centralizer of the universal lift inside matrices over R = k[[t]]/J_{n,i}.

The centralizer is free of rank θ(1,n,i) over R: it consists of the block-diagonal
matrices whose blocks are M(c) (blocks 1..i, or all blocks when i = 0) and M'(c)
(blocks i+1..e), where M(c) has columns c, Mc, M^2 c, ... for M = N_n (i = 0) or
Ñ_n (i >= 1), and M'(c) is M(c) without its first row and column.

Both sides are graded: basis vector b with radical layer k gets potential k/e, so
lift entries are homogeneous and the commuting condition splits into one linear
system per integer shift δ.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.setting import settings
from src.core.exceptions import ResourceCapError
from src.core.linalg import rank_mod_p
from src.core.log import get_logger
from src.core.models import CoefficientMode, VerificationReport
from src.defo.poly_matrix import PolyMatrix
from src.defo.structured import build_nn, build_nn_tilde
from src.deformation.lift import UniversalLift
from src.nakayama.algebra import theta
from src.nakayama.representation import block_order, block_slices
from src.ring.coefficients import CoefficientDomain, CoefficientDomainFactory
from src.ring.quotient import QuotientModel, QuotientModelBuilder

logger = get_logger(__name__)


@dataclass
class CentralizerDescription:
    n: int
    i: int
    theta_1: int
    quotient_dimension: int
    block_kinds: List[str]
    solved_dimension: Optional[int] = None
    piece_dimensions: Dict[int, int] = field(default_factory=dict)

    @property
    def expected_dimension(self) -> int:
        return self.theta_1 * self.quotient_dimension


def recipe_matrix(lift: UniversalLift, model: QuotientModel, c: List) -> PolyMatrix:
    """Block-diagonal M(c) / M'(c) matrix for c in R^θ(1), on the lift's block basis"""
    ring = model.ring
    n, i, e = lift.n, lift.i, lift.spec.e
    M = build_nn(n, ring) if i == 0 else build_nn_tilde(n, ring)
    size = M.rows
    column = PolyMatrix(ring, [[entry] for entry in c])
    columns = []
    for _ in range(size):
        columns.append([model.normal_form(column[r, 0]) for r in range(size)])
        column = (M @ column).map_entries(model.normal_form)
    full = PolyMatrix(ring, [[columns[b][a] for b in range(size)] for a in range(size)])
    primed = full.block(range(1, size), range(1, size))

    out = [[ring.zero() for _ in range(lift.dim)] for _ in range(lift.dim)]
    for v, positions in enumerate(block_slices(e, n, i), start=1):
        block = full if (i == 0 or v <= i) else primed
        for a, row in enumerate(positions):
            for b, col in enumerate(positions):
                out[row][col] = block[a, b]
    return PolyMatrix(ring, out)


def _commutes(X: PolyMatrix, lift: UniversalLift, model: QuotientModel) -> bool:
    for A in lift.vertex_mats + lift.arrow_mats:
        if not (X @ A - A @ X).map_entries(model.normal_form).is_zero:
            return False
    return True


def _solve_pieces(lift: UniversalLift, model: QuotientModel, max_unknowns: int) -> Dict[int, int]:
    """Nullity of the commuting system in each shift δ"""
    p = model.coefficients.p
    e, n, i = lift.spec.e, lift.n, lift.i
    chain_index = block_order(e, n, i)
    potential = [Fraction(k, e) for k in chain_index]
    witness = model.degree_bound
    by_weight: Dict[int, List] = {}
    for s in model.standard_monomials:
        by_weight.setdefault(model.ring.degree(s), []).append(s)
    blocks = block_slices(e, n, i)
    leaving: Dict[int, List[Tuple[int, int, int]]] = {}
    entering: Dict[int, List[Tuple[int, int, int]]] = {}
    for g, A in enumerate(lift.arrow_mats):
        for r, c, _ in A.nonzero_items():
            leaving.setdefault(r, []).append((g, r, c))
            entering.setdefault(c, []).append((g, r, c))
    products: Dict[Tuple, Dict] = {}

    def coords(s, g, r, c):
        key = (s, g, r, c)
        if key not in products:
            entry = lift.arrow_mats[g][r, c]
            products[key] = model.coordinates(model.basis_element(s) * entry)
        return products[key]

    spread = lift.dim // e + 1
    pieces: Dict[int, int] = {}
    for delta in range(-spread, witness + spread + 1):
        unknowns = []
        for positions in blocks:
            for a in positions:
                for b in positions:
                    weight = potential[b] - potential[a] + delta
                    if weight.denominator == 1 and 0 <= weight < witness:
                        unknowns.extend((a, b, s) for s in by_weight.get(int(weight), []))
        if not unknowns:
            continue
        if len(unknowns) > max_unknowns:
            raise ResourceCapError(
                f"centralizer piece δ={delta} of ({n},{i}) over {lift.spec}", len(unknowns), max_unknowns
            )
        rows: Dict[Tuple, int] = {}
        entries: List[Tuple[int, int, int]] = []
        for col, (a, b, s) in enumerate(unknowns):
            # (X A)[a, c] += X[a, b] A[b, c]
            for g, r, c in leaving.get(b, []):
                for t, value in coords(s, g, r, c).items():
                    entries.append((rows.setdefault((g, a, c, t), len(rows)), col, int(value)))
            # (A X)[r, b] += A[r, a] X[a, b]
            for g, r, c in entering.get(a, []):
                for t, value in coords(s, g, r, c).items():
                    entries.append((rows.setdefault((g, r, b, t), len(rows)), col, -int(value)))
        system = np.zeros((max(len(rows), 1), len(unknowns)), dtype=np.int64)
        for r, c, value in entries:
            system[r, c] += value
        pieces[delta] = len(unknowns) - rank_mod_p(system, p)
    return pieces


def centralizer_structure(
    lift: UniversalLift,
    coefficients: Optional[CoefficientDomain] = None,
    max_unknowns: Optional[int] = None,
) -> Tuple[CentralizerDescription, VerificationReport]:
    coefficients = coefficients or CoefficientDomainFactory.prime_field(settings.DEFAULT_PRIME)
    if coefficients.mode != CoefficientMode.PRIME:
        coefficients = CoefficientDomainFactory.prime_field(settings.DEFAULT_PRIME)
    cap = max_unknowns if max_unknowns is not None else settings.CENTRALIZER_MAX_UNKNOWNS
    builder = QuotientModelBuilder.shared(lift.ideal, coefficients)
    dimension, witness = builder.stabilized(lift.m_v)
    model = builder.build(witness)
    local = lift.with_ring(model.ring)
    n, i, e = lift.n, lift.i, lift.spec.e
    theta_1 = theta(1, n, i)

    description = CentralizerDescription(
        n=n,
        i=i,
        theta_1=theta_1,
        quotient_dimension=dimension,
        block_kinds=["M" if (i == 0 or v <= i) else "M'" for v in range(1, e + 1)],
    )
    report = VerificationReport(subject=f"centralizer ({n},{i}) over {lift.spec}, {coefficients.label}")

    ring = model.ring
    identity = PolyMatrix.identity(ring, lift.dim)
    report.add("identity in centralizer", _commutes(identity, local, model))
    scalars = all(_commutes(identity.scale(ring.variable(j)), local, model) for j in range(1, n + 1))
    report.add("t_j I in centralizer", scalars)

    recipe_ok, injective = True, True
    for j in range(theta_1):
        c = [ring.one() if r == j else ring.zero() for r in range(theta_1)]
        X = recipe_matrix(local, model, c)
        recipe_ok &= _commutes(X, local, model)
        first = block_slices(e, n, i)[0]
        injective &= all(X[first[r], first[0]] == c[r] for r in range(theta_1))
    report.add("block matrices M(c) / M'(c) commute with the lift", recipe_ok, " ".join(description.block_kinds))
    report.add("c is the first column of the first block", injective)

    description.piece_dimensions = _solve_pieces(local, model, cap)
    description.solved_dimension = sum(description.piece_dimensions.values())
    report.add(
        "centralizer k-dimension = θ(1)·dim R",
        description.solved_dimension == description.expected_dimension,
        f"{description.solved_dimension} vs {theta_1}·{dimension}",
    )
    logger.debug(
        "centralizer_solved",
        n=n,
        i=i,
        spec=str(lift.spec),
        solved=description.solved_dimension,
        pieces=len(description.piece_dimensions),
    )
    return description, report
