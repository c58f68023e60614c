"""Strict equivalence of lifts: conjugation by matrices congruent to I modulo m_R.

Lifts with pinned idempotents are only conjugated by the block-diagonal part G⁰
of G_R; orbits under G_R and under G⁰ coincide.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.setting import settings
from src.core.exceptions import ResourceCapError, VerificationError
from src.core.linalg import nullspace_mod_p, rank_mod_p
from src.core.log import get_logger
from src.oracle.lifts import LiftCandidate, vertex_blocks
from src.ring.artin import ArtinTestRing

logger = get_logger(__name__)


@dataclass
class StrictEquivClass:
    representative: LiftCandidate
    members: List[LiftCandidate] = field(default_factory=list)

    @property
    def orbit_size(self) -> int:
        return len(self.members)

    @property
    def key(self) -> Tuple[int, ...]:
        return self.representative.key


def block_positions(lift: LiftCandidate) -> List[Tuple[int, int]]:
    """Entries (a, b) with a, b at the same vertex"""
    return [(a, b) for block in vertex_blocks(lift.base) for a in block for b in block]


def group_order(lift: LiftCandidate) -> int:
    """|G⁰_R| = p^((d - 1) Σ θ_v^2)"""
    R = lift.ring
    return R.p ** (R.maximal_ideal_dimension * len(block_positions(lift)))


def _unit_matrices(lift: LiftCandidate) -> np.ndarray:
    """E_ab ⊗ m_k for every block position and maximal-ideal basis vector, shape (u, dim, dim, d)"""
    R, dim = lift.ring, lift.base.dim
    units = []
    for a, b in block_positions(lift):
        for k in R.maximal_ideal:
            U = np.zeros((dim, dim, R.dimension), dtype=np.int64)
            U[a, b, k] = 1
            units.append(U)
    if not units:
        return np.zeros((0, dim, dim, R.dimension), dtype=np.int64)
    return np.stack(units)


def _commutant_system(lift: LiftCandidate) -> np.ndarray:
    """F_p matrix of X -> X τ - τ X on block-diagonal X over m_R, one column per unit matrix"""
    R = lift.ring
    units = _unit_matrices(lift)
    tau = lift.arrows
    commutators = R.matmul(units[:, None], tau[None]) - R.matmul(tau[None], units[:, None])
    return np.mod(commutators.reshape(len(units), -1).T, R.p)


def commutant_basis(lift: LiftCandidate) -> np.ndarray:
    """Rows: coordinates over the unit matrices of a basis of {X ∈ Mat_bd(m_R) : X τ = τ X}"""
    size = len(block_positions(lift)) * lift.ring.maximal_ideal_dimension
    if not size:
        return np.zeros((0, 0), dtype=np.int64)
    return nullspace_mod_p(_commutant_system(lift), lift.ring.p, ncols=size)


def stabilizer_dimension(lift: LiftCandidate) -> int:
    """dim over F_p of {X ∈ Mat_bd(m_R) : X τ = τ X}; |Stab(τ)| = p^this"""
    size = len(block_positions(lift)) * lift.ring.maximal_ideal_dimension
    if not size:
        return 0
    return size - rank_mod_p(_commutant_system(lift), lift.ring.p)


def _inverse(R: ArtinTestRing, C: np.ndarray) -> np.ndarray:
    """(I + N)^-1 = Σ (-N)^k for N over m_R"""
    dim = C.shape[0]
    identity = R.identity_matrix(dim)
    N = np.mod(C - identity, R.p)
    term, total = identity, identity.copy()
    while np.any(term):
        term = np.mod(-R.matmul(term, N), R.p)
        total = np.mod(total + term, R.p)
    return total


def _generators(lift: LiftCandidate) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Pairs (C, C^-1) for C = I + c·m_k·E_ab, c = 1..p-1; they generate G⁰"""
    R, dim = lift.ring, lift.base.dim
    pairs = []
    for a, b in block_positions(lift):
        for k in R.maximal_ideal:
            for c in range(1, R.p):
                C = R.identity_matrix(dim)
                C[a, b, k] = (C[a, b, k] + c) % R.p
                pairs.append((C, _inverse(R, C)))
    return pairs


def strict_equiv_classes(lifts: Sequence[LiftCandidate], max_group: Optional[int] = None) -> List[StrictEquivClass]:
    """Conjugation orbits by union-find over generators of G⁰; classes sorted by representative"""
    if not lifts:
        return []
    cap = max_group if max_group is not None else settings.ORACLE_MAX_GROUP
    order = group_order(lifts[0])
    if order > cap:
        raise ResourceCapError(f"group G⁰ over {lifts[0].ring.name}", order, cap)

    R = lifts[0].ring
    index: Dict[bytes, int] = {lift.arrows.tobytes(): k for k, lift in enumerate(lifts)}
    parent = list(range(len(lifts)))

    def find(k: int) -> int:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    stacked = np.stack([lift.arrows for lift in lifts])
    for C, C_inv in _generators(lifts[0]):
        conjugated = R.matmul(R.matmul(C, stacked), C_inv)
        for k, image in enumerate(conjugated):
            target = index.get(np.ascontiguousarray(image, dtype=stacked.dtype).tobytes())
            if target is None:
                raise VerificationError("conjugate of a lift is not in the enumerated lift set")
            a, b = find(k), find(target)
            if a != b:
                parent[max(a, b)] = min(a, b)

    orbits: Dict[int, List[LiftCandidate]] = {}
    for k, lift in enumerate(lifts):
        orbits.setdefault(find(k), []).append(lift)
    classes = [
        StrictEquivClass(representative=min(members, key=lambda lift: lift.key), members=members)
        for members in orbits.values()
    ]
    classes.sort(key=lambda cls: cls.key)
    logger.debug("strict_classes_found", ring=R.name, lifts=len(lifts), classes=len(classes), group=order)
    return classes


def count_strict_classes(lifts: Sequence[LiftCandidate]) -> int:
    """Orbit count by orbit–stabilizer: Σ_τ |Stab(τ)| / |G⁰|"""
    if not lifts:
        return 0
    R = lifts[0].ring
    order = group_order(lifts[0])
    total = sum(Fraction(R.p ** stabilizer_dimension(lift), order) for lift in lifts)
    if total.denominator != 1:
        raise VerificationError(f"orbit-stabilizer sum {total} is not an integer")
    return int(total)
