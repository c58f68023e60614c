"""Exhaustive enumeration of lifts of a field representation over a finite test ring.

Vertex idempotents are pinned to the base idempotents; every lift class has such a
representative because idempotents lift uniquely up to conjugation along a nilpotent
kernel. An arrow α_v may then only move inside its block (v+1, v), by an element of
Mat(m_R).
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.setting import settings
from src.core.exceptions import DimensionMismatchError, ResourceCapError, UnsupportedModeError
from src.core.linalg import nullspace_mod_p
from src.core.log import get_logger
from src.core.models import LiftMethod
from src.nakayama.representation import MatrixRep
from src.ring.artin import ArtinTestRing

logger = get_logger(__name__)

# (arrow index, row, column, maximal-ideal basis index)
Parameter = Tuple[int, int, int, int]


@dataclass
class LiftCandidate:
    """Arrow images over R, shape (e, dim, dim, d), reducing to `base` modulo m_R"""

    base: MatrixRep
    ring: ArtinTestRing
    arrows: np.ndarray

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.arrows.ravel())

    def to_rep(self) -> MatrixRep:
        R = self.ring
        return MatrixRep(
            self.base.spec,
            R,
            [R.scalar_matrix(E) for E in self.base.field_vertices()],
            list(self.arrows),
            label=f"lift of {self.base.label} over {R.name}",
        )


def vertex_blocks(base: MatrixRep) -> List[List[int]]:
    """Basis positions of each vertex; idempotents must be diagonal 0/1 matrices"""
    blocks = []
    for E in base.field_vertices():
        if np.any(E - np.diag(np.diag(E))):
            raise UnsupportedModeError("lift enumeration needs diagonal vertex idempotents")
        blocks.append([int(k) for k in np.nonzero(np.diag(E))[0]])
    return blocks


def free_parameters(base: MatrixRep, R: ArtinTestRing) -> List[Parameter]:
    blocks = vertex_blocks(base)
    e = base.spec.e
    params = []
    for v in range(e):
        for r in blocks[(v + 1) % e]:
            for c in blocks[v]:
                params.extend((v, r, c, k) for k in R.maximal_ideal)
    return params


def _base_arrows(base: MatrixRep, R: ArtinTestRing) -> np.ndarray:
    return np.stack([R.scalar_matrix(A) for A in base.field_arrows()])


def _paths_vanish(arrows: np.ndarray, R: ArtinTestRing, ell: int) -> np.ndarray:
    """Boolean mask over a batch (..., e, dim, dim, d): every length-ℓ path is zero"""
    e, dim = arrows.shape[-4], arrows.shape[-3]
    alive = np.ones(arrows.shape[:-4], dtype=bool)
    for v in range(e):
        product = np.broadcast_to(R.identity_matrix(dim), arrows.shape[:-4] + (dim, dim, R.dimension)).copy()
        for step in range(ell):
            product = R.matmul(arrows[..., (v + step) % e, :, :, :], product)
        alive &= ~np.any(product.reshape(product.shape[:-3] + (-1,)), axis=-1)
    return alive


def _scan(
    base_arrows: np.ndarray, R: ArtinTestRing, params: Sequence[Parameter], ell: int, start: int, stop: int, batch: int
) -> List[np.ndarray]:
    """Surviving arrow arrays for candidate indices start..stop-1 (digit j of the index is parameter j)"""
    p = R.p
    index = np.array([(v, r, c, k) for v, r, c, k in params], dtype=np.int64).reshape(-1, 4)
    powers = p ** np.arange(len(params), dtype=np.int64)
    found = []
    for lo in range(start, stop, batch):
        hi = min(lo + batch, stop)
        ids = np.arange(lo, hi, dtype=np.int64)
        digits = (ids[:, None] // powers[None, :]) % p
        arrows = np.broadcast_to(base_arrows, (hi - lo,) + base_arrows.shape).copy()
        for j, (v, r, c, k) in enumerate(index):
            arrows[:, v, r, c, k] = (arrows[:, v, r, c, k] + digits[:, j]) % p
        alive = _paths_vanish(arrows, R, ell)
        found.extend(arrows[alive])
    return found


def _linearized_paths(base: MatrixRep, positions: Sequence[Tuple[int, int, int]]) -> np.ndarray:
    """F_p matrix of X -> d(path products) at the base, one column per (v, r, c) position"""
    A = [np.asarray(m, dtype=np.int64) for m in base.field_arrows()]
    e, dim, ell, p = base.spec.e, base.dim, base.spec.ell, base.p
    columns = []
    for v0, r, c in positions:
        X = np.zeros((dim, dim), dtype=np.int64)
        X[r, c] = 1
        blocks = []
        for v in range(e):
            total = np.zeros((dim, dim), dtype=np.int64)
            for step in range(ell):
                if (v + step) % e != v0:
                    continue
                left = np.eye(dim, dtype=np.int64)
                for later in range(step + 1, ell):
                    left = A[(v + later) % e] @ left
                right = np.eye(dim, dtype=np.int64)
                for earlier in range(step):
                    right = A[(v + earlier) % e] @ right
                total = total + left @ X @ right
            blocks.append(np.mod(total, p).ravel())
        columns.append(np.concatenate(blocks))
    return np.stack(columns, axis=1) if columns else np.zeros((0, 0), dtype=np.int64)


def _square_zero_lifts(base: MatrixRep, R: ArtinTestRing, params: Sequence[Parameter], cap: int) -> List[np.ndarray]:
    """m_R^2 = 0: the relations are linear in the perturbation, separately for each m_R basis vector"""
    positions = sorted({(v, r, c) for v, r, c, _ in params})
    p = R.p
    kernel = nullspace_mod_p(_linearized_paths(base, positions), p, ncols=len(positions))
    nullity = kernel.shape[0]
    total = p ** (nullity * R.maximal_ideal_dimension)
    if total > cap:
        raise ResourceCapError("square-zero lift count", total, cap)
    base_arrows = _base_arrows(base, R)
    lifts = []
    powers = p ** np.arange(nullity * R.maximal_ideal_dimension, dtype=np.int64)
    for index in range(total):
        digits = (index // powers) % p
        arrows = base_arrows.copy()
        for slot, k in enumerate(R.maximal_ideal):
            combination = np.mod(digits[slot * nullity:(slot + 1) * nullity] @ kernel, p) if nullity else []
            for (v, r, c), x in zip(positions, combination):
                arrows[v, r, c, k] = (arrows[v, r, c, k] + x) % p
        lifts.append(arrows)
    return lifts


def enumerate_lifts(
    base: MatrixRep,
    R: ArtinTestRing,
    cap: Optional[int] = None,
    method: Optional[LiftMethod] = None,
    workers: Optional[int] = None,
) -> List[LiftCandidate]:
    """Every lift of `base` over R with pinned idempotents, in increasing candidate order"""
    if base.ring.dimension != 1:
        raise DimensionMismatchError("the base representation must be over the residue field")
    if base.p != R.p:
        raise DimensionMismatchError(f"base over GF({base.p}), test ring over GF({R.p})")
    cap = cap if cap is not None else settings.ORACLE_MAX_CANDIDATES
    workers = workers or settings.MAX_WORKERS
    params = free_parameters(base, R)
    if method is None:
        method = LiftMethod.SQUARE_ZERO_LINEAR if R.is_square_zero else LiftMethod.EXHAUSTIVE

    if method == LiftMethod.SQUARE_ZERO_LINEAR:
        if not R.is_square_zero:
            raise UnsupportedModeError(f"{R.name} is not square-zero")
        arrays = _square_zero_lifts(base, R, params, cap)
        total = len(arrays)
    else:
        total = R.p ** len(params)
        if total > cap:
            raise ResourceCapError(f"lift candidates over {R.name} ({len(params)} free parameters)", total, cap)
        arrays = _exhaustive(base, R, params, total, workers)

    lifts = [LiftCandidate(base, R, arrows) for arrows in arrays]
    lifts.sort(key=lambda lift: lift.key)
    logger.debug(
        "lift_enumeration_finished",
        base=base.label,
        ring=R.name,
        method=method.value,
        parameters=len(params),
        candidates=total,
        lifts=len(lifts),
    )
    return lifts


def _exhaustive(
    base: MatrixRep, R: ArtinTestRing, params: Sequence[Parameter], total: int, workers: int
) -> List[np.ndarray]:
    base_arrows = _base_arrows(base, R)
    batch = settings.ORACLE_BATCH_SIZE
    ell = base.spec.ell
    if workers <= 1 or not params:
        return _scan(base_arrows, R, params, ell, 0, total, batch)
    # one slice per value of the most significant parameter
    width = total // R.p
    found = {}
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {
            executor.submit(_scan, base_arrows, R, params, ell, lead * width, (lead + 1) * width, batch): lead
            for lead in range(R.p)
        }
        for future in as_completed(futures):
            found[futures[future]] = future.result()
    return [arrows for lead in sorted(found) for arrows in found[lead]]
