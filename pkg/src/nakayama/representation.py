"""Matrix representations of N(e, ℓ)-modules over finite local test rings."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.setting import settings
from src.core.exceptions import DimensionMismatchError, IndexOutOfRangeError, ZeroModuleError
from src.core.linalg import solve_mod_p
from src.core.models import VerificationReport
from src.nakayama.algebra import NakayamaSpec, UniserialModule, theta
from src.ring.artin import ArtinTestRing, TestRingFactory


@dataclass
class MatrixRep:
    """Images of the vertex idempotents and arrows, as (dim, dim, d) arrays over `ring`"""

    spec: NakayamaSpec
    ring: ArtinTestRing
    vertex_mats: List[np.ndarray]
    arrow_mats: List[np.ndarray]
    label: str = field(default="")

    def __post_init__(self):
        e = self.spec.e
        if len(self.vertex_mats) != e or len(self.arrow_mats) != e:
            raise DimensionMismatchError(f"need {e} vertex and {e} arrow matrices")
        shape = (self.dim, self.dim, self.ring.dimension)
        for matrix in list(self.vertex_mats) + list(self.arrow_mats):
            if matrix.shape != shape:
                raise DimensionMismatchError(f"matrix of shape {matrix.shape}, expected {shape}")

    @classmethod
    def over_field(
        cls,
        spec: NakayamaSpec,
        vertex_mats: Sequence[np.ndarray],
        arrow_mats: Sequence[np.ndarray],
        p: Optional[int] = None,
        label: str = "",
    ) -> "MatrixRep":
        ring = TestRingFactory.create_ring("fp", p or settings.DEFAULT_PRIME)
        return cls(
            spec,
            ring,
            [ring.scalar_matrix(m) for m in vertex_mats],
            [ring.scalar_matrix(m) for m in arrow_mats],
            label,
        )

    @property
    def dim(self) -> int:
        return self.vertex_mats[0].shape[0]

    @property
    def p(self) -> int:
        return self.ring.p

    def vertex(self, v: int) -> np.ndarray:
        return self.vertex_mats[self.spec.vertex(v) - 1]

    def arrow(self, v: int) -> np.ndarray:
        return self.arrow_mats[self.spec.vertex(v) - 1]

    def generators(self) -> List[np.ndarray]:
        return list(self.vertex_mats) + list(self.arrow_mats)

    def field_vertices(self) -> List[np.ndarray]:
        return [self.ring.residue(m) for m in self.vertex_mats]

    def field_arrows(self) -> List[np.ndarray]:
        return [self.ring.residue(m) for m in self.arrow_mats]

    def residue(self) -> "MatrixRep":
        return MatrixRep.over_field(self.spec, self.field_vertices(), self.field_arrows(), self.p, self.label)

    def base_change(self, ring: ArtinTestRing) -> "MatrixRep":
        """Scalar extension of a field representation to a test ring"""
        if ring.p != self.p:
            raise DimensionMismatchError(f"characteristic {ring.p} vs {self.p}")
        return MatrixRep(
            self.spec,
            ring,
            [ring.scalar_matrix(m) for m in self.field_vertices()],
            [ring.scalar_matrix(m) for m in self.field_arrows()],
            self.label,
        )

    def path(self, v: int, length: int) -> np.ndarray:
        """Image of α_{v+length-1} ... α_{v+1} α_v"""
        product = self.ring.identity_matrix(self.dim)
        for step in range(length):
            product = self.ring.matmul(self.arrow(v + step), product)
        return product

    def permuted(self, order: Sequence[int]) -> "MatrixRep":
        """Representation on the reordered basis: new basis vector j is old basis vector order[j]"""
        index = np.asarray(order, dtype=np.int64)
        return MatrixRep(
            self.spec,
            self.ring,
            [m[np.ix_(index, index)] for m in self.vertex_mats],
            [m[np.ix_(index, index)] for m in self.arrow_mats],
            self.label,
        )

    def key(self) -> Tuple[int, ...]:
        return tuple(int(x) for m in self.arrow_mats for x in m.ravel())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixRep):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.ring.labels == other.ring.labels
            and self.p == other.p
            and self.dim == other.dim
            and all(np.array_equal(a, b) for a, b in zip(self.generators(), other.generators()))
        )


def chain_matrices(V: UniserialModule) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    """F_p matrices of V on its radical-layer basis c_0, ..., c_(len-1)"""
    e, L = V.spec.e, V.length
    vertices = [np.zeros((L, L), dtype=np.int64) for _ in range(e)]
    arrows = [np.zeros((L, L), dtype=np.int64) for _ in range(e)]
    for k in range(L):
        v = V.layer_vertex(k)
        vertices[v - 1][k, k] = 1
        if k + 1 < L:
            arrows[v - 1][k + 1, k] = 1
    return vertices, arrows


def chain_representation(V: UniserialModule, p: Optional[int] = None) -> MatrixRep:
    vertices, arrows = chain_matrices(V)
    return MatrixRep.over_field(V.spec, vertices, arrows, p, label=str(V))


def block_order(e: int, n: int, i: int) -> List[int]:
    """Chain index of each block-basis vector b_(v,w), blocks v = 1..e in turn"""
    return [(w - 1) * e + v - 1 for v in range(1, e + 1) for w in range(1, theta(v, n, i) + 1)]


def block_slices(e: int, n: int, i: int) -> List[List[int]]:
    """Positions of block v's basis vectors in the block basis"""
    out, start = [], 0
    for v in range(1, e + 1):
        size = theta(v, n, i)
        out.append(list(range(start, start + size)))
        start += size
    return out


def build_rho(spec: NakayamaSpec, n: int, i: int, p: Optional[int] = None) -> MatrixRep:
    """ρ_{n,i} on the block basis: vertex v acts on a θ(v,n,i)-dimensional block.

    α_v sends b_(v,w) to b_(v+1,w) for v < e and b_(e,w) to b_(1,w+1).
    """
    if not 0 <= i < spec.e:
        raise IndexOutOfRangeError(f"i={i} outside 0..{spec.e - 1}")
    length = n * spec.e + i
    if length == 0:
        raise ZeroModuleError("ℓ_{n,i} = 0 is the zero module")
    if length > spec.ell:
        raise IndexOutOfRangeError(f"ℓ_(n,i) = {length} exceeds ℓ = {spec.ell}")
    rep = chain_representation(UniserialModule(spec, 1, length), p).permuted(block_order(spec.e, n, i))
    rep.label = f"rho({n},{i}) over {spec}"
    return rep


def verify_rep(rep: MatrixRep) -> VerificationReport:
    """Idempotent, arrow-compatibility and length-ℓ path relations"""
    R, e, dim = rep.ring, rep.spec.e, rep.dim
    report = VerificationReport(subject=rep.label or f"representation of {rep.spec}")
    zero = np.zeros((dim, dim, R.dimension), dtype=np.int64)
    for v in range(1, e + 1):
        E = rep.vertex(v)
        report.add(f"e{v}^2 = e{v}", np.array_equal(R.matmul(E, E), E))
        for w in range(1, e + 1):
            if w != v:
                report.add(f"e{v} e{w} = 0", np.array_equal(R.matmul(E, rep.vertex(w)), zero))
    total = sum(rep.vertex_mats, zero) % rep.p
    report.add("sum of idempotents = 1", np.array_equal(total, R.identity_matrix(dim)))
    for v in range(1, e + 1):
        A = rep.arrow(v)
        framed = R.matmul(R.matmul(rep.vertex(v + 1), A), rep.vertex(v))
        report.add(f"e{rep.spec.vertex(v + 1)} alpha{v} e{v} = alpha{v}", np.array_equal(framed, A))
    for v in range(1, e + 1):
        report.add(f"path of length {rep.spec.ell} from vertex {v} vanishes", np.array_equal(rep.path(v, rep.spec.ell), zero))
    return report


def uniserial_hom(M: UniserialModule, W: UniserialModule, offset: int) -> np.ndarray:
    """The map M -> W sending the top of M to layer `offset` of W, on chain bases (dim W x dim M)"""
    if M.spec != W.spec:
        raise DimensionMismatchError("modules over different algebras")
    if not 0 <= offset < W.length:
        raise IndexOutOfRangeError(f"offset {offset} outside 0..{W.length - 1}")
    if W.layer_vertex(offset) != M.top:
        raise IndexOutOfRangeError(f"layer {offset} of {W} is not at vertex {M.top}")
    if offset + M.length < W.length:
        raise IndexOutOfRangeError(f"{M} cannot map onto the bottom {W.length - offset} layers of {W}")
    matrix = np.zeros((W.length, M.length), dtype=np.int64)
    for k in range(M.length):
        if offset + k < W.length:
            matrix[offset + k, k] = 1
    return matrix


def commutator_system(first: Sequence[np.ndarray], second: Sequence[np.ndarray]) -> np.ndarray:
    """Coefficients of X -> (X A - B X) over all pairs (A in first, B in second), X row-major (dim B x dim A)"""
    rows = []
    for A, B in zip(first, second):
        a, b = A.shape[0], B.shape[0]
        rows.append(np.kron(np.eye(b, dtype=np.int64), A.T) - np.kron(B, np.eye(a, dtype=np.int64)))
    return np.vstack(rows) if rows else np.zeros((0, 0), dtype=np.int64)


def dual_number_strict_equivalence(first: MatrixRep, second: MatrixRep) -> Optional[np.ndarray]:
    """X with (I + εX) first (I - εX) = second over k[ε], or None.

    Both representations must share their reduction mod ε.
    """
    if first.ring.dimension != 2 or second.ring.dimension != 2 or first.dim != second.dim:
        raise DimensionMismatchError("strict equivalence over k[ε] compares two k[ε]-representations")
    p = first.p
    base = [m[..., 0] for m in first.generators()]
    if any(not np.array_equal(a, b[..., 0]) for a, b in zip(base, second.generators())):
        return None
    # X ρ - ρ X = B' - B for every generator
    system = commutator_system(base, base)
    rhs = np.concatenate(
        [(b[..., 1] - a[..., 1]).ravel() for a, b in zip(first.generators(), second.generators())]
    )
    solution = solve_mod_p(system, rhs, p)
    return None if solution is None else solution.reshape(first.dim, first.dim)
