"""The extensions 0 -> V -> V_{n+s,i} ⊕ V_{n-s,i} -> V -> 0 and the dual-number lifts they define.

All modules here have top S_1; V = V_{n,i} has length ℓ_V = ne + i <= ℓ/2. The maps
β_{c,d}: V_{c,i} -> V_{d,i} send the top element to layer (d - c)e of V_{d,i} when
d >= c and to the top when d < c.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from config.setting import settings
from src.core.exceptions import IndexOutOfRangeError, VerificationError
from src.core.linalg import inverse_mod_p, rank_mod_p
from src.core.log import get_logger
from src.core.models import VerificationReport
from src.nakayama.algebra import NakayamaSpec, UniserialModule, normalize_module
from src.nakayama.representation import (
    MatrixRep,
    block_order,
    build_rho,
    chain_matrices,
    dual_number_strict_equivalence,
    uniserial_hom,
    verify_rep,
)
from src.ring.artin import TestRingFactory

logger = get_logger(__name__)


def _length(spec: NakayamaSpec, c: int, i: int) -> int:
    return c * spec.e + i


def beta_map(spec: NakayamaSpec, c: int, d: int, i: int) -> np.ndarray:
    """β_{c,d} on chain bases, shape (len V_{d,i}, len V_{c,i})"""
    source, target = _length(spec, c, i), _length(spec, d, i)
    if source == 0 or target == 0:
        return np.zeros((target, source), dtype=np.int64)
    offset = (d - c) * spec.e if d >= c else 0
    return uniserial_hom(UniserialModule(spec, 1, source), UniserialModule(spec, 1, target), offset)


def _direct_sum(first: List[np.ndarray], second: List[np.ndarray]) -> List[np.ndarray]:
    out = []
    for A, B in zip(first, second):
        a, b = A.shape[0], B.shape[0]
        block = np.zeros((a + b, a + b), dtype=np.int64)
        block[:a, :a] = A
        block[a:, a:] = B
        out.append(block)
    return out


def _chain_or_empty(spec: NakayamaSpec, length: int) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    if length == 0:
        empty = [np.zeros((0, 0), dtype=np.int64) for _ in range(spec.e)]
        return empty, list(empty)
    return chain_matrices(UniserialModule(spec, 1, length))


@dataclass
class ExtSequence:
    """One basis extension ℰ_s of V = V_{n,i} by itself, everything on chain bases over F_p"""

    module: UniserialModule
    s: int
    p: int
    iota: np.ndarray
    pi: np.ndarray
    middle_vertices: List[np.ndarray]
    middle_arrows: List[np.ndarray]
    lift: MatrixRep

    @property
    def spec(self) -> NakayamaSpec:
        return self.module.spec

    @property
    def n(self) -> int:
        return self.module.n

    @property
    def i(self) -> int:
        return self.module.i

    @property
    def epsilon(self) -> np.ndarray:
        """ε_s = ι_s ∘ π_s on the middle term"""
        return np.mod(self.iota @ self.pi, self.p)

    def verify(self) -> VerificationReport:
        p, V = self.p, self.module
        report = VerificationReport(subject=f"extension s={self.s} of {V} over GF({p})")
        vertices, arrows = chain_matrices(V)
        intertwines = all(
            np.array_equal(np.mod(self.iota @ A, p), np.mod(B @ self.iota, p))
            and np.array_equal(np.mod(A @ self.pi, p), np.mod(self.pi @ B, p))
            for A, B in zip(vertices + arrows, self.middle_vertices + self.middle_arrows)
        )
        report.add("ι_s and π_s are module maps", intertwines)
        report.add("ι_s injective", rank_mod_p(self.iota, p) == V.length)
        report.add("π_s surjective", rank_mod_p(self.pi, p) == V.length)
        report.add("π_s ∘ ι_s = 0", not np.any(np.mod(self.pi @ self.iota, p)))
        report.add("middle term has dimension 2ℓ_V", self.iota.shape[0] == 2 * V.length)
        report.add("ε_s ∘ ε_s = 0", not np.any(np.mod(self.epsilon @ self.epsilon, p)))
        report.extend(verify_rep(self.lift), prefix="lift: ")
        report.add("lift reduces to ρ_(n,i) mod ε", self.lift.residue() == build_rho(self.spec, self.n, self.i, p))
        derived = derived_dual_number_lift(self)
        report.add("middle term as k[ε]-module equals the lift", derived == self.lift)
        return report


def dual_number_lift(spec: NakayamaSpec, n: int, i: int, s: int, p: Optional[int] = None) -> MatrixRep:
    """ρ_{n,i,s}: ρ_{n,i} over k[ε] with the socle sent to ε·b_(v*+1, n-s+1) by α_{v*}, v* ≡ i mod e"""
    if not 1 <= s <= n:
        raise IndexOutOfRangeError(f"s={s} outside 1..{n}")
    p = p or settings.DEFAULT_PRIME
    ring = TestRingFactory.create_ring("dual-numbers", p)
    length = _length(spec, n, i)
    vertices, arrows = chain_matrices(UniserialModule(spec, 1, length))
    lifted_arrows = [ring.scalar_matrix(A) for A in arrows]
    star = spec.vertex(i)
    lifted_arrows[star - 1][_length(spec, n - s, i), length - 1, 1] = 1
    rep = MatrixRep(spec, ring, [ring.scalar_matrix(E) for E in vertices], lifted_arrows)
    rep = rep.permuted(block_order(spec.e, n, i))
    rep.label = f"rho({n},{i},{s}) over {spec}"
    return rep


def build_ext_basis_sequences(V: UniserialModule, s: int, p: Optional[int] = None) -> ExtSequence:
    """ℰ_s for the normalized form of V, with ι_s = (β_{n,n+s}; -β_{n,n-s}) and π_s = (β_{n+s,n}, β_{n-s,n})"""
    W, _, _ = normalize_module(V)
    n, i, spec = W.n, W.i, W.spec
    if not 1 <= s <= n:
        raise IndexOutOfRangeError(f"s={s} outside 1..{n}")
    p = p or settings.DEFAULT_PRIME
    upper_vertices, upper_arrows = _chain_or_empty(spec, _length(spec, n + s, i))
    lower_vertices, lower_arrows = _chain_or_empty(spec, _length(spec, n - s, i))
    iota = np.mod(np.vstack([beta_map(spec, n, n + s, i), -beta_map(spec, n, n - s, i)]), p)
    pi = np.mod(np.hstack([beta_map(spec, n + s, n, i), beta_map(spec, n - s, n, i)]), p)
    sequence = ExtSequence(
        module=W,
        s=s,
        p=p,
        iota=iota,
        pi=pi,
        middle_vertices=_direct_sum(upper_vertices, lower_vertices),
        middle_arrows=_direct_sum(upper_arrows, lower_arrows),
        lift=dual_number_lift(spec, n, i, s, p),
    )
    logger.debug("ext_sequence_built", module=str(W), s=s, middle_dimension=iota.shape[0])
    return sequence


def derived_dual_number_lift(sequence: ExtSequence) -> MatrixRep:
    """The middle term as a free k[ε]-module with ε acting by ε_s, on the basis f_k = (c_k, 0), εf_k"""
    p, V = sequence.p, sequence.module
    L = V.length
    section = np.zeros((sequence.iota.shape[0], L), dtype=np.int64)
    section[np.arange(L), np.arange(L)] = 1
    basis = np.hstack([section, np.mod(sequence.epsilon @ section, p)])
    inverse = inverse_mod_p(basis, p)
    ring = TestRingFactory.create_ring("dual-numbers", p)

    def over_dual_numbers(X: np.ndarray) -> np.ndarray:
        C = np.mod(inverse @ X @ basis, p)
        if np.any(C[:L, L:]) or not np.array_equal(C[L:, L:], C[:L, :L]):
            raise VerificationError(f"action on the middle term of ℰ_{sequence.s} is not k[ε]-linear")
        out = np.zeros((L, L, 2), dtype=np.int64)
        out[..., 0] = C[:L, :L]
        out[..., 1] = C[L:, :L]
        return out

    rep = MatrixRep(
        V.spec,
        ring,
        [over_dual_numbers(E) for E in sequence.middle_vertices],
        [over_dual_numbers(A) for A in sequence.middle_arrows],
    )
    rep = rep.permuted(block_order(V.spec.e, V.n, V.i))
    rep.label = f"middle term of E_{sequence.s} for {V}"
    return rep


def verify_dual_number_lifts_independent(V: UniserialModule, p: Optional[int] = None) -> VerificationReport:
    """The lifts ρ_{n,i,s}, s = 1..n, are pairwise not strictly equivalent over k[ε]"""
    W, _, _ = normalize_module(V)
    p = p or settings.DEFAULT_PRIME
    report = VerificationReport(subject=f"dual-number lifts of {W} over GF({p})")
    lifts = [dual_number_lift(W.spec, W.n, W.i, s, p) for s in range(1, W.n + 1)]
    for a in range(len(lifts)):
        for b in range(a + 1, len(lifts)):
            equivalent = dual_number_strict_equivalence(lifts[a], lifts[b]) is not None
            report.add(f"rho_s{a + 1} not strictly equivalent to rho_s{b + 1}", not equivalent)
    return report
