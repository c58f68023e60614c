"""Self-injective Nakayama algebras N(e, ℓ) = kQ_e / J^ℓ and their uniserial modules.

Vertices are 1..e; the arrow α_v goes from v to v+1 (indices mod e). A uniserial
module is fixed by its top vertex and its length; its composition factors run
S_top, S_top+1, ... downwards.
"""

from dataclasses import dataclass
from typing import List, Tuple

from src.core.exceptions import IndexOutOfRangeError, ProjectiveModuleError, UnsupportedModeError


def cyclic(vertex: int, e: int) -> int:
    """Normalize a vertex index into 1..e"""
    return (vertex - 1) % e + 1


def decompose_ell(e: int, ell: int) -> Tuple[int, int]:
    """ℓ = μ e + ℓ' with 0 <= ℓ' <= e - 1"""
    if e < 1:
        raise UnsupportedModeError(f"the circular quiver needs e >= 1 vertices, got {e}")
    if ell < 2:
        raise UnsupportedModeError(f"Loewy length {ell} < 2 gives a semisimple algebra")
    return divmod(ell, e)


def theta(v: int, n: int, i: int) -> int:
    """Multiplicity of S_v in V_{n,i}"""
    return n + 1 if 1 <= v <= i else n


@dataclass(frozen=True)
class ThetaProfile:
    e: int
    n: int
    i: int

    @property
    def values(self) -> List[int]:
        return [theta(v, self.n, self.i) for v in range(1, self.e + 1)]

    @property
    def total(self) -> int:
        return sum(self.values)

    def __getitem__(self, v: int) -> int:
        return theta(v, self.n, self.i)


@dataclass(frozen=True)
class NakayamaSpec:
    e: int
    ell: int

    def __post_init__(self):
        decompose_ell(self.e, self.ell)

    @property
    def mu(self) -> int:
        return self.ell // self.e

    @property
    def ell_prime(self) -> int:
        return self.ell % self.e

    @property
    def is_symmetric(self) -> bool:
        return (self.ell_prime - 1) % self.e == 0

    def vertex(self, v: int) -> int:
        return cyclic(v, self.e)

    def module(self, top: int, length: int) -> "UniserialModule":
        return UniserialModule(self, top, length)

    def modules(self) -> List["UniserialModule"]:
        """All e·ℓ indecomposables, sorted by (top, len)"""
        return [self.module(top, length) for top in range(1, self.e + 1) for length in range(1, self.ell + 1)]

    def projective(self, vertex: int) -> "UniserialModule":
        return self.module(vertex, self.ell)

    def socle_of_projective(self, vertex: int) -> int:
        return cyclic(vertex - 1 + self.ell_prime, self.e)

    def __str__(self) -> str:
        return f"N({self.e},{self.ell})"


@dataclass(frozen=True)
class UniserialModule:
    spec: NakayamaSpec
    top: int
    length: int

    def __post_init__(self):
        if not 1 <= self.top <= self.spec.e:
            raise IndexOutOfRangeError(f"top vertex {self.top} outside 1..{self.spec.e}")
        if not 1 <= self.length <= self.spec.ell:
            raise IndexOutOfRangeError(f"length {self.length} outside 1..{self.spec.ell}")

    @property
    def is_projective(self) -> bool:
        return self.length == self.spec.ell

    @property
    def ell_v(self) -> int:
        return min(self.length, self.spec.ell - self.length)

    @property
    def n(self) -> int:
        return self.ell_v // self.spec.e

    @property
    def i(self) -> int:
        return self.ell_v % self.spec.e

    @property
    def d_v(self) -> int:
        return self.ell_v - 1

    @property
    def socle(self) -> int:
        return cyclic(self.top + self.length - 1, self.spec.e)

    @property
    def key(self) -> Tuple[int, int]:
        return self.top, self.length

    def layer_vertex(self, k: int) -> int:
        """Vertex of the k-th radical layer, k = 0 is the top"""
        return cyclic(self.top + k, self.spec.e)

    def composition_factors(self) -> List[int]:
        return [self.layer_vertex(k) for k in range(self.length)]

    def multiplicity(self, vertex: int) -> int:
        return self.composition_factors().count(cyclic(vertex, self.spec.e))

    def theta_profile(self) -> ThetaProfile:
        return ThetaProfile(self.spec.e, self.n, self.i)

    def rotated(self, shift: int) -> "UniserialModule":
        return UniserialModule(self.spec, cyclic(self.top + shift, self.spec.e), self.length)

    def __str__(self) -> str:
        return f"{self.spec}(top={self.top}, len={self.length})"


def _require_non_projective(V: UniserialModule):
    if V.is_projective:
        raise ProjectiveModuleError(f"{V} is projective")


def syzygy(V: UniserialModule) -> UniserialModule:
    """Kernel of the projective cover: top S_(top+len), length ℓ - len"""
    _require_non_projective(V)
    return UniserialModule(V.spec, cyclic(V.top + V.length, V.spec.e), V.spec.ell - V.length)


def normalize_module(V: UniserialModule) -> Tuple[UniserialModule, bool, int]:
    """(module with len = ℓ_V and top 1, whether Ω was applied, rotation that moved the top to 1)"""
    _require_non_projective(V)
    applied_omega = V.length > V.spec.ell - V.length
    W = syzygy(V) if applied_omega else V
    rotation = (W.top - 1) % V.spec.e
    return W.rotated(-rotation), applied_omega, rotation


def ar_distance(V: UniserialModule) -> int:
    """Distance d_V = ℓ_V - 1 from the boundary of the stable AR-quiver"""
    _require_non_projective(V)
    return V.d_v
