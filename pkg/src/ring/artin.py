"""Finite local commutative F_p-algebras given by structure constants."""

from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.core.exceptions import DimensionMismatchError, ResourceCapError, UnsupportedModeError
from src.core.linalg import nullspace_mod_p, rank_mod_p, rref_mod_p
from src.core.models import CoefficientMode, VerificationReport
from src.ring.polynomial import Monomial, render_monomial


class ArtinTestRing:
    """Local F_p-algebra with basis (1, m_1, ..., m_{d-1}); the m_k span the maximal ideal.

    Elements are integer vectors of length d; matrices over the ring are arrays whose
    last axis has length d.
    """

    def __init__(
        self,
        name: str,
        p: int,
        labels: Sequence[str],
        structure: np.ndarray,
        unit_index: int = 0,
        maximal_ideal: Optional[Sequence[int]] = None,
    ):
        structure = np.mod(np.asarray(structure, dtype=np.int64), p)
        d = len(labels)
        if structure.shape != (d, d, d):
            raise DimensionMismatchError(f"structure constants must have shape {(d, d, d)}, got {structure.shape}")
        self.name = name
        self.p = p
        self.labels = list(labels)
        self.structure = structure
        self.unit_index = unit_index
        self.maximal_ideal = list(maximal_ideal) if maximal_ideal is not None else [k for k in range(d) if k != unit_index]
        if unit_index != 0 or self.maximal_ideal != list(range(1, d)):
            raise UnsupportedModeError("basis must be (1, maximal ideal basis) with the unit first")

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def maximal_ideal_dimension(self) -> int:
        return len(self.maximal_ideal)

    @property
    def order(self) -> int:
        return self.p ** self.dimension

    # Elements
    def zero(self) -> np.ndarray:
        return np.zeros(self.dimension, dtype=np.int64)

    def one(self) -> np.ndarray:
        v = self.zero()
        v[self.unit_index] = 1
        return v

    def basis_vector(self, k: int) -> np.ndarray:
        v = self.zero()
        v[k] = 1
        return v

    def element(self, coefficients: Dict[str, int]) -> np.ndarray:
        v = self.zero()
        for label, c in coefficients.items():
            v[self.labels.index(label)] = c % self.p
        return v

    def residue(self, a: np.ndarray):
        return np.mod(np.asarray(a)[..., self.unit_index], self.p)

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.mod(np.einsum("...x,...y,xyz->...z", a, b, self.structure), self.p)

    def power(self, a: np.ndarray, exponent: int) -> np.ndarray:
        result = np.broadcast_to(self.one(), np.shape(a)).copy()
        for _ in range(exponent):
            result = self.multiply(result, a)
        return result

    def maximal_ideal_elements(self) -> np.ndarray:
        """All p^(d-1) elements of the maximal ideal, in lexicographic coordinate order"""
        count = self.p ** self.maximal_ideal_dimension
        coords = np.array(list(product(range(self.p), repeat=self.maximal_ideal_dimension)), dtype=np.int64)
        out = np.zeros((count, self.dimension), dtype=np.int64)
        if self.maximal_ideal:
            out[:, self.maximal_ideal] = coords.reshape(count, -1)
        return out

    def render(self, a: np.ndarray) -> str:
        terms = [
            (label if c == 1 else f"{c}*{label}") if label != "1" else str(c)
            for label, c in zip(self.labels, (int(x) % self.p for x in a))
            if c
        ]
        return " + ".join(terms) if terms else "0"

    # Matrices over the ring
    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """(..., r, k, d) x (..., k, c, d) -> (..., r, c, d)"""
        return np.mod(np.einsum("...rkx,...kcy,xyz->...rcz", A, B, self.structure, optimize=True), self.p)

    def scalar_matrix(self, matrix: np.ndarray) -> np.ndarray:
        """Embed an F_p matrix as a matrix over the ring"""
        matrix = np.asarray(matrix, dtype=np.int64)
        out = np.zeros(matrix.shape + (self.dimension,), dtype=np.int64)
        out[..., self.unit_index] = np.mod(matrix, self.p)
        return out

    def identity_matrix(self, size: int) -> np.ndarray:
        return self.scalar_matrix(np.eye(size, dtype=np.int64))

    def left_multiplication(self, a: np.ndarray) -> np.ndarray:
        """d x d matrix of x -> a*x"""
        return np.mod(np.einsum("x,xyz->zy", a, self.structure), self.p)

    # Structure
    @property
    def is_square_zero(self) -> bool:
        m = self.maximal_ideal
        return not np.any(self.structure[np.ix_(m, m)]) if m else True

    def nilpotency_index(self, limit: int = 64) -> int:
        """Smallest k with m^k = 0"""
        if not self.maximal_ideal:
            return 1
        span = np.eye(self.dimension, dtype=np.int64)[self.maximal_ideal]
        for k in range(1, limit + 1):
            if rank_mod_p(span, self.p) == 0:
                return k
            products = [self.multiply(x, self.basis_vector(g)) for x in span for g in self.maximal_ideal]
            span = rref_mod_p(np.array(products, dtype=np.int64).reshape(-1, self.dimension), self.p)[0]
        raise UnsupportedModeError(f"maximal ideal of {self.name} is not nilpotent within {limit} steps")

    def verify_axioms(self) -> VerificationReport:
        report = VerificationReport(subject=f"test ring {self.name} over GF({self.p})")
        C = self.structure
        report.add("commutative", np.array_equal(C, C.transpose(1, 0, 2)))
        left = np.einsum("xyw,wzv->xyzv", C, C) % self.p
        right = np.einsum("yzw,xwv->xyzv", C, C) % self.p
        report.add("associative", np.array_equal(left, right))
        unit = self.one()
        identity = np.eye(self.dimension, dtype=np.int64)
        report.add("unital", np.array_equal(self.left_multiplication(unit), identity))
        m = self.maximal_ideal
        closed = all(self.residue(self.multiply(self.basis_vector(a), self.basis_vector(b))) == 0 for a in m for b in m)
        report.add("maximal ideal closed, residue field F_p", closed)
        try:
            index = self.nilpotency_index()
            report.add("maximal ideal nilpotent", True, f"m^{index} = 0")
        except UnsupportedModeError as exc:
            report.add("maximal ideal nilpotent", False, str(exc))
        return report

    # Constructors
    @classmethod
    def monomial_algebra(cls, name: str, p: int, variables: Sequence[str], basis: Sequence[Monomial]) -> "ArtinTestRing":
        """F_p[vars] modulo every monomial not in `basis` (basis closed under division, unit first)"""
        basis = [tuple(m) for m in basis]
        index = {m: k for k, m in enumerate(basis)}
        d = len(basis)
        structure = np.zeros((d, d, d), dtype=np.int64)
        for a, ma in enumerate(basis):
            for b, mb in enumerate(basis):
                prod = tuple(x + y for x, y in zip(ma, mb))
                if prod in index:
                    structure[a, b, index[prod]] = 1
        labels = [_monomial_label(m, variables) for m in basis]
        return cls(name, p, labels, structure)

    @classmethod
    def from_quotient_model(cls, model, name: Optional[str] = None, max_dimension: int = 64) -> "ArtinTestRing":
        """The quotient k[t]/J of a stabilized model, structure constants from its normal forms"""
        if model.coefficients.mode != CoefficientMode.PRIME:
            raise UnsupportedModeError("test rings live over prime fields")
        d = model.dimension
        if d > max_dimension:
            raise ResourceCapError("quotient too large for a test ring", d, max_dimension)
        if d == 0 or any(model.standard_monomials[0]):
            raise UnsupportedModeError("quotient model is not local with unit first")
        structure = np.zeros((d, d, d), dtype=np.int64)
        for a, ma in enumerate(model.standard_monomials):
            for b, mb in enumerate(model.standard_monomials):
                structure[a, b] = model.vector(model.basis_element(ma) * model.basis_element(mb))
        labels = [render_monomial(m) or "1" for m in model.standard_monomials]
        return cls(name or f"R(n={model.ring.n})", model.coefficients.p, labels, structure)

    def __repr__(self) -> str:
        return f"ArtinTestRing({self.name}, GF({self.p}), basis={self.labels})"


def _monomial_label(monomial: Monomial, variables: Sequence[str]) -> str:
    factors = []
    for var, e in zip(variables, monomial):
        if e == 1:
            factors.append(var)
        elif e > 1:
            factors.append(f"{var}^{e}")
    return "*".join(factors) if factors else "1"


class TestRingFactory:
    """Factory for the built-in test-ring catalog"""

    __test__ = False

    _catalog = {
        "fp": (("u",), [(0,)]),
        "dual-numbers": (("eps",), [(0,), (1,)]),
        "u2": (("u",), [(0,), (1,)]),
        "u3": (("u",), [(0,), (1,), (2,)]),
        "xy2": (("x", "y"), [(0, 0), (1, 0), (0, 1)]),
        "x2y2": (("x", "y"), [(0, 0), (1, 0), (0, 1), (1, 1)]),
    }

    @classmethod
    def create_ring(cls, name: str, p: int = 2) -> ArtinTestRing:
        """Create a catalog ring over GF(p)"""
        if name not in cls._catalog:
            raise UnsupportedModeError(f"Unknown test ring: {name}")
        variables, basis = cls._catalog[name]
        return ArtinTestRing.monomial_algebra(name, p, variables, basis)

    @classmethod
    def get_available_rings(cls) -> List[str]:
        return list(cls._catalog.keys())

    @classmethod
    def register_ring(cls, name: str, variables: Tuple[str, ...], basis: List[Monomial]):
        cls._catalog[name] = (variables, basis)


class SmallExtension:
    """Surjection A1 -> A0 of local test rings with principal kernel (t) and m_A1 * t = 0"""

    def __init__(self, name: str, source: ArtinTestRing, target: ArtinTestRing, matrix: np.ndarray):
        if source.p != target.p:
            raise DimensionMismatchError("small extension between rings of different characteristic")
        self.name = name
        self.source = source
        self.target = target
        self.matrix = np.mod(np.asarray(matrix, dtype=np.int64), source.p)
        if self.matrix.shape != (target.dimension, source.dimension):
            raise DimensionMismatchError(f"map matrix must be {target.dimension} x {source.dimension}")

    def apply(self, values: np.ndarray) -> np.ndarray:
        """Reduce elements or matrices over A1 (last axis) to A0"""
        return np.mod(np.einsum("...x,yx->...y", values, self.matrix), self.source.p)

    def kernel(self) -> np.ndarray:
        return nullspace_mod_p(self.matrix, self.source.p)

    def validate(self) -> VerificationReport:
        A1, A0, p = self.source, self.target, self.source.p
        report = VerificationReport(subject=f"small extension {self.name}")
        report.add("unit preserved", np.array_equal(self.apply(A1.one()), A0.one()))
        multiplicative = all(
            np.array_equal(
                self.apply(A1.multiply(A1.basis_vector(a), A1.basis_vector(b))),
                A0.multiply(self.apply(A1.basis_vector(a)), self.apply(A1.basis_vector(b))),
            )
            for a in range(A1.dimension)
            for b in range(A1.dimension)
        )
        report.add("ring homomorphism", multiplicative)
        report.add("surjective", rank_mod_p(self.matrix, p) == A0.dimension)
        kernel = self.kernel()
        report.add("kernel is one-dimensional", kernel.shape[0] == 1, f"dim ker = {kernel.shape[0]}")
        if kernel.shape[0] == 1:
            t = kernel[0]
            report.add("kernel inside maximal ideal", A1.residue(t) == 0)
            annihilated = all(not np.any(A1.multiply(A1.basis_vector(g), t)) for g in A1.maximal_ideal)
            report.add("maximal ideal annihilates kernel", annihilated)
        return report


class SmallExtensionFactory:
    """Catalog of small extensions between catalog rings"""

    _catalog = {
        # name: (source, target, images of source basis vectors as target coordinates)
        "u3->dual": ("u3", "dual-numbers", [[1, 0], [0, 1], [0, 0]]),
        "dual->fp": ("dual-numbers", "fp", [[1], [0]]),
        "xy2->dual": ("xy2", "dual-numbers", [[1, 0], [0, 1], [0, 0]]),
        "x2y2->xy2": ("x2y2", "xy2", [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]),
    }

    @classmethod
    def create_extension(cls, name: str, p: int = 2) -> SmallExtension:
        if name not in cls._catalog:
            raise UnsupportedModeError(f"Unknown small extension: {name}")
        source, target, images = cls._catalog[name]
        matrix = np.array(images, dtype=np.int64).T
        return SmallExtension(
            name, TestRingFactory.create_ring(source, p), TestRingFactory.create_ring(target, p), matrix
        )

    @classmethod
    def get_available_extensions(cls) -> List[str]:
        return list(cls._catalog.keys())
