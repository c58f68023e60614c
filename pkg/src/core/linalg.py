"""Exact linear algebra over prime fields (numpy) and the rationals (sympy DomainMatrix)."""

from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def as_mod_p(matrix, p: int) -> np.ndarray:
    array = np.asarray(matrix, dtype=np.int64)
    if array.ndim == 1:
        array = array.reshape(1, -1) if array.size else array.reshape(0, 0)
    return np.mod(array, p)


def rref_mod_p(matrix, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over F_p; returns the nonzero rows and pivot columns"""
    A = as_mod_p(matrix, p).copy()
    rows, cols = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(A[r:, c])[0]
        if candidates.size == 0:
            continue
        k = r + int(candidates[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inverse = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inverse) % p
        column = A[:, c].copy()
        column[r] = 0
        hits = np.nonzero(column)[0]
        if hits.size:
            A[hits, c:] = (A[hits, c:] - np.outer(column[hits], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(matrix, p: int) -> int:
    A = as_mod_p(matrix, p)
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


def nullspace_mod_p(matrix, p: int, ncols: Optional[int] = None) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0} over F_p"""
    A = as_mod_p(matrix, p)
    if A.size == 0:
        width = ncols if ncols is not None else A.shape[1]
        return np.eye(width, dtype=np.int64)
    R, pivots = rref_mod_p(A, p)
    width = A.shape[1]
    free = [c for c in range(width) if c not in set(pivots)]
    basis = np.zeros((len(free), width), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, c in enumerate(pivots):
            basis[k, c] = (-R[row, f]) % p
    return basis


def solve_mod_p(matrix, rhs, p: int) -> Optional[np.ndarray]:
    """One solution of A x = b over F_p, or None when the system is inconsistent"""
    A = as_mod_p(matrix, p)
    b = np.mod(np.asarray(rhs, dtype=np.int64).reshape(-1, 1), p)
    width = A.shape[1]
    R, pivots = rref_mod_p(np.hstack([A, b]), p)
    if pivots and pivots[-1] == width:
        return None
    x = np.zeros(width, dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = R[row, width]
    return x


def inverse_mod_p(matrix, p: int) -> np.ndarray:
    A = as_mod_p(matrix, p)
    size = A.shape[0]
    R, pivots = rref_mod_p(np.hstack([A, np.eye(size, dtype=np.int64)]), p)
    if pivots[:size] != list(range(size)):
        raise ValueError("matrix is singular over F_p")
    return R[:size, size:]


def rref_exact(rows: Sequence[Sequence], ncols: int, domain=QQ) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form over a sympy field domain (QQ by default)"""
    if not rows:
        return [], []
    converted = [[domain.convert(x) for x in row] for row in rows]
    reduced, pivots = DomainMatrix(converted, (len(converted), ncols), domain).rref()
    dense = reduced.to_Matrix()
    out = [[domain.from_sympy(dense[r, c]) for c in range(ncols)] for r in range(len(pivots))]
    return out, list(pivots)
