from typing import Iterator, List, Optional, Sequence, Tuple, Union

from src.core.exceptions import DimensionMismatchError
from src.ring.polynomial import TruncatedPolynomial, TruncatedRing


class PolyMatrix:
    """Rectangular matrix of truncated polynomials sharing one ring"""

    def __init__(self, ring: TruncatedRing, entries: Sequence[Sequence[TruncatedPolynomial]]):
        rows = [list(row) for row in entries]
        width = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != width:
                raise DimensionMismatchError("ragged matrix rows")
            for entry in row:
                if entry.ring != ring:
                    raise DimensionMismatchError(f"entry {entry} does not live in {ring}")
        self.ring = ring
        self.entries = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def zeros(cls, ring: TruncatedRing, rows: int, cols: int) -> "PolyMatrix":
        return cls(ring, [[ring.zero() for _ in range(cols)] for _ in range(rows)])

    @classmethod
    def identity(cls, ring: TruncatedRing, size: int) -> "PolyMatrix":
        return cls(ring, [[ring.one() if r == c else ring.zero() for c in range(size)] for r in range(size)])

    @classmethod
    def from_ints(cls, ring: TruncatedRing, grid: Sequence[Sequence[int]]) -> "PolyMatrix":
        return cls(ring, [[ring.constant(v) if v else ring.zero() for v in row] for row in grid])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> TruncatedPolynomial:
        r, c = index
        return self.entries[r][c]

    def with_entry(self, r: int, c: int, value: TruncatedPolynomial) -> "PolyMatrix":
        entries = [list(row) for row in self.entries]
        entries[r][c] = value
        return PolyMatrix(self.ring, entries)

    def items(self) -> Iterator[Tuple[int, int, TruncatedPolynomial]]:
        for r, row in enumerate(self.entries):
            for c, entry in enumerate(row):
                yield r, c, entry

    def nonzero_items(self) -> Iterator[Tuple[int, int, TruncatedPolynomial]]:
        return ((r, c, e) for r, c, e in self.items() if not e.is_zero)

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for _, _, e in self.items())

    def _check_shape(self, other: "PolyMatrix"):
        if other.ring != self.ring:
            raise DimensionMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
        if other.shape != self.shape:
            raise DimensionMismatchError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_shape(other)
        return PolyMatrix(self.ring, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_shape(other)
        return PolyMatrix(self.ring, [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def scale(self, factor: Union[int, TruncatedPolynomial]) -> "PolyMatrix":
        return self.map_entries(lambda e: factor * e)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.ring != self.ring:
            raise DimensionMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        out = [[self.ring.zero() for _ in range(other.cols)] for _ in range(self.rows)]
        for r, row in enumerate(self.entries):
            for k, a in enumerate(row):
                if a.is_zero:
                    continue
                for c, b in enumerate(other.entries[k]):
                    if not b.is_zero:
                        out[r][c] = out[r][c] + a * b
        return PolyMatrix(self.ring, out)

    __mul__ = __matmul__

    def __pow__(self, exponent: int) -> "PolyMatrix":
        if self.rows != self.cols:
            raise DimensionMismatchError("only square matrices have powers")
        result = PolyMatrix.identity(self.ring, self.rows)
        for _ in range(exponent):
            result = result @ self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.entries == other.entries

    def first_difference(self, other: "PolyMatrix") -> Optional[Tuple[int, int]]:
        """0-based (row, col) of the first differing entry, or None"""
        self._check_shape(other)
        for r, c, e in self.items():
            if e != other.entries[r][c]:
                return r, c
        return None

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.entries[r][c] for c in cols] for r in rows])

    def with_ring(self, ring: TruncatedRing) -> "PolyMatrix":
        return PolyMatrix(ring, [[e.with_ring(ring) for e in row] for row in self.entries])

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[fn(e) for e in row] for row in self.entries])

    def kill_variables(self, keep: Sequence[int]) -> "PolyMatrix":
        return self.map_entries(lambda e: e.kill_variables(keep))

    def entry_list(self) -> List[TruncatedPolynomial]:
        return [e for _, _, e in self.items()]

    def to_text(self) -> List[List[str]]:
        return [[e.to_text() for e in row] for row in self.entries]

    def __repr__(self) -> str:
        return f"PolyMatrix({self.to_text()})"
