"""Dense exact matrices over CyclotomicNumber.

Small (desk-scale) square matrices backing the representation machinery:
generator matrices, gauges and change-of-basis matrices, group elements.
Matrices are immutable; equality and hashing use canonical entry keys,
so two matrices collide exactly when they are mathematically equal.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .cyclotomic import CyclotomicNumber, ONE, ZERO, format_approx

Scalar = Union[CyclotomicNumber, int, Fraction]


def _as_cyc(value: Scalar) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        return value
    return CyclotomicNumber.rational(value)


class Matrix:
    """Immutable square matrix with exact cyclotomic entries."""

    __slots__ = ("rows", "_key")

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        data = tuple(tuple(_as_cyc(v) for v in row) for row in rows)
        n = len(data)
        if any(len(row) != n for row in data):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def size(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(values: Sequence[Scalar]) -> "Matrix":
        vals = [_as_cyc(v) for v in values]
        n = len(vals)
        return Matrix([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def build(n: int, entry: Callable[[int, int], Scalar]) -> "Matrix":
        return Matrix([[entry(i, j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> CyclotomicNumber:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return Matrix(out)

    def apply(self, vector: Sequence[Scalar]) -> tuple[CyclotomicNumber, ...]:
        """Matrix times column vector."""
        vec = [_as_cyc(v) for v in vector]
        if len(vec) != self.size:
            raise ValueError("size mismatch")
        out = []
        for row in self.rows:
            acc = ZERO
            for a, b in zip(row, vec):
                if not (a.is_zero() or b.is_zero()):
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def power(self, exponent: int) -> "Matrix":
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = Matrix.identity(self.size)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result @ base
            if e > 1:
                base = base @ base
            e >>= 1
        return result

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
        n = self.size
        aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
               for i, row in enumerate(self.rows)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[pivot] = aug[pivot], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [v * inv for v in aug[c]]
            for r in range(n):
                if r != c and not aug[r][c].is_zero():
                    f = aug[r][c]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
        return Matrix([row[n:] for row in aug])

    def is_identity(self) -> bool:
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if i == j:
                    if v != 1:
                        return False
                elif not v.is_zero():
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.size != other.size:
            return False
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def key(self) -> tuple:
        cached = object.__getattribute__(self, "_key")
        if cached is None:
            cached = tuple(v.key() for row in self.rows for v in row)
            object.__setattr__(self, "_key", cached)
        return cached

    def __hash__(self):
        return hash(self.key())

    # -- display -------------------------------------------------------

    def to_literals(self) -> list[list[str]]:
        return [[v.literal() for v in row] for row in self.rows]

    def pretty(self) -> str:
        cells = self.to_literals()
        widths = [max(len(cells[i][j]) for i in range(self.size)) for j in range(self.size)]
        lines = []
        for row in cells:
            lines.append("[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]")
        return "\n".join(lines)

    def to_json_entries(self) -> list[list[dict]]:
        return [[{"exact": v.literal(), "approx": format_approx(v)} for v in row]
                for row in self.rows]

    def __repr__(self):
        return f"Matrix({self.to_literals()})"
