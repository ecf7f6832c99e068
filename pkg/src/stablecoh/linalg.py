"""Dense exact-rational matrices with fraction-free rank and kernel bases.

Rank decisions are made by Bareiss elimination over arbitrary-precision
integers; floating point never enters. Kernel bases are computed from the
reduced row echelon form over the rationals and returned as primitive integer
vectors, so identical inputs give byte-identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Scalar = int | Fraction

# Past this row/column imbalance the rank is taken on the (small) Gram matrix
# A*A^T instead, which is equivalent over the rationals.
_GRAM_RATIO = 2


def clear_denominators(row: Sequence[Scalar]) -> list[int]:
    """Scale a rational row to integers; rescaling a row preserves rank."""
    if all(type(x) is int for x in row):
        return list(row)
    mult = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(x * mult) for x in row]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is an exact integer (the divisions are exact),
    so the returned rank is the true rank over the rationals.
    """
    m = [list(row) for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivot_row = 0
    prev = 1
    for col in range(n_cols):
        if pivot_row >= n_rows:
            break
        pivot = None
        for r in range(pivot_row, n_rows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != pivot_row:
            m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        head = m[pivot_row]
        pv = head[col]
        for r in range(pivot_row + 1, n_rows):
            row = m[r]
            f = row[col]
            for c in range(col + 1, n_cols):
                row[c] = (pv * row[c] - f * head[c]) // prev
            row[col] = 0
        prev = pv
        pivot_row += 1
    return pivot_row


def gram_matrix(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Symmetric matrix of pairwise row dot products."""
    n_rows = len(rows)
    g = [[0] * n_rows for _ in range(n_rows)]
    for i in range(n_rows):
        ri = rows[i]
        for j in range(i, n_rows):
            s = sum(a * b for a, b in zip(ri, rows[j]))
            g[i][j] = s
            g[j][i] = s
    return g


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix, reducing to the Gram matrix when very wide.

    Over the rationals rank(A) = rank(A * A^T): the quadratic form x -> |x|^2
    is positive definite, so A^T y = 0 exactly when A A^T y = 0. The Gram
    pass keeps the elimination square when one side is much longer.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    if n_rows == 0 or n_cols == 0:
        return 0
    if n_rows > _GRAM_RATIO * n_cols:
        rows = [[rows[r][c] for r in range(n_rows)] for c in range(n_cols)]
        n_rows, n_cols = n_cols, n_rows
    if n_cols > _GRAM_RATIO * n_rows:
        return bareiss_rank(gram_matrix(rows))
    return bareiss_rank(rows)


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and its pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r >= n_rows:
            break
        pivot = None
        for i in range(r, n_rows):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col]
        m[r] = [x / inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def primitive_vector(vec: Sequence[Scalar]) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational to a primitive integer one."""
    ints = clear_denominators(vec)
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def kernel_basis(rows: Sequence[Sequence[Scalar]], n_cols: int) -> tuple[tuple[int, ...], ...]:
    """Basis of the right kernel as primitive integer vectors.

    One vector per free column, ordered by column index; the free coordinate
    of each vector is positive. The construction reads the basis off the
    reduced row echelon form, so it is deterministic byte for byte.
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -reduced[r][free]
        basis.append(primitive_vector(v))
    return tuple(basis)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(f"expected {self.cols} columns, got {len(row)}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]], cols: int | None = None) -> "ExactMatrix":
        data = tuple(tuple(row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("column count required for an empty matrix")
            cols = len(data[0])
        return cls(len(data), cols, data)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return integer_rank([clear_denominators(row) for row in self.entries])

    def kernel_basis(self) -> tuple[tuple[int, ...], ...]:
        return kernel_basis(self.entries, self.cols)

    def transpose(self) -> "ExactMatrix":
        cols = tuple(
            tuple(self.entries[r][c] for r in range(self.rows)) for c in range(self.cols)
        )
        return ExactMatrix(self.cols, self.rows, cols)
