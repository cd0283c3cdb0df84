"""Exact rational matrices: fraction-free rank and determinants."""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class NumericMatrix:
    """m x n matrix of Fractions, rows stored as lists."""

    def __init__(self, rows):
        rows = [[Fraction(x) for x in r] for r in rows]
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        self.rows = rows

    @classmethod
    def zeros(cls, m: int, n: int) -> "NumericMatrix":
        return cls([[0] * n for _ in range(m)])

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.m, self.n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, NumericMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"NumericMatrix({self.to_json()})"

    def columns(self, lo: int, hi: int) -> "NumericMatrix":
        """Columns lo..hi (1-based, inclusive, clipped to 1..n)."""
        lo, hi = max(lo, 1), min(hi, self.n)
        return NumericMatrix([r[lo - 1:hi] for r in self.rows])

    def hstack(self, other: "NumericMatrix") -> "NumericMatrix":
        if self.n == 0:
            return NumericMatrix([list(r) for r in other.rows])
        return NumericMatrix([a + b for a, b in zip(self.rows, other.rows)])

    def __matmul__(self, other: "NumericMatrix") -> "NumericMatrix":
        cols = list(zip(*other.rows))
        return NumericMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def rank(self) -> int:
        return matrix_rank(self)

    def point(self):
        """Callable mapping grid variables to entries, for polynomial evaluation."""
        return lambda v: self.rows[v.index[0] - 1][v.index[1] - 1]

    def to_json(self) -> list:
        return [[_frac_str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "NumericMatrix":
        return cls([[Fraction(str(x)) for x in r] for r in data])


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _integer_rows(rows):
    out = []
    for r in rows:
        den = 1
        for x in r:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def matrix_rank(M) -> int:
    """Rank by Bareiss fraction-free elimination (exact)."""
    rows = M.rows if isinstance(M, NumericMatrix) else M
    A = _integer_rows(rows)
    if not A or not A[0]:
        return 0
    m, n = len(A), len(A[0])
    rank, prev = 0, 1
    for col in range(n):
        piv = next((r for r in range(rank, m) if A[r][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][col]
        for r in range(rank + 1, m):
            a = A[r][col]
            A[r] = [(p * A[r][j] - a * A[rank][j]) // prev for j in range(n)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def determinant(M) -> Fraction:
    rows = M.rows if isinstance(M, NumericMatrix) else [[Fraction(x) for x in r] for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    A = [list(r) for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return det
