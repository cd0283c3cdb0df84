"""From a matrix in the variety of adjacent maximal minors to a prime sequence
whose variety contains it."""

from __future__ import annotations

from .linalg import NumericMatrix, matrix_rank
from .sequences import Interval, PrimeSequence


class NotInVariety(ValueError):
    pass


def _deficient(X: NumericMatrix, c: int, d: int, cache: dict) -> bool:
    key = (c, d)
    if key not in cache:
        cache[key] = matrix_rank(X.columns(c, d)) < d - c + 1
    return cache[key]


def minimal_deficient_intervals(X: NumericMatrix) -> list:
    """Inclusion-minimal column intervals [c, d] of width < m whose columns are
    linearly dependent, sorted by c (distinct starts, since none nests another)."""
    m, n = X.shape
    cache = {}
    out = []
    for c in range(1, n + 1):
        for d in range(c, min(c + m - 2, n) + 1):
            if not _deficient(X, c, d, cache):
                continue
            if d > c and (_deficient(X, c + 1, d, cache) or _deficient(X, c, d - 1, cache)):
                continue
            out.append(Interval(c, d))
            break
    return out


def check_in_adjacent_variety(X: NumericMatrix) -> None:
    m, n = X.shape
    if n < m:
        return
    for c in range(1, n - m + 2):
        if matrix_rank(X.columns(c, c + m - 1)) == m:
            raise NotInVariety(f"adjacent minor on columns {c}..{c + m - 1} does not vanish")


def matrix_to_sequence(X: NumericMatrix, promote_last_column: bool = True) -> PrimeSequence:
    """Greedy left-to-right construction of Gamma from the minimal rank-deficient
    column intervals of X.

    With ``promote_last_column=False`` an interval ending at column n is kept as
    is; the final widening step can then produce an overlap of width m and the
    result fails validation (raises :class:`InvalidSequence`).
    """
    check_in_adjacent_variety(X)
    m, n = X.shape
    ivs = minimal_deficient_intervals(X)
    gamma = []
    a = 0
    while True:
        nxt = next((iv for iv in ivs if iv.a > a + 1), None)
        if nxt is None:
            b = n + 1
        elif nxt.b <= a + m:
            b = n + 1 if a + m >= n else a + m
        else:
            b = nxt.b
        if promote_last_column and b == n:
            # [a, n] and [a, n+1] carry the same real columns
            b = n + 1
        gamma.append(Interval(a, b))
        if b == n + 1:
            break
        inside = [iv for iv in ivs if a <= iv.a and iv.b <= b]
        a = inside[-1].a
    if gamma[-1].width < m + 1:
        gamma[-1] = Interval(n + 1 - m, n + 1)
    return PrimeSequence(m, n, tuple(gamma)).validate()


def in_sequence_variety(X: NumericMatrix, gamma: PrimeSequence) -> bool:
    """Rank form of X in V(P_Gamma): every interval has rank < m and every
    overlap is column-dependent."""
    m = gamma.m
    for iv in gamma.intervals:
        if matrix_rank(X.columns(iv.a, iv.b)) >= m:
            return False
    for ov in gamma.overlaps():
        sub = X.columns(ov.a, ov.b)
        if matrix_rank(sub) >= sub.n:
            return False
    return True
