"""Symbolic minors and the adjacent-minor ideal families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .groebner import Ideal
from .poly import GridVar, MultiVar, Polynomial, Ring, grid_ring, multi_ring


@dataclass(frozen=True)
class MinorSpec:
    rows: tuple
    cols: tuple

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise ValueError("row and column index lists differ in length")
        if list(self.rows) != sorted(set(self.rows)) or list(self.cols) != sorted(set(self.cols)):
            raise ValueError("indices must be strictly increasing")

    @property
    def size(self) -> int:
        return len(self.rows)


class GenericMatrix:
    """The m x n matrix of indeterminates x[i,j] over ``ring``."""

    def __init__(self, m: int, n: int, ring: Ring | None = None, char: int = 0):
        self.m, self.n = m, n
        self.ring = ring if ring is not None else grid_ring(m, n, char)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.ring.var(GridVar(i, j))

    def minor(self, spec: MinorSpec) -> Polynomial:
        return minor(self, spec)


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def minor(M: GenericMatrix, spec: MinorSpec) -> Polynomial:
    """Determinant of the submatrix on ``spec`` (Leibniz expansion; k <= 6 in practice)."""
    for r in spec.rows:
        if not 1 <= r <= M.m:
            raise IndexError(f"row {r} outside 1..{M.m}")
    for c in spec.cols:
        if not 1 <= c <= M.n:
            raise IndexError(f"column {c} outside 1..{M.n}")
    ring = M.ring
    k = spec.size
    idx = [ring.index[GridVar(r, c)] for r in spec.rows for c in spec.cols]
    one = ring.field.convert(1)
    p = ring.field.p
    terms = {}
    for perm in permutations(range(k)):
        e = [0] * ring.nvars
        for a in range(k):
            e[idx[a * k + perm[a]]] += 1
        c = one if _perm_sign(perm) > 0 else (-one) % p if p else -one
        terms[tuple(e)] = c
    return Polynomial(ring, terms)


def adjacent_minors(m: int, n: int, k: int, ring: Ring | None = None) -> list:
    """All (m-k+1)(n-k+1) adjacent k x k minors in row-major order of their corner."""
    if not 1 <= k <= min(m, n):
        raise ValueError(f"k={k} outside 1..min(m, n)")
    M = GenericMatrix(m, n, ring)
    return [minor(M, MinorSpec(tuple(range(i, i + k)), tuple(range(j, j + k))))
            for i in range(1, m - k + 2) for j in range(1, n - k + 2)]


def adjacent_ideal(m: int, n: int, k: int, char: int = 0) -> Ideal:
    ring = grid_ring(m, n, char)
    return Ideal(ring, adjacent_minors(m, n, k, ring))


def submatrix_minors(m: int, n: int, interval, size: int, ring: Ring | None = None) -> list:
    """All ``size`` x ``size`` minors of the columns in ``interval`` (phantom columns
    0 and n+1 are clipped away) using any rows."""
    a, b = interval
    lo, hi = max(a, 1), min(b, n)
    if size < 1 or size > m:
        raise ValueError(f"minor size {size} outside 1..{m}")
    if hi < lo:
        return []
    M = GenericMatrix(m, n, ring)
    return [minor(M, MinorSpec(rows, cols))
            for cols in combinations(range(lo, hi + 1), size)
            for rows in combinations(range(1, m + 1), size)]


def multidim_adjacent_minors(shape, ring: Ring | None = None) -> list:
    """The degree 2^(d-1) binomials splitting each unit cube of entries by parity."""
    shape = tuple(shape)
    if len(shape) < 2 or any(s < 2 for s in shape):
        raise ValueError("every axis needs length >= 2 and d >= 2")
    ring = ring if ring is not None else multi_ring(shape)
    d = len(shape)
    eps = list(product((0, 1), repeat=d))
    even = [e for e in eps if sum(e) % 2 == 0]
    odd = [e for e in eps if sum(e) % 2 == 1]
    one = ring.field.convert(1)
    p = ring.field.p
    out = []
    for base in product(*(range(1, s) for s in shape)):
        pos, neg = [0] * ring.nvars, [0] * ring.nvars
        for e in even:
            pos[ring.index[MultiVar(tuple(b + x for b, x in zip(base, e)))]] += 1
        for e in odd:
            neg[ring.index[MultiVar(tuple(b + x for b, x in zip(base, e)))]] += 1
        out.append(Polynomial(ring, {tuple(pos): one, tuple(neg): (-one) % p if p else -one}))
    return out


def multidim_ideal(shape, char: int = 0) -> Ideal:
    ring = multi_ring(shape, char)
    return Ideal(ring, multidim_adjacent_minors(shape, ring))
