"""Prime partitions of the m x n grid: the (S, N) splits whose ideals are the
minimal primes of the ideal of adjacent 2 x 2 minors."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .adjacent import GenericMatrix, MinorSpec, minor
from .groebner import Ideal
from .poly import GridVar, grid_ring

_NEIGHBORS = [(di, dj) for di in (-1, 0, 1) for dj in (-1, 0, 1) if di or dj]


@dataclass(frozen=True, order=True)
class Rectangle:
    top: int
    left: int
    bottom: int
    right: int

    @property
    def height(self) -> int:
        return self.bottom - self.top + 1

    @property
    def width(self) -> int:
        return self.right - self.left + 1

    def cells(self) -> frozenset:
        return frozenset((i, j) for i in range(self.top, self.bottom + 1)
                         for j in range(self.left, self.right + 1))

    def edges(self, m: int, n: int) -> list:
        """The defined boundary edges (top, bottom, left, right) as cell sets."""
        i, j, s, t = self.top, self.left, self.bottom, self.right
        out = []
        if i > 1:
            out.append(frozenset((i - 1, c) for c in range(j, t + 1)))
        if s < m:
            out.append(frozenset((s + 1, c) for c in range(j, t + 1)))
        if j > 1:
            out.append(frozenset((r, j - 1) for r in range(i, s + 1)))
        if t < n:
            out.append(frozenset((r, t + 1) for r in range(i, s + 1)))
        return out

    def boundary(self, m: int, n: int) -> frozenset:
        i, j, s, t = self.top, self.left, self.bottom, self.right
        ring = {(r, c) for r in range(i - 1, s + 2) for c in range(j - 1, t + 2)
                if 1 <= r <= m and 1 <= c <= n}
        return frozenset(ring) - self.cells()

    def to_json(self) -> list:
        return [self.top, self.left, self.bottom, self.right]


def connected_components(N, shape) -> list:
    """Maximal 8-connected pieces of the cell set N, sorted."""
    N = set(N)
    seen, comps = set(), []
    for start in sorted(N):
        if start in seen:
            continue
        comp, stack = set(), [start]
        seen.add(start)
        while stack:
            i, j = stack.pop()
            comp.add((i, j))
            for di, dj in _NEIGHBORS:
                nb = (i + di, j + dj)
                if nb in N and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comps.append(frozenset(comp))
    comps.sort(key=sorted)
    return comps


def as_rectangle(cells) -> Rectangle | None:
    rows = [i for i, _ in cells]
    cols = [j for _, j in cells]
    r = Rectangle(min(rows), min(cols), max(rows), max(cols))
    return r if r.cells() == frozenset(cells) else None


@dataclass(frozen=True)
class Violation:
    condition: int
    witness: object

    def __bool__(self):
        return False


@dataclass(frozen=True)
class GridPartition:
    m: int
    n: int
    S: frozenset

    @property
    def N(self) -> frozenset:
        return frozenset((i, j) for i in range(1, self.m + 1)
                         for j in range(1, self.n + 1)) - self.S

    @property
    def rectangles(self) -> list:
        """Maximal rectangles of N (None entries mark non-rectangular components)."""
        return [as_rectangle(c) for c in connected_components(self.N, (self.m, self.n))]

    def sorted_S(self) -> list:
        return sorted(self.S)

    def to_json(self) -> dict:
        return {"S": [list(c) for c in self.sorted_S()],
                "rectangles": [r.to_json() for r in self.rectangles]}


def validate_prime_partition(p: GridPartition):
    """True, or the first failed condition as a falsy :class:`Violation`."""
    m, n = p.m, p.n
    N = p.N
    for corner in [(1, 1), (1, n), (m, 1), (m, n)]:
        if corner not in N:
            return Violation(1, corner)
    rects = []
    for comp in connected_components(N, (m, n)):
        r = as_rectangle(comp)
        if r is None:
            return Violation(2, sorted(comp))
        rects.append(r)
    bounds = [r.boundary(m, n) for r in rects]
    for a, r in enumerate(rects):
        for edge in r.edges(m, n):
            if not any(edge & bounds[b] for b in range(len(rects)) if b != a):
                return Violation(3, (r, sorted(edge)))
    for r1, r2 in combinations(rects, 2):
        same_row = r1.height == 1 and r2.height == 1 and r1.top == r2.top
        same_col = r1.width == 1 and r2.width == 1 and r1.left == r2.left
        if same_row or same_col:
            e1 = frozenset().union(*r1.edges(m, n))
            e2 = frozenset().union(*r2.edges(m, n))
            if e1 & e2:
                return Violation(4, (r1, r2))
    union = frozenset().union(*bounds) if bounds else frozenset()
    if union != p.S:
        return Violation(5, sorted(p.S ^ union))
    return True


def enumerate_prime_partitions(m: int, n: int) -> list:
    """All prime partitions, sorted by their S sets.

    Row-major search: the first undecided cell is either put into S or becomes
    the top-left corner of a new maximal rectangle whose ring is forced into S.
    Complete assignments are then checked against all five conditions.
    """
    if m < 2 or n < 2:
        raise ValueError("need m, n >= 2")
    UND, NN, SS = 0, 1, 2
    grid = [[UND] * (n + 2) for _ in range(m + 2)]
    corners = {(1, 1), (1, n), (m, 1), (m, n)}
    found = []

    def dead_S(i, j):
        # an S cell with fully decided neighbourhood must touch N (condition 5)
        if not (1 <= i <= m and 1 <= j <= n) or grid[i][j] != SS:
            return False
        return not any(grid[i + di][j + dj] == NN for di, dj in _NEIGHBORS)

    def next_cell(pos):
        while pos < m * n:
            i, j = divmod(pos, n)
            if grid[i + 1][j + 1] == UND:
                return pos
            pos += 1
        return pos

    def search(pos):
        pos = next_cell(pos)
        if pos == m * n:
            S = frozenset((i, j) for i in range(1, m + 1) for j in range(1, n + 1)
                          if grid[i][j] == SS)
            part = GridPartition(m, n, S)
            if validate_prime_partition(part):
                found.append(part)
            return
        i, j = divmod(pos, n)
        i, j = i + 1, j + 1
        if (i, j) not in corners:
            grid[i][j] = SS
            if not dead_S(i - 1, j - 1) and not (j == n and dead_S(i - 1, j)):
                search(pos + 1)
            grid[i][j] = UND
        max_w = 0
        while j + max_w <= n and grid[i][j + max_w] == UND:
            max_w += 1
        for h in range(1, m - i + 2):
            if any(grid[i + h - 1][c] != UND for c in range(j, j + max_w)):
                max_w = next(c - j for c in range(j, j + max_w) if grid[i + h - 1][c] != UND)
            if max_w == 0:
                break
            for w in range(1, max_w + 1):
                changed = []
                for r in range(i, i + h):
                    for c in range(j, j + w):
                        grid[r][c] = NN
                        changed.append((r, c))
                for r in range(i - 1, i + h + 1):
                    for c in range(j - 1, j + w + 1):
                        if 1 <= r <= m and 1 <= c <= n and grid[r][c] == UND:
                            grid[r][c] = SS
                            changed.append((r, c))
                if not any((r, c) in corners and grid[r][c] == SS for r, c in changed):
                    search(pos + 1)
                for r, c in changed:
                    grid[r][c] = UND

    search(0)
    found.sort(key=GridPartition.sorted_S)
    return found


def brute_force_prime_partitions(m: int, n: int) -> list:
    """Check every subset S of the grid (test oracle; mn <= 16 or so)."""
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    out = []
    for mask in range(1 << len(cells)):
        S = frozenset(c for b, c in enumerate(cells) if mask >> b & 1)
        p = GridPartition(m, n, S)
        if validate_prime_partition(p):
            out.append(p)
    out.sort(key=GridPartition.sorted_S)
    return out


def partition_generators(p: GridPartition, ring=None) -> list:
    """Variables of S plus every 2 x 2 minor with all four entries in one rectangle."""
    check = validate_prime_partition(p)
    if not check:
        raise ValueError(f"not a prime partition: {check}")
    ring = ring if ring is not None else grid_ring(p.m, p.n)
    gens = [ring.var(GridVar(i, j)) for i, j in p.sorted_S()]
    M = GenericMatrix(p.m, p.n, ring)
    for r in p.rectangles:
        for rows in combinations(range(r.top, r.bottom + 1), 2):
            for cols in combinations(range(r.left, r.right + 1), 2):
                gens.append(minor(M, MinorSpec(rows, cols)))
    return gens


def partition_to_ideal(p: GridPartition, char: int = 0) -> Ideal:
    ring = grid_ring(p.m, p.n, char)
    return Ideal(ring, partition_generators(p, ring))


def partition_degree(p: GridPartition) -> int:
    """Degree of the partition's prime: product over rectangles of the degree of
    the 2 x 2 determinantal ideal of an a x b matrix, C(a+b-2, a-1)."""
    d = 1
    for r in p.rectangles:
        d *= comb(r.height + r.width - 2, r.height - 1)
    return d


def grid_symmetries(m: int, n: int) -> list:
    """Cell maps of the grid's symmetry group (order 4, or 8 when square)."""
    maps = [lambda i, j: (i, j), lambda i, j: (m + 1 - i, j),
            lambda i, j: (i, n + 1 - j), lambda i, j: (m + 1 - i, n + 1 - j)]
    if m == n:
        maps += [lambda i, j, f=f: f(j, i) for f in list(maps)]
    return maps


def grid_symmetry_classes(parts) -> list:
    """Orbits (lists of partitions) under the grid symmetries, sorted by their
    smallest member."""
    parts = list(parts)
    if not parts:
        return []
    m, n = parts[0].m, parts[0].n
    group = grid_symmetries(m, n)
    by_S = {p.S: p for p in parts}
    seen, orbits = set(), []
    for p in parts:
        if p.S in seen:
            continue
        orbit = set()
        for g in group:
            image = frozenset(g(i, j) for i, j in p.S)
            if image not in by_S:
                raise ValueError("symmetry image is not in the supplied family")
            orbit.add(image)
        seen |= orbit
        orbits.append(sorted((by_S[s] for s in orbit), key=GridPartition.sorted_S))
    orbits.sort(key=lambda o: o[0].sorted_S())
    return orbits
