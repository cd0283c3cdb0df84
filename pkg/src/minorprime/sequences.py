"""Prime sequences of [0, n+1], their ideals P_Gamma, and the counting recurrence."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .adjacent import submatrix_minors
from .groebner import Ideal
from .poly import Ring, grid_ring


class InvalidSequence(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Interval:
    a: int
    b: int

    @property
    def width(self) -> int:
        return self.b - self.a + 1

    def __contains__(self, i: int) -> bool:
        return self.a <= i <= self.b

    def intersect(self, other: "Interval") -> "Interval | None":
        lo, hi = max(self.a, other.a), min(self.b, other.b)
        return Interval(lo, hi) if lo <= hi else None

    def contains_interval(self, other: "Interval") -> bool:
        return self.a <= other.a and other.b <= self.b

    def __str__(self):
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class PrimeSequence:
    m: int
    n: int
    intervals: tuple

    def __post_init__(self):
        object.__setattr__(self, "intervals",
                           tuple(iv if isinstance(iv, Interval) else Interval(*iv)
                                 for iv in self.intervals))

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __str__(self):
        return "{" + ",".join(map(str, self.intervals)) + "}"

    def as_pairs(self) -> list:
        return [[iv.a, iv.b] for iv in self.intervals]

    def overlaps(self) -> list:
        return [Interval(nxt.a, cur.b) for cur, nxt in zip(self.intervals, self.intervals[1:])]

    def violations(self) -> list:
        """Human readable list of failed axioms (empty when valid)."""
        m, n, ivs = self.m, self.n, self.intervals
        out = []
        if not ivs:
            return ["empty sequence"]
        if ivs[0].a != 0 or ivs[-1].b != n + 1:
            out.append("intervals do not start at 0 and end at n+1")
        for iv in ivs:
            if not 0 <= iv.a < iv.b <= n + 1:
                out.append(f"{iv} outside [0,{n + 1}]")
            if iv.b - iv.a < m:
                out.append(f"{iv} has fewer than m+1 columns")
        for cur, nxt in zip(ivs, ivs[1:]):
            if not (cur.a < nxt.a and cur.b < nxt.b):
                out.append(f"{cur},{nxt} not strictly increasing")
            if not 0 <= cur.b - nxt.a < m - 1:
                out.append(f"overlap of {cur},{nxt} not of width 1..m-1")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def validate(self) -> "PrimeSequence":
        bad = self.violations()
        if bad:
            raise InvalidSequence(f"{self}: " + "; ".join(bad))
        return self


def parse_gamma(text: str, m: int, n: int) -> PrimeSequence:
    """``"0-3,3-7"`` or ``"[0,3],[3,7]"`` -> PrimeSequence."""
    text = text.strip()
    pairs = []
    if "[" in text:
        import re
        for a, b in re.findall(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]", text):
            pairs.append((int(a), int(b)))
    else:
        for part in text.split(","):
            a, b = part.split("-")
            pairs.append((int(a), int(b)))
    return PrimeSequence(m, n, tuple(pairs))


def enumerate_prime_sequences(m: int, n: int) -> list:
    """All prime sequences of [0, n+1], lexicographic in the interval starts."""
    if m < 2:
        raise ValueError("m must be at least 2")
    out = []

    def extend(prefix, a):
        # choose b for the interval starting at a
        for b in range(a + m, n + 2):
            if prefix and b <= prefix[-1][1]:
                continue
            cur = prefix + [(a, b)]
            if b == n + 1:
                out.append(cur)
                continue
            for a2 in range(max(a + 1, b - m + 2), b + 1):
                if a2 + m <= n + 1:
                    extend(cur, a2)

    extend([], 0)
    seqs = [PrimeSequence(m, n, tuple(s)) for s in out]
    seqs.sort(key=lambda g: [iv.a for iv in g.intervals] + [iv.b for iv in g.intervals])
    return seqs


def count_prime_sequences(m: int, n: int) -> int:
    """f_m(n): f_m(n+1) = f_m(n) + ... + f_m(n-m+1), seeded by zeros, then 1, 1."""
    if m < 2 or n < 1:
        raise ValueError("need m >= 2 and n >= 1")
    return _count(m, n)


@lru_cache(maxsize=None)
def _count(m, n):
    if n <= m - 2:
        return 0
    if n in (m - 1, m):
        return 1
    return sum(_count(m, n - 1 - i) for i in range(m) if n - 1 - i >= 1)


def sequence_generators(gamma: PrimeSequence, ring: Ring | None = None) -> list:
    """m x m minors of every interval plus the maximal minors of every overlap."""
    gamma.validate()
    m, n = gamma.m, gamma.n
    ring = ring if ring is not None else grid_ring(m, n)
    gens = []
    for iv in gamma.intervals:
        gens += submatrix_minors(m, n, (iv.a, iv.b), m, ring)
    for ov in gamma.overlaps():
        gens += submatrix_minors(m, n, (ov.a, ov.b), ov.width, ring)
    seen, out = set(), []
    for g in gens:
        if g not in seen and -g not in seen:
            seen.add(g)
            out.append(g)
    return out


def sequence_to_ideal(gamma: PrimeSequence, char: int = 0) -> Ideal:
    ring = grid_ring(gamma.m, gamma.n, char)
    return Ideal(ring, sequence_generators(gamma, ring))


def adjacent_minor_in_sequence(gamma: PrimeSequence, col: int) -> bool:
    """The adjacent m x m minor on columns col..col+m-1 is a generator of P_Gamma
    or a multiple of one: its window lies in an interval or covers an overlap."""
    window = Interval(col, col + gamma.m - 1)
    return (any(iv.contains_interval(window) for iv in gamma.intervals)
            or any(window.contains_interval(ov) for ov in gamma.overlaps()))
