"""Minimal primes of adjacent 2-minor ideals of 2 x ... x 2 x m tensors, their
count, and orbit bookkeeping under the symmetries of a box."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .adjacent import multidim_adjacent_minors
from .groebner import Ideal, saturate
from .poly import MultiVar, multi_ring


@dataclass(frozen=True)
class MinimalPrimeSpec22m:
    """J together with one (even, odd) pair of (d-1)-prefixes per j in J."""
    d: int
    m: int
    J: tuple = ()
    pairs: tuple = ()

    def violations(self) -> list:
        out = []
        if len(self.J) != len(self.pairs):
            out.append("one prefix pair per index of J")
        for j in self.J:
            if not 2 <= j <= self.m - 1:
                out.append(f"j={j} outside [2, m-1]")
        for a, b in zip(self.J, self.J[1:]):
            if a + 1 >= b:
                out.append(f"gap condition fails for {a}, {b}")
        for j, (ev, od) in zip(self.J, self.pairs):
            for pre in (ev, od):
                if len(pre) != self.d - 1 or any(s not in (1, 2) for s in pre):
                    out.append(f"prefix {pre} is not a (d-1)-vector over {{1,2}}")
            if (sum(ev) + j) % 2 != 0:
                out.append(f"{ev + (j,)} is not even")
            if (sum(od) + j) % 2 != 1:
                out.append(f"{od + (j,)} is not odd")
        return out

    def to_json(self) -> dict:
        return {"J": list(self.J), "pairs": [[list(e), list(o)] for e, o in self.pairs],
                "S": [list(v) for v in sorted(spec_to_variable_set(self))]}


def _gapped_subsets(lo: int, hi: int) -> list:
    """Subsets of [lo, hi] with no two consecutive integers, lexicographic."""
    out = [()]
    for j in range(lo, hi + 1):
        out += [s + (j,) for s in out if not s or s[-1] + 1 < j]
    return sorted(out)


def prefix_pairs(d: int, j: int) -> list:
    """(even, odd) prefix pairs for last index j; 4^(d-2) of them."""
    pre = list(product((1, 2), repeat=d - 1))
    ev = [p for p in pre if (sum(p) + j) % 2 == 0]
    od = [p for p in pre if (sum(p) + j) % 2 == 1]
    return [(e, o) for e in ev for o in od]


def enumerate_22m_primes(d: int, m: int) -> list:
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    out = []
    for J in _gapped_subsets(2, m - 1):
        for pairs in product(*(prefix_pairs(d, j) for j in J)):
            out.append(MinimalPrimeSpec22m(d, m, J, tuple(pairs)))
    return out


def count_22m(d: int, m: int) -> int:
    """f_d(m) with f_d(m+1) = f_d(m) + 4^(d-2) f_d(m-1), f_d(1) = f_d(2) = 1."""
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    return _f(d, m)


@lru_cache(maxsize=None)
def _f(d, m):
    if m <= 2:
        return 1
    return _f(d, m - 1) + 4 ** (d - 2) * _f(d, m - 2)


def spec_to_variable_set(spec: MinimalPrimeSpec22m) -> frozenset:
    """Index vectors of the 2|J| variables named by the spec."""
    bad = spec.violations()
    if bad:
        raise ValueError("; ".join(bad))
    return frozenset(p + (j,) for j, pair in zip(spec.J, spec.pairs) for p in pair)


def spec_to_ideal(spec: MinimalPrimeSpec22m, char: int = 0) -> Ideal:
    """<S> + (I with S set to zero) saturated by the remaining variables."""
    shape = (2,) * (spec.d - 1) + (spec.m,)
    ring = multi_ring(shape, char)
    S = [MultiVar(v) for v in sorted(spec_to_variable_set(spec))]
    rest = [g.substitute_zero(S) for g in multidim_adjacent_minors(shape, ring)]
    rest = [g for g in rest if g]
    sat = Ideal(ring, rest) if rest else None
    if sat is not None:
        prod = ring.one()
        for v in ring.variables:
            if v not in S:
                prod = prod * ring.var(v)
        sat = saturate(sat, prod)
    gens = [ring.var(v) for v in S] + (list(sat.groebner()) if sat else [])
    return Ideal(ring, gens)


def box_symmetries(shape) -> list:
    """Index maps: axis permutations preserving the shape, times reversals."""
    shape = tuple(shape)
    d = len(shape)
    perms = [p for p in permutations(range(d)) if all(shape[p[k]] == shape[k] for k in range(d))]
    maps = []
    for p in perms:
        for flips in product((False, True), repeat=d):
            def g(idx, p=p, flips=flips):
                v = [idx[p[k]] for k in range(d)]
                return tuple(shape[k] + 1 - v[k] if flips[k] else v[k] for k in range(d))
            maps.append(g)
    return maps


def multidim_orbit(S, shape) -> set:
    S = frozenset(tuple(v) for v in S)
    return {frozenset(g(v) for v in S) for g in box_symmetries(shape)}


def multidim_symmetry_orbit(S, shape) -> int:
    return len(multidim_orbit(S, shape))


def parse_index_set(text: str) -> list:
    """``"1,2,1;1,2,2"`` -> [(1,2,1), (1,2,2)]; digits alone (``"121"``) also work."""
    out = []
    for part in text.replace(" ", "").split(";"):
        if not part:
            continue
        out.append(tuple(int(x) for x in (part.split(",") if "," in part else part)))
    return out
