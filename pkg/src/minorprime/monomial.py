"""Monomial ideals: minimal generators, polarization, codimension by minimum
vertex cover, and degree from the Hilbert series numerator."""

from __future__ import annotations

from functools import lru_cache

from .poly import Polynomial


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(exps) -> list:
    """Antichain of the exponent vectors under divisibility, sorted."""
    gens = sorted(set(map(tuple, exps)), key=lambda e: (sum(e), e))
    out = []
    for e in gens:
        if not any(_divides(g, e) for g in out):
            out.append(e)
    return sorted(out, reverse=True)


class MonomialIdeal:
    def __init__(self, ring, gens):
        self.ring = ring
        exps = []
        for g in gens:
            if hasattr(g, "terms"):
                if len(g.terms) != 1:
                    raise ValueError("monomial ideal generators must be monomials")
                g = next(iter(g.terms))
            exps.append(tuple(g))
        self.gens = minimalize(exps)

    def __repr__(self):
        return f"MonomialIdeal({self.monomials()})"

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __len__(self):
        return len(self.gens)

    def monomials(self) -> list:
        """Generators as polynomials of the ring."""
        return [Polynomial(self.ring, {e: 1}) for e in self.gens]

    def contains(self, exp) -> bool:
        return any(_divides(g, exp) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def supports(self) -> list:
        return [frozenset(i for i, x in enumerate(g) if x) for g in self.gens]


def polarize(M: MonomialIdeal) -> list:
    """Squarefree supports of the polarization; new variable (i, k) stands for
    the k-th power slot of variable i."""
    return [frozenset((i, k) for i, x in enumerate(g) for k in range(x)) for g in M.gens]


def _squarefree_supports(M: MonomialIdeal) -> list:
    return M.supports() if M.is_squarefree() else polarize(M)


def minimum_vertex_cover(edges) -> int:
    """Smallest set meeting every hyperedge (branching on a smallest edge)."""
    edges = [frozenset(e) for e in edges]
    if any(not e for e in edges):
        raise ValueError("the unit ideal has no vertex cover")
    best = [sum(1 for _ in set().union(*edges))] if edges else [0]

    def go(es, size):
        if size >= best[0]:
            return
        if not es:
            best[0] = size
            return
        e = min(es, key=len)
        for v in sorted(e, key=repr):
            go([f for f in es if v not in f], size + 1)

    go(edges, 0)
    return best[0]


def monomial_codim(M: MonomialIdeal) -> int:
    if not M.gens:
        return 0
    return minimum_vertex_cover(_squarefree_supports(M))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def hilbert_numerator(M: MonomialIdeal) -> list:
    """Coefficients of K(t) with HS(R/M) = K(t) / (1-t)^nvars (standard grading).

    Pivot recursion: K(I) = K(I + <x>) + t K(I : x), with x a variable that
    occurs in the most generators; pairwise coprime generators are the base
    case, giving a product of (1 - t^deg).
    """
    return list(_numerator(tuple(M.gens)))


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    if max(counts) <= 1:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return tuple(_trim(out))
    x = max(range(n), key=lambda i: (counts[i], -i))
    unit = tuple(1 if i == x else 0 for i in range(n))
    plus = minimalize([g for g in gens if not g[x]] + [unit])
    colon = minimalize([tuple(v - 1 if i == x and v else v for i, v in enumerate(g))
                        for g in gens])
    a = _numerator(tuple(plus))
    b = (0,) + _numerator(tuple(colon))
    return tuple(_trim(_poly_add(list(a), list(b))))


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _reduced_numerator(M: MonomialIdeal):
    """Divide K(t) by (1-t) while it vanishes at 1; returns (h, divisions)."""
    k = hilbert_numerator(M)
    times = 0
    while sum(k) == 0 and any(k):
        # synthetic division by (1 - t): q_i = sum_{j<=i} k_j
        q, acc = [], 0
        for c in k[:-1]:
            acc += c
            q.append(acc)
        k = _trim(q) if q else [0]
        times += 1
    return k, times


def hilbert_codim(M: MonomialIdeal) -> int:
    """Codimension read off the Hilbert series (order of the pole drop)."""
    return _reduced_numerator(M)[1]


def monomial_degree(M: MonomialIdeal) -> int:
    """Degree of R/M: h(1) for the reduced numerator h."""
    h, _ = _reduced_numerator(M)
    return sum(h)
