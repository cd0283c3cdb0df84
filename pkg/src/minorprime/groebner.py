"""Buchberger engine and the ideal toolbox built on it.

Internally a monomial is packed into one Python int: each field of the int
holds one row of the order's weight matrix applied to the exponent vector,
most significant row first.  Integer comparison is then the monomial order,
multiplication is addition, and divisibility is a guard-bit subtraction.
"""

from __future__ import annotations

import heapq
import logging
import os
from dataclasses import dataclass, field

from .poly import (DIAGLEX, ContextError, DomainError, MonomialOrder, Polynomial,
                   Ring, elimination, grevlex)

log = logging.getLogger(__name__)

DEFAULT_PAIR_BUDGET = 50_000
DEFAULT_BASIS_BUDGET = 20_000
_BITS = 16


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit its pair or basis-size cap."""


def default_budget() -> int:
    env = os.environ.get("MINORPRIME_BUDGET")
    return int(env) if env else DEFAULT_PAIR_BUDGET


# ------------------------------------------------------------------ packing

class _Packer:
    def __init__(self, ring: Ring, order: MonomialOrder):
        n = ring.nvars
        rows = order.weight_rows(ring)
        if order.kind == "lex":
            self.perm = [r.index(1) for r in rows]
            self.exp_fields = None
        else:
            ident = []
            for i in range(n):
                r = [0] * n
                r[i] = 1
                ident.append(r)
            rows = rows + ident
            self.perm = None
        self.rows = [[(i, w) for i, w in enumerate(r) if w] for r in rows]
        self.nfields = len(rows)
        self.n = n
        self.limit = 1 << (_BITS - 1)
        self.mask = (1 << _BITS) - 1
        self.guard = sum(1 << (_BITS * f + _BITS - 1) for f in range(self.nfields))
        self._decode_cache = {}

    def encode(self, e) -> int:
        k = 0
        for row in self.rows:
            v = 0
            for i, w in row:
                v += e[i] * w
            if v >= self.limit:
                raise OverflowError("exponent too large for packed monomial")
            k = (k << _BITS) | v
        return k

    def decode(self, k: int) -> tuple:
        e = self._decode_cache.get(k)
        if e is not None:
            return e
        mask = self.mask
        key = k
        if self.perm is not None:
            out = [0] * self.n
            for f in range(self.n - 1, -1, -1):
                out[self.perm[f]] = k & mask
                k >>= _BITS
            e = tuple(out)
        else:
            out = [0] * self.n
            for i in range(self.n - 1, -1, -1):
                out[i] = k & mask
                k >>= _BITS
            e = tuple(out)
        if len(self._decode_cache) < 200_000:
            self._decode_cache[key] = e
        return e

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x > y else y for x, y in zip(ea, eb)])

    def degree(self, a: int) -> int:
        return sum(self.decode(a))


def _packer(ring, order, _cache={}):
    key = (ring, order)
    P = _cache.get(key)
    if P is None:
        P = _cache[key] = _Packer(ring, order)
    return P


def _to_internal(f: Polynomial, P: _Packer) -> list:
    return sorted(((P.encode(e), c) for e, c in f.terms.items()), reverse=True)


def _from_internal(terms, P: _Packer, ring: Ring) -> Polynomial:
    return Polynomial(ring, {P.decode(k): c for k, c in terms})


def _monic(terms, field):
    c = terms[0][1]
    if c == 1:
        return terms
    inv = field.inv(c)
    p = field.p
    if p:
        return [(k, v * inv % p) for k, v in terms]
    return [(k, v * inv) for k, v in terms]


# --------------------------------------------------------------- reduction

def _reduce(f: dict, basis, leads, P: _Packer, p: int, full=True, quotients=None):
    """Divide the term dict ``f`` by monic internal polys; returns remainder terms
    in descending order.  ``quotients`` (list of dicts) collects multipliers."""
    heap = [-k for k in f]
    heapq.heapify(heap)
    rem = []
    divides = P.divides
    while heap:
        k = -heapq.heappop(heap)
        c = f.pop(k, None)
        if c is None:
            continue
        for idx, lk in enumerate(leads):
            if divides(lk, k):
                q = k - lk
                if quotients is not None:
                    d = quotients[idx]
                    d[q] = d.get(q, 0) + c
                g = basis[idx]
                if p:
                    for gk, gc in g[1:]:
                        nk = gk + q
                        old = f.get(nk)
                        if old is None:
                            f[nk] = -c * gc % p
                            heapq.heappush(heap, -nk)
                        else:
                            v = (old - c * gc) % p
                            if v:
                                f[nk] = v
                            else:
                                del f[nk]
                else:
                    for gk, gc in g[1:]:
                        nk = gk + q
                        old = f.get(nk)
                        if old is None:
                            f[nk] = -c * gc
                            heapq.heappush(heap, -nk)
                        else:
                            v = old - c * gc
                            if v:
                                f[nk] = v
                            else:
                                del f[nk]
                break
        else:
            rem.append((k, c))
            if not full:
                rest = sorted(f.items(), reverse=True)
                return rem + rest
    return rem


def _spoly_reduce(f, g, lcm, basis, leads, P, p):
    qf, qg = lcm - f[0][0], lcm - g[0][0]
    d = {}
    for k, c in f[1:]:
        d[k + qf] = c
    for k, c in g[1:]:
        nk = k + qg
        v = d.get(nk, 0) - c
        if p:
            v %= p
        if v:
            d[nk] = v
        else:
            d.pop(nk, None)
    return _reduce(d, basis, leads, P, p)


# --------------------------------------------------------------- buchberger

@dataclass
class GBStats:
    pairs_created: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0
    basis_max: int = 0


def _buchberger_internal(polys, P: _Packer, field, budget: int, stats: GBStats):
    p = field.p
    basis, leads = [], []
    active = []
    live = {}        # (i, j) -> lcm
    heap = []
    divides = P.divides

    def update(h):
        lh = leads[h]
        cand = []
        for g in active:
            lg = leads[g]
            L = P.lcm(lg, lh)
            cand.append((g, L, L == lg + lh))
        kept = []
        for pos, (g1, L1, cop1) in enumerate(cand):
            if cop1:
                kept.append((g1, L1, cop1))
                continue
            others = [c for c in cand[pos + 1:]] + kept
            if any(divides(L2, L1) for _, L2, _ in others):
                continue
            kept.append((g1, L1, cop1))
        for ij in list(live):
            L = live[ij]
            if divides(lh, L):
                i, j = ij
                if P.lcm(leads[i], lh) != L and P.lcm(leads[j], lh) != L:
                    del live[ij]
        for g, L, cop in kept:
            if cop:
                continue
            live[(g, h)] = L
            heapq.heappush(heap, (P.degree(L), L, h, g))
            stats.pairs_created += 1
        active[:] = [g for g in active if not divides(lh, leads[g])] + [h]
        stats.basis_max = max(stats.basis_max, len(active))
        if len(basis) > DEFAULT_BASIS_BUDGET:
            raise BudgetExceeded(f"basis size exceeded {DEFAULT_BASIS_BUDGET}")

    def current():
        return [basis[i] for i in active], [leads[i] for i in active]

    for f in sorted(polys, key=lambda t: t[0][0]):
        cb, cl = current()
        r = _reduce(dict(f), cb, cl, P, p)
        if not r:
            continue
        r = _monic(r, field)
        basis.append(r)
        leads.append(r[0][0])
        update(len(basis) - 1)

    while heap:
        _, L, h, g = heapq.heappop(heap)
        if live.pop((g, h), None) is None:
            continue
        stats.pairs_reduced += 1
        if stats.pairs_reduced > budget:
            raise BudgetExceeded(f"pair budget of {budget} exceeded")
        cb, cl = current()
        r = _spoly_reduce(basis[g], basis[h], L, cb, cl, P, p)
        if not r:
            stats.zero_reductions += 1
            continue
        r = _monic(r, field)
        basis.append(r)
        leads.append(r[0][0])
        update(len(basis) - 1)

    # reduced basis
    gb = [basis[i] for i in active]
    gb.sort(key=lambda t: t[0][0])
    out = []
    for i, g in enumerate(gb):
        others = gb[:i] + gb[i + 1:]
        ol = [o[0][0] for o in others]
        tail = _reduce(dict(g[1:]), others, ol, P, p)
        out.append(_monic([g[0]] + tail, field))
    out.sort(key=lambda t: t[0][0], reverse=True)
    return out


def buchberger(gens, order: MonomialOrder = DIAGLEX, budget: int | None = None,
               stats: GBStats | None = None) -> list:
    """Reduced Groebner basis of the ideal generated by ``gens``, sorted by
    descending leading monomial.  Raises :class:`BudgetExceeded` past the cap."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ContextError("generators live in different rings")
    P = _packer(ring, order)
    polys = [_monic(_to_internal(g, P), ring.field) for g in gens]
    out = _buchberger_internal(polys, P, ring.field, budget or default_budget(),
                               stats if stats is not None else GBStats())
    return [_from_internal(t, P, ring) for t in out]


def normal_form(f: Polynomial, G, order: MonomialOrder = DIAGLEX, with_quotients=False):
    """Full remainder of ``f`` on division by ``G`` (first divisor wins).

    With ``with_quotients`` returns ``(r, qs)`` where ``f = sum(q*g) + r``.
    """
    ring = f.ring
    for g in G:
        if g.ring != ring:
            raise ContextError("divisor in a different ring")
    P = _packer(ring, order)
    G = [g for g in G if g]
    raw = [_to_internal(g, P) for g in G]
    basis = [_monic(t, ring.field) for t in raw]
    leads = [t[0][0] for t in basis]
    qs = [dict() for _ in basis] if with_quotients else None
    rem = _reduce({P.encode(e): c for e, c in f.terms.items()}, basis, leads, P,
                  ring.field.p, quotients=qs)
    r = _from_internal(rem, P, ring)
    if not with_quotients:
        return r
    inv = [ring.field.inv(t[0][1]) for t in raw]
    quots = []
    for d, s in zip(qs, inv):
        quots.append(Polynomial(ring, {P.decode(k): c for k, c in d.items() if c}).scale(s))
    return r, quots


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DIAGLEX) -> Polynomial:
    ring = f.ring
    P = _packer(ring, order)
    a = _monic(_to_internal(f, P), ring.field)
    b = _monic(_to_internal(g, P), ring.field)
    L = P.lcm(a[0][0], b[0][0])
    qf, qg = L - a[0][0], L - b[0][0]
    d = {k + qf: c for k, c in a[1:]}
    p = ring.field.p
    for k, c in b[1:]:
        nk = k + qg
        v = d.get(nk, 0) - c
        if p:
            v %= p
        if v:
            d[nk] = v
        else:
            d.pop(nk, None)
    return Polynomial(ring, {P.decode(k): c for k, c in d.items()})


@dataclass
class GBCheck:
    ok: bool
    pair: tuple | None = None
    remainder: Polynomial | None = None
    pairs_checked: int = 0

    def __bool__(self):
        return self.ok


def check_groebner_basis(gens, order: MonomialOrder = DIAGLEX) -> GBCheck:
    """Every S-pair reduces to zero modulo ``gens``; coprime pairs are skipped
    (Buchberger's first criterion).  A failure carries the offending pair."""
    gens = [g for g in gens if g]
    if not gens:
        return GBCheck(True)
    ring = gens[0].ring
    P = _packer(ring, order)
    basis = [_monic(_to_internal(g, P), ring.field) for g in gens]
    leads = [b[0][0] for b in basis]
    checked = 0
    for j in range(len(basis)):
        for i in range(j):
            L = P.lcm(leads[i], leads[j])
            if L == leads[i] + leads[j]:
                continue
            checked += 1
            r = _spoly_reduce(basis[i], basis[j], L, basis, leads, P, ring.field.p)
            if r:
                return GBCheck(False, (i, j), _from_internal(r, P, ring), checked)
    return GBCheck(True, pairs_checked=checked)


def is_groebner_basis(gens, order: MonomialOrder = DIAGLEX) -> bool:
    return check_groebner_basis(gens, order).ok


# -------------------------------------------------------------------- ideals

class Ideal:
    """Generators in one ring plus a per-order cache of reduced bases."""

    def __init__(self, ring: Ring, generators=()):
        gens = []
        seen = set()
        for g in generators:
            if g.ring != ring:
                raise ContextError("generator not in the ideal's ring")
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}

    def __repr__(self):
        return f"Ideal(<{len(self.generators)} generators> in {self.ring})"

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise ContextError("ideals live in different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def groebner(self, order: MonomialOrder = DIAGLEX, budget: int | None = None) -> tuple:
        gb = self._gb.get(order)
        if gb is None:
            gb = self._gb[order] = tuple(buchberger(self.generators, order, budget))
        return gb

    def contains(self, f: Polynomial, order: MonomialOrder = DIAGLEX) -> bool:
        return member(f, self, order)

    __contains__ = contains

    def with_field(self, field) -> "Ideal":
        ring = self.ring.with_field(field)
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def to_ring(self, ring: Ring) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(),
                "generators": [str(g) for g in self.generators]}

    @classmethod
    def from_json(cls, d: dict) -> "Ideal":
        from .poly import parse_polynomial
        ring = Ring.from_json(d["ring"])
        return cls(ring, [parse_polynomial(s, ring) for s in d["generators"]])

    def cas_lines(self) -> str:
        return "\n".join(str(g) for g in self.generators) + "\n"


def member(f: Polynomial, I: Ideal, order: MonomialOrder = DIAGLEX) -> bool:
    if f.ring != I.ring:
        raise ContextError("polynomial and ideal live in different rings")
    if not f:
        return True
    return not normal_form(f, I.groebner(order), order)


def ideal_equal(I: Ideal, J: Ideal, order: MonomialOrder = DIAGLEX) -> bool:
    if I.ring != J.ring:
        raise ContextError("ideals live in different rings")
    return set(I.groebner(order)) == set(J.groebner(order))


def is_subideal(I: Ideal, J: Ideal, order: MonomialOrder = DIAGLEX) -> bool:
    """I contained in J."""
    return all(member(g, J, order) for g in I.generators)


def _eliminate(gens, ring_ext: Ring, block, target: Ring, inner: MonomialOrder, budget):
    order = elimination(block, inner)
    gb = buchberger(gens, order, budget)
    idx = [ring_ext.index[v] for v in block]
    kept = [g for g in gb if not any(e[i] for e in g.terms for i in idx)]
    return Ideal(target, [g.to_ring(target) for g in kept])


def intersect(I: Ideal, J: Ideal, inner: MonomialOrder | None = None,
              budget: int | None = None) -> Ideal:
    """I ∩ J via <t*I, (1-t)*J> and elimination of t."""
    if I.ring != J.ring:
        raise ContextError("ideals live in different rings")
    ring = I.ring
    t = ring.fresh_aux()
    R = ring.extend([t])
    tv = R.var(t)
    gens = [tv * f.to_ring(R) for f in I.generators]
    gens += [(1 - tv) * g.to_ring(R) for g in J.generators]
    return _eliminate(gens, R, [t], ring, inner or grevlex(), budget)


def intersect_all(ideals, inner: MonomialOrder | None = None, budget=None) -> Ideal:
    ideals = list(ideals)
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J, inner, budget)
    return acc


def saturate(I: Ideal, f: Polynomial, inner: MonomialOrder | None = None,
             budget: int | None = None) -> Ideal:
    """I : f^infinity.  A product of variables is saturated one variable at a time;
    anything else goes through a single Rabinowitsch variable."""
    if not f:
        raise DomainError("cannot saturate by zero")
    if f.ring != I.ring:
        raise ContextError("polynomial and ideal live in different rings")
    if len(f.terms) == 1:
        (e, _), = f.terms.items()
        out = I
        for i, k in enumerate(e):
            if k:
                out = _saturate_one(out, f.ring.var(f.ring.variables[i]), inner, budget)
        return out
    return _saturate_one(I, f, inner, budget)


def _saturate_one(I: Ideal, f: Polynomial, inner, budget) -> Ideal:
    ring = I.ring
    y = ring.fresh_aux()
    R = ring.extend([y])
    gens = [g.to_ring(R) for g in I.generators]
    gens.append(1 - R.var(y) * f.to_ring(R))
    return _eliminate(gens, R, [y], ring, inner or grevlex(), budget)


def pairwise_incomparable(ideals, order: MonomialOrder = DIAGLEX):
    """True iff no ideal of the list contains another.  Returns ``(ok, witness)``
    where the witness is the first contained pair ``(i, j)`` meaning I_i ⊆ I_j."""
    ideals = list(ideals)
    for i, I in enumerate(ideals):
        for j, J in enumerate(ideals):
            if i != j and is_subideal(I, J, order):
                return False, (i, j)
    return True, None


def initial_ideal(I: Ideal, order: MonomialOrder = DIAGLEX):
    from .monomial import MonomialIdeal
    return MonomialIdeal(I.ring, [g.leading_monomial(order) for g in I.groebner(order)])
