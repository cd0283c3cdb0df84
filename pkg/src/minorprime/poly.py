"""Exact multivariate polynomials over QQ or a prime field.

Monomials are dense exponent tuples indexed by the ring's variable roster.
The roster is sorted so that plain lexicographic comparison of exponent
tuples is the diagonal lex order (auxiliary variables first, then the grid
or tensor entries in row-major order).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

DEFAULT_PRIME = 32003


class ContextError(ValueError):
    """Objects from different rings were combined."""


class DomainError(ValueError):
    pass


# ---------------------------------------------------------------- variables

@dataclass(frozen=True, order=True)
class Variable:
    group: int          # 0 = auxiliary, 1 = matrix entry
    index: tuple

    @property
    def name(self) -> str:
        letter = "t" if self.group == 0 else "x"
        return f"{letter}[{','.join(map(str, self.index))}]"

    @property
    def is_aux(self) -> bool:
        return self.group == 0

    def __repr__(self):
        return self.name


def GridVar(row: int, col: int) -> Variable:
    return Variable(1, (row, col))


def MultiVar(*index: int) -> Variable:
    if len(index) == 1 and isinstance(index[0], tuple):
        index = index[0]
    return Variable(1, tuple(index))


def AuxVar(tag: int) -> Variable:
    return Variable(0, (tag,))


# ------------------------------------------------------------------- fields

class Field:
    """QQ when ``p == 0``, otherwise the prime field GF(p)."""

    def __init__(self, p: int = 0):
        if p and (p < 2 or p >= 2**31 or not _is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {p}")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def convert(self, c):
        if self.p == 0:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % self.p == 0:
                raise DomainError(f"denominator of {c} vanishes mod {self.p}")
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / Fraction(c)
        return pow(c, -1, self.p)

    def symmetric(self, c):
        """Representative used for printing: fractions as is, residues in (-p/2, p/2]."""
        if self.p == 0:
            return c
        return c - self.p if c > self.p // 2 else c


QQ = Field(0)


def GF(p: int = DEFAULT_PRIME) -> Field:
    return Field(p)


def field_for(char: int) -> Field:
    return QQ if char == 0 else Field(char)


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -------------------------------------------------------------------- rings

class Ring:
    """Polynomial ring context: a fixed variable roster and a coefficient field."""

    def __init__(self, variables: Iterable[Variable], field: Field = QQ, shape=None):
        variables = tuple(sorted(set(variables)))
        tags = [v.index for v in variables if v.is_aux]
        if len(tags) != len(set(tags)):
            raise ContextError("duplicate auxiliary tag")
        self.variables = variables
        self.field = field
        self.shape = tuple(shape) if shape is not None else None
        self.index = {v: i for i, v in enumerate(variables)}
        self.nvars = len(variables)
        if shape is not None:
            for v in variables:
                if not v.is_aux and (len(v.index) != len(shape) or
                                     any(not 1 <= a <= b for a, b in zip(v.index, shape))):
                    raise ContextError(f"{v} outside shape {shape}")

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.variables == other.variables
                and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"Ring({self.nvars} vars, shape={self.shape}, {self.field})"

    @property
    def char(self) -> int:
        return self.field.p

    def with_field(self, field: Field) -> "Ring":
        return Ring(self.variables, field, self.shape)

    def extend(self, extra: Iterable[Variable]) -> "Ring":
        return Ring(self.variables + tuple(extra), self.field, self.shape)

    def fresh_aux(self) -> Variable:
        used = {v.index[0] for v in self.variables if v.is_aux}
        tag = 1
        while tag in used:
            tag += 1
        return AuxVar(tag)

    def subring(self, variables: Iterable[Variable]) -> "Ring":
        return Ring(variables, self.field, self.shape)

    # constructors
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, v) -> "Polynomial":
        if not isinstance(v, Variable):
            v = GridVar(*v) if len(v) == 2 else MultiVar(tuple(v))
        if v not in self.index:
            raise ContextError(f"{v} not in ring")
        e = [0] * self.nvars
        e[self.index[v]] = 1
        return Polynomial(self, {tuple(e): self.field.convert(1)})

    def x(self, *index) -> "Polynomial":
        return self.var(Variable(1, tuple(index)))

    def monomial(self, exps: Mapping[Variable, int], coeff=1) -> "Polynomial":
        e = [0] * self.nvars
        for v, k in exps.items():
            e[self.index[v]] += k
        c = self.field.convert(coeff)
        return Polynomial(self, {tuple(e): c} if c else {})

    def to_json(self) -> dict:
        kind = "grid" if self.shape is not None and len(self.shape) == 2 else "multidim"
        d = {"kind": kind, "shape": list(self.shape) if self.shape else None,
             "char": self.char,
             "aux": [v.index[0] for v in self.variables if v.is_aux]}
        full = self.shape is not None and self.nvars - len(d["aux"]) == _prod(self.shape)
        if not full:
            d["variables"] = [v.name for v in self.variables if not v.is_aux]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Ring":
        field = field_for(d.get("char", 0))
        shape = d.get("shape")
        aux = [AuxVar(t) for t in d.get("aux", [])]
        if "variables" in d:
            main = [parse_variable(s) for s in d["variables"]]
        else:
            main = [Variable(1, idx) for idx in _grid_indices(shape)]
        return cls(main + aux, field, shape)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _grid_indices(shape):
    idx = [()]
    for m in shape:
        idx = [i + (k,) for i in idx for k in range(1, m + 1)]
    return idx


def grid_ring(m: int, n: int, char: int = 0) -> Ring:
    return Ring([GridVar(i, j) for i in range(1, m + 1) for j in range(1, n + 1)],
                field_for(char), (m, n))


def multi_ring(shape, char: int = 0) -> Ring:
    shape = tuple(shape)
    return Ring([MultiVar(idx) for idx in _grid_indices(shape)], field_for(char), shape)


# ----------------------------------------------------------------- orders

@dataclass(frozen=True)
class MonomialOrder:
    """Lex / GrevLex with a variable priority list, or an elimination order.

    ``priority=None`` means the ring roster order, i.e. diagonal lex for grid
    rings.  An elimination order ranks block degree first and breaks ties with
    ``inner``.
    """

    kind: str = "lex"
    priority: tuple | None = None
    block: frozenset = frozenset()
    inner: "MonomialOrder | None" = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown order kind {self.kind}")
        if self.kind == "elim" and self.inner is None:
            object.__setattr__(self, "inner", MonomialOrder("lex"))

    def _perm(self, ring: Ring):
        if self.priority is None:
            return list(range(ring.nvars))
        perm = [ring.index[v] for v in self.priority if v in ring.index]
        if sorted(perm) != list(range(ring.nvars)):
            rest = [i for i in range(ring.nvars) if i not in set(perm)]
            if len(perm) != len(set(perm)):
                raise ContextError("priority list repeats a variable")
            perm = perm + rest
        return perm

    def weight_rows(self, ring: Ring) -> list:
        """Nonnegative integer weight matrix; monomials compare lexicographically
        by their weight vectors."""
        n = ring.nvars
        perm = self._perm(ring) if self.kind != "elim" else None
        if self.kind == "lex":
            rows = []
            for i in perm:
                r = [0] * n
                r[i] = 1
                rows.append(r)
            return rows
        if self.kind == "grevlex":
            rows = []
            for k in range(n, 0, -1):
                r = [0] * n
                for i in perm[:k]:
                    r[i] = 1
                rows.append(r)
            return rows
        block = [ring.index[v] for v in self.block if v in ring.index]
        r = [0] * n
        for i in block:
            r[i] = 1
        return [r] + self.inner.weight_rows(ring)

    def is_pure_lex(self) -> bool:
        return self.kind == "lex"

    def key(self, ring: Ring):
        rows = _rows_cache(self, ring)
        if self.kind == "lex":
            perm = [r.index(1) for r in rows]
            if perm == list(range(ring.nvars)):
                return lambda e: e
            return lambda e: tuple(e[i] for i in perm)
        sparse = [[(i, w) for i, w in enumerate(r) if w] for r in rows]
        return lambda e: tuple(sum(e[i] * w for i, w in r) for r in sparse)


_ROWS = {}


def _rows_cache(order, ring):
    k = (order, ring)
    if k not in _ROWS:
        _ROWS[k] = order.weight_rows(ring)
    return _ROWS[k]


DIAGLEX = MonomialOrder("lex")


def lex(priority=None) -> MonomialOrder:
    return MonomialOrder("lex", tuple(priority) if priority is not None else None)


def grevlex(priority=None) -> MonomialOrder:
    return MonomialOrder("grevlex", tuple(priority) if priority is not None else None)


def elimination(block, inner: MonomialOrder | None = None) -> MonomialOrder:
    return MonomialOrder("elim", None, frozenset(block), inner or DIAGLEX)


def compare(a: tuple, b: tuple, order: MonomialOrder, ring: Ring) -> int:
    """-1, 0, 1 as monomial a is smaller, equal, larger than b."""
    if len(a) != ring.nvars or len(b) != ring.nvars:
        raise ContextError("monomial length does not match ring")
    k = order.key(ring)
    ka, kb = k(a), k(b)
    return (ka > kb) - (ka < kb)


# ------------------------------------------------------------- polynomials

class Polynomial:
    """Immutable polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic protocol
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine polynomial with {type(other).__name__}")
        if other.ring != self.ring:
            raise ContextError("polynomials live in different rings")
        return other

    # -- arithmetic
    def __add__(self, other):
        other = self._check(other)
        p = self.ring.field.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, {e: (-c) % p if p else -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        p = self.ring.field.p
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if p:
                    v %= p
                out[e] = v
        return Polynomial(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative exponent")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = self.ring.field.convert(c)
        p = self.ring.field.p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: (v * c) % p if p else v * c for e, v in self.terms.items()})

    # -- ordered views
    def sorted_terms(self, order: MonomialOrder = DIAGLEX) -> list:
        """(coefficient, exponent) pairs, strictly descending in ``order``."""
        k = order.key(self.ring)
        return [(self.terms[e], e) for e in sorted(self.terms, key=k, reverse=True)]

    def leading_term(self, order: MonomialOrder = DIAGLEX):
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        k = order.key(self.ring)
        e = max(self.terms, key=k)
        return self.terms[e], e

    def leading_monomial(self, order: MonomialOrder = DIAGLEX) -> tuple:
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder = DIAGLEX) -> "Polynomial":
        c, _ = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    # -- structure
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    @property
    def support(self) -> frozenset:
        idx = set()
        for e in self.terms:
            idx.update(i for i, k in enumerate(e) if k)
        return frozenset(self.ring.variables[i] for i in idx)

    def evaluate(self, point) -> object:
        """Evaluate at ``point``: a mapping Variable -> value or a callable."""
        get = point if callable(point) else point.__getitem__
        vals = [get(v) for v in self.ring.variables]
        p = self.ring.field.p
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v ** k
            total += t
        return total % p if p else total

    def substitute_zero(self, variables) -> "Polynomial":
        idx = {self.ring.index[v] for v in variables if v in self.ring.index}
        return Polynomial(self.ring, {e: c for e, c in self.terms.items()
                                      if not any(e[i] for i in idx)})

    def to_ring(self, ring: Ring) -> "Polynomial":
        """Re-embed into ``ring`` by variable identity (and reduce mod p if needed)."""
        pos = []
        for i, v in enumerate(self.ring.variables):
            if v in ring.index:
                pos.append((i, ring.index[v]))
        out = {}
        fp = ring.field.p
        for e, c in self.terms.items():
            if any(k and v not in ring.index for k, v in zip(e, self.ring.variables)):
                raise ContextError("polynomial uses a variable missing from target ring")
            ne = [0] * ring.nvars
            for i, j in pos:
                ne[j] = e[i]
            if self.ring.field != ring.field:
                c = ring.field.convert(c)
            if c:
                ne = tuple(ne)
                v = out.get(ne, 0) + c
                out[ne] = v % fp if fp else v
        return Polynomial(ring, {e: c for e, c in out.items() if c})

    # -- text
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


# ----------------------------------------------------------- text grammar

def format_monomial(e: tuple, ring: Ring) -> str:
    parts = []
    for v, k in zip(ring.variables, e):
        if k == 1:
            parts.append(v.name)
        elif k:
            parts.append(f"{v.name}^{k}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder = DIAGLEX) -> str:
    if not f.terms:
        return "0"
    out = []
    for c, e in f.sorted_terms(order):
        c = f.ring.field.symmetric(c)
        neg = c < 0
        c = -c if neg else c
        mono = format_monomial(e, f.ring)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


_VAR_RE = re.compile(r"([xt])\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]")
_TOKEN_RE = re.compile(r"\s*(?:(?P<var>[xt]\[[\d\s,]+\])|(?P<num>\d+)|(?P<op>[-+*^/()]))")


def parse_variable(text: str) -> Variable:
    m = _VAR_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"bad variable {text!r}")
    idx = tuple(int(s) for s in m.group(2).split(","))
    return AuxVar(idx[0]) if m.group(1) == "t" else Variable(1, idx)


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text[pos:pos + 20]!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse the ``x[i,j]`` / ``t[k]`` text grammar into ``ring``.

    Grammar: sums of signed products of integers, rationals ``a/b``,
    variables, parenthesised expressions and ``^`` powers.
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term()
        if sign < 0:
            acc = -acc
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                acc = acc * rhs
            else:
                if len(rhs.terms) != 1 or any(any(e) for e in rhs.terms):
                    raise ValueError("division only by a constant")
                acc = acc.scale(ring.field.inv(next(iter(rhs.terms.values()))))
        return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            base = base ** int(val)
        return base

    def atom():
        kind, val = take() if pos < len(toks) else (None, None)
        if kind == "num":
            return ring.constant(int(val))
        if kind == "var":
            return ring.var(parse_variable(val))
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return inner
        if (kind, val) == ("op", "-"):
            return -atom()
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return result
