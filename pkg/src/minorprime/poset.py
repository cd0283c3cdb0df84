"""The interval poset of a prime sequence, its D/k/l labels, and the map phi
that builds matrices of the variety of P_Gamma from group blocks and affine
coordinates."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .linalg import NumericMatrix, matrix_rank
from .sequences import Interval, PrimeSequence


@dataclass
class PosetNode:
    interval: Interval
    row: int
    left_parent: int | None = None
    right_parent: int | None = None
    left_child: int | None = None
    right_child: int | None = None
    D: int = 0
    k: int = 0
    ell: int | None = None     # only for row-1 nodes

    def to_json(self) -> dict:
        d = {"interval": [self.interval.a, self.interval.b], "row": self.row,
             "D": self.D, "k": self.k,
             "left_parent": self.left_parent, "right_parent": self.right_parent,
             "left_child": self.left_child, "right_child": self.right_child}
        if self.ell is not None:
            d["ell"] = self.ell
        return d


class GammaPoset:
    """Rows of iterated consecutive intersections of the intervals of Gamma."""

    def __init__(self, gamma: PrimeSequence):
        gamma.validate()
        self.gamma = gamma
        self.m, self.n = gamma.m, gamma.n
        self.nodes: list[PosetNode] = []
        self.rows: list[list[int]] = []
        current = []
        for iv in gamma.intervals:
            self.nodes.append(PosetNode(iv, 1))
            current.append(len(self.nodes) - 1)
        while current:
            self.rows.append(current)
            nxt = []
            for u, v in zip(current, current[1:]):
                iv = self.nodes[u].interval.intersect(self.nodes[v].interval)
                if iv is None:
                    continue
                node = PosetNode(iv, len(self.rows) + 1, left_parent=u, right_parent=v)
                self.nodes.append(node)
                idx = len(self.nodes) - 1
                self.nodes[u].right_child = idx
                self.nodes[v].left_child = idx
                nxt.append(idx)
            current = nxt
        self._label()

    def _label(self):
        m = self.m
        for nd in self.nodes:
            w = nd.interval.width
            nd.D = m - 1 if nd.row == 1 else (w - 1 if nd.row == 2 else w)
        for nd in self.nodes:
            top = m if nd.left_parent is None else self.nodes[nd.left_parent].D
            bottom = 0 if nd.left_child is None else self.nodes[nd.left_child].D
            nd.k = top - bottom
        for s in self.rows[0]:
            self.nodes[s].ell = sum(self.nodes[self.p_of(i, s)].D for i in self.columns_of(s))

    # -- structure helpers
    @property
    def maximal(self) -> list:
        return list(self.rows[0])

    def chain(self, q: int) -> list:
        """q, its left child, that node's left child, ..."""
        out = [q]
        while self.nodes[out[-1]].left_child is not None:
            out.append(self.nodes[out[-1]].left_child)
        return out

    def columns_of(self, q: int) -> list:
        """Real columns of Lambda for row-1 node q: [a_s, a_{s+1}-1] or [a_s, n]."""
        pos = self.rows[0].index(q)
        a = self.nodes[q].interval.a
        if pos + 1 < len(self.rows[0]):
            hi = self.nodes[self.rows[0][pos + 1]].interval.a - 1
        else:
            hi = self.n
        return [i for i in range(a, hi + 1) if 1 <= i <= self.n]

    def p_of(self, i: int, q: int | None = None) -> int:
        """The unique inclusion-minimal node containing column i."""
        holders = [j for j, nd in enumerate(self.nodes) if i in nd.interval]
        minimal = [j for j in holders
                   if not any(o != j and self.nodes[j].interval.contains_interval(self.nodes[o].interval)
                              for o in holders)]
        if len(minimal) != 1:
            raise RuntimeError(f"column {i} has {len(minimal)} minimal poset elements")
        if q is not None and minimal[0] not in self.chain(q):
            raise RuntimeError(f"minimal element for column {i} is off the left-child chain")
        return minimal[0]

    def parent_D(self, j: int) -> int:
        lp = self.nodes[j].left_parent
        return self.m if lp is None else self.nodes[lp].D

    def block_sizes(self) -> list:
        """k(p) in the order the blocks are applied by phi (right to left)."""
        return [self.nodes[j].k for q in reversed(self.rows[0]) for j in self.chain(q)]

    def affine_sizes(self) -> list:
        """l(q) for the maximal elements, left to right."""
        return [self.nodes[q].ell for q in self.rows[0]]

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "gamma": self.gamma.as_pairs(),
                "rows": [[[self.nodes[j].interval.a, self.nodes[j].interval.b] for j in r]
                         for r in self.rows],
                "nodes": [nd.to_json() for nd in self.nodes],
                "block_sizes": self.block_sizes(), "affine_sizes": self.affine_sizes()}


def build_poset(gamma: PrimeSequence) -> GammaPoset:
    return GammaPoset(gamma)


# --------------------------------------------------------------------- phi

@dataclass
class PhiPoint:
    """A point of the product of GL blocks (one per poset node) and affine spaces
    (one per maximal node), keyed by node index."""
    blocks: dict = field(default_factory=dict)
    affine: dict = field(default_factory=dict)

    def to_json(self, poset: GammaPoset) -> dict:
        def iv(j):
            nd = poset.nodes[j].interval
            return [nd.a, nd.b]
        return {"blocks": [{"interval": iv(j), "matrix": NumericMatrix(b).to_json()}
                           for j, b in sorted(self.blocks.items())],
                "affine": [{"interval": iv(j), "values": NumericMatrix([v]).to_json()[0]}
                           for j, v in sorted(self.affine.items())]}


def zero_pattern(poset: GammaPoset, q: int) -> list:
    """0/1 mask (m x |Lambda|) of the entries of Z filled by affine coordinates."""
    cols = poset.columns_of(q)
    m = poset.m
    return [[1 if r < poset.nodes[poset.p_of(i, q)].D else 0 for i in cols] for r in range(m)]


def phi(poset: GammaPoset, point: PhiPoint) -> NumericMatrix:
    """Assemble the m x n matrix right to left, one maximal interval at a time."""
    m = poset.m
    for j, nd in enumerate(poset.nodes):
        g = point.blocks.get(j)
        if g is None or len(g) != nd.k or any(len(r) != nd.k for r in g):
            raise ValueError(f"block for {nd.interval} must be {nd.k} x {nd.k}")
        if matrix_rank(g) != nd.k:
            raise ValueError(f"block for {nd.interval} is singular")
    for q in poset.rows[0]:
        vals = point.affine.get(q, [])
        if len(vals) != poset.nodes[q].ell:
            raise ValueError(f"{poset.nodes[q].interval} needs {poset.nodes[q].ell} affine coordinates")

    Y = NumericMatrix([[] for _ in range(m)])
    for q in reversed(poset.rows[0]):
        mask = zero_pattern(poset, q)
        vals = iter(point.affine[q])
        width = len(mask[0]) if mask else 0
        Z = [[0] * width for _ in range(m)]
        for c in range(width):
            for r in range(m):
                if mask[r][c]:
                    Z[r][c] = next(vals)
        X = NumericMatrix(Z).hstack(Y) if width else Y
        rows = X.rows
        for j in poset.chain(q):
            k = poset.nodes[j].k
            top = poset.parent_D(j)
            block = point.blocks[j]
            sl = rows[top - k:top]
            new = [[sum(block[a][b] * sl[b][c] for b in range(k)) for c in range(len(sl[0]))]
                   for a in range(k)] if sl and sl[0] else sl
            rows[top - k:top] = new
        Y = NumericMatrix(rows)
    return Y


def random_point(poset: GammaPoset, rng: random.Random, entry_range=3,
                 affine_range=5) -> PhiPoint:
    """Small-integer point; blocks are rejection sampled until invertible."""
    pt = PhiPoint()
    for j, nd in enumerate(poset.nodes):
        while True:
            g = [[rng.randint(-entry_range, entry_range) for _ in range(nd.k)]
                 for _ in range(nd.k)]
            if matrix_rank(g) == nd.k:
                break
        pt.blocks[j] = g
    for q in poset.rows[0]:
        pt.affine[q] = [rng.randint(-affine_range, affine_range)
                        for _ in range(poset.nodes[q].ell)]
    return pt


def phi_sample(gamma: PrimeSequence, seed: int) -> tuple:
    poset = GammaPoset(gamma)
    rng = random.Random(seed)
    pt = random_point(poset, rng)
    return phi(poset, pt), pt, poset
