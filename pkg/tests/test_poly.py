import pytest
from hypothesis import given, settings, strategies as st

from minorprime.adjacent import GenericMatrix, MinorSpec, minor
from minorprime.poly import (DIAGLEX, ContextError, DomainError, GF, QQ, GridVar, MultiVar,
                             Polynomial, Ring, compare, elimination, grevlex, grid_ring,
                             lex, multi_ring, parse_polynomial)

R22 = grid_ring(2, 2)
R36 = grid_ring(3, 6)


def x(i, j, ring=R22):
    return ring.x(i, j)


def test_compare_examples():
    e = lambda f: f.leading_monomial()
    assert compare(e(x(1, 1)), e(x(1, 2)), DIAGLEX, R22) == 1
    assert compare(e(x(2, 1)), e(x(2, 1)), DIAGLEX, R22) == 0
    assert compare(e(x(1, 1) * x(2, 2)), e(x(1, 2) * x(2, 1)), DIAGLEX, R22) == 1


def test_arith_examples():
    f = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)
    assert f + R22.zero() == f
    assert not (f - f)
    assert x(1, 1) * x(2, 2) == parse_polynomial("x[1,1]*x[2,2]", R22)


def test_leading_term_examples():
    f = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)
    assert f.leading_term() == (1, (1, 0, 0, 1))
    R33 = grid_ring(3, 3)
    det = minor(GenericMatrix(3, 3, R33), MinorSpec((1, 2, 3), (1, 2, 3)))
    c, e = det.leading_term()
    assert c == 1 and Polynomial(R33, {e: 1}) == R33.x(1, 1) * R33.x(2, 2) * R33.x(3, 3)
    g = R22.x(2, 1).scale(7)
    assert g.leading_term() == (7, g.leading_monomial())
    with pytest.raises(DomainError):
        R22.zero().leading_term()


def test_context_errors():
    with pytest.raises(ContextError):
        x(1, 1) + grid_ring(2, 3).x(1, 1)
    with pytest.raises(ContextError):
        Ring([GridVar(3, 1)], QQ, (2, 2))


def test_text_round_trip_and_grammar():
    f = parse_polynomial("x[1,1] * x[2,2]-x[1,2]*x[2,1]", R22)
    assert str(f) == "x[1,1]*x[2,2] - x[1,2]*x[2,1]"
    assert parse_polynomial(str(f), R22) == f
    g = parse_polynomial("(x[1,1] + 2)^2 - 3/3*x[2,2]", R22)
    assert g == x(1, 1) ** 2 + 4 * x(1, 1) + 4 - x(2, 2)
    R = multi_ring((2, 2, 3))
    h = parse_polynomial("x[1,1,1]*x[2,2,3] - 5", R)
    assert R.var(MultiVar(1, 1, 1)) * R.var(MultiVar(2, 2, 3)) - 5 == h
    with pytest.raises(ValueError):
        parse_polynomial("x[1,1] +", R22)


def test_gf_arithmetic_and_symmetric_printing():
    R = grid_ring(2, 2, 7)
    f = R.x(1, 1).scale(5)
    assert f.terms[f.leading_monomial()] == 5
    assert str(f) == "-2*x[1,1]"
    assert GF(7).inv(3) * 3 % 7 == 1


def test_evaluate_and_substitute():
    f = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)
    assert f.evaluate({GridVar(1, 1): 2, GridVar(2, 2): 3, GridVar(1, 2): 1, GridVar(2, 1): 6}) == 0
    assert f.substitute_zero([GridVar(1, 1)]) == -x(1, 2) * x(2, 1)


def test_elimination_order_block_domination():
    R = R22
    t = elimination([GridVar(2, 2)])
    big = x(2, 2).leading_monomial()
    small = (x(1, 1) ** 5).leading_monomial()
    assert compare(big, small, t, R) == 1
    assert compare(big, small, DIAGLEX, R) == -1


# ---- properties

exps = st.tuples(*[st.integers(0, 3)] * 6)
orders = st.sampled_from([DIAGLEX, grevlex(), lex(list(reversed(R36.variables[:6]))
                                                   + list(R36.variables[6:])),
                          elimination([GridVar(1, 2), GridVar(3, 6)])])


def _pad(e):
    return e + (0,) * (R36.nvars - 6)


@settings(max_examples=200, deadline=None)
@given(exps, exps, exps, orders)
def test_order_is_total_transitive_and_multiplicative(a, b, c, order):
    a, b, c = _pad(a), _pad(b), _pad(c)
    ab, ba = compare(a, b, order, R36), compare(b, a, order, R36)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if ab > 0 and compare(b, c, order, R36) > 0:
        assert compare(a, c, order, R36) > 0
    if ab > 0:
        ac = tuple(u + v for u, v in zip(a, c))
        bc = tuple(u + v for u, v in zip(b, c))
        assert compare(ac, bc, order, R36) > 0


def test_minor_leads_are_diagonals():
    from itertools import combinations
    for m, n in [(4, 4), (4, 6), (6, 6)]:
        R = grid_ring(m, n)
        M = GenericMatrix(m, n, R)
        for k in range(1, 5):
            for rows in list(combinations(range(1, m + 1), k))[:6]:
                for cols in list(combinations(range(1, n + 1), k))[:6]:
                    f = minor(M, MinorSpec(rows, cols))
                    diag = R.one()
                    for r, c in zip(rows, cols):
                        diag = diag * R.x(r, c)
                    assert f.leading_monomial() == diag.leading_monomial()


small_poly = st.lists(st.tuples(st.tuples(*[st.integers(0, 2)] * 4),
                                st.integers(-20, 20)), max_size=5)


def _build(ring, terms):
    f = ring.zero()
    for e, c in terms:
        f = f + Polynomial(ring, {e: ring.field.convert(c)} if ring.field.convert(c) else {})
    return f


@settings(max_examples=100, deadline=None)
@given(small_poly, small_poly, small_poly)
def test_ring_axioms_and_mod_p_agreement(a, b, c):
    f, g, h = (_build(R22, t) for t in (a, b, c))
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f
    Rp = grid_ring(2, 2, 32003)
    assert (f * g - h).to_ring(Rp) == f.to_ring(Rp) * g.to_ring(Rp) - h.to_ring(Rp)
