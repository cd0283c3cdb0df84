import random

import pytest
from hypothesis import given, settings, strategies as st

from minorprime.linalg import NumericMatrix
from minorprime.poset import PhiPoint, build_poset, phi, phi_sample, random_point, zero_pattern
from minorprime.sequences import enumerate_prime_sequences, parse_gamma, sequence_generators


def _rows(P):
    return [[str(P.nodes[j].interval) for j in r] for r in P.rows]


def test_poset_rows_m6():
    P = build_poset(parse_gamma("0-7,3-9,5-11,7-13,10-17", 6, 16))
    assert _rows(P)[1:] == [["[3,7]", "[5,9]", "[7,11]", "[10,13]"],
                            ["[5,7]", "[7,9]", "[10,11]"], ["[7,7]"]]


def test_detailed_m4_example():
    P = build_poset(parse_gamma("0-5,3-7,5-10", 4, 9))
    assert _rows(P)[1:] == [["[3,5]", "[5,7]"], ["[5,5]"]]
    # listed in reverse order of use
    assert list(reversed(P.block_sizes())) == [4, 3, 2, 2, 2, 2]
    assert P.affine_sizes() == [6, 4, 11]
    assert zero_pattern(P, P.rows[0][-1]) == [[1, 1, 1, 1, 1], [0, 1, 1, 1, 1],
                                              [0, 0, 0, 1, 1], [0, 0, 0, 0, 0]]
    assert P.columns_of(P.rows[0][1]) == [3, 4]


@pytest.mark.parametrize("m,n", [(3, 6), (2, 5), (4, 7)])
def test_single_interval_poset(m, n):
    P = build_poset(parse_gamma(f"0-{n + 1}", m, n))
    (node,) = P.nodes
    assert (node.D, node.k, node.ell) == (m - 1, m, n * (m - 1))


def test_single_interval_phi_has_zero_last_row():
    P = build_poset(parse_gamma("0-7", 3, 6))
    pt = PhiPoint(blocks={0: [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
                  affine={0: list(range(1, 13))})
    X = phi(P, pt)
    assert all(x == 0 for x in X.rows[2])
    assert X.rows[0] == list(range(1, 13, 2))  # affine values fill column by column


def test_phi_rejects_bad_points():
    P = build_poset(parse_gamma("0-7", 3, 6))
    with pytest.raises(ValueError):
        phi(P, PhiPoint(blocks={0: [[1, 0, 0], [0, 1, 0], [0, 0, 0]]}, affine={0: [0] * 12}))
    with pytest.raises(ValueError):
        phi(P, PhiPoint(blocks={0: [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}, affine={0: [0] * 11}))
    with pytest.raises(ValueError):
        phi(P, PhiPoint(blocks={0: [[1, 0], [0, 1]]}, affine={0: [0] * 12}))


def _poset_invariants(P):
    m = P.m
    for j, nd in enumerate(P.nodes):
        if nd.row == 1:
            assert nd.D == m - 1
        elif nd.row == 2:
            assert nd.D == nd.interval.width - 1 <= m - 2
        else:
            assert nd.D == nd.interval.width
        if j not in P.maximal:
            assert nd.left_parent is not None and nd.right_parent is not None
        assert nd.k >= 1
    # every real column has a unique minimal element on its chain
    for q in P.maximal:
        for i in P.columns_of(q):
            P.p_of(i, q)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_poset_invariants_all_sequences(m):
    for n in range(m, m + 6):
        for g in enumerate_prime_sequences(m, n):
            _poset_invariants(build_poset(g))


@pytest.mark.parametrize("m,n", [(3, 6), (4, 7), (2, 6)])
def test_phi_points_in_variety(m, n):
    for g in enumerate_prime_sequences(m, n):
        gens = sequence_generators(g)
        for seed in range(15):
            X, _, _ = phi_sample(g, seed)
            assert X.shape == (m, n)
            pt = X.point()
            assert all(f.evaluate(pt) == 0 for f in gens), (str(g), seed)


def test_phi_sample_is_seeded():
    g = parse_gamma("0-4,3-7", 3, 6)
    assert phi_sample(g, 11)[0] == phi_sample(g, 11)[0]


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(0, 4), st.integers(0, 2 ** 32))
def test_phi_property(m, extra, seed):
    n = m + extra
    rng = random.Random(seed)
    g = rng.choice(enumerate_prime_sequences(m, n))
    P = build_poset(g)
    X = phi(P, random_point(P, rng))
    assert isinstance(X, NumericMatrix)
    assert all(f.evaluate(X.point()) == 0 for f in sequence_generators(g))
