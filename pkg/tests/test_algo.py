import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from minorprime.algo import (NotInVariety, in_sequence_variety, matrix_to_sequence,
                             minimal_deficient_intervals)
from minorprime.linalg import NumericMatrix, matrix_rank
from minorprime.poset import phi_sample
from minorprime.sequences import (InvalidSequence, enumerate_prime_sequences, parse_gamma,
                                  sequence_generators)


def _product(m, r, n, rng, size=7):
    A = NumericMatrix([[Fraction(rng.randint(-size, size)) for _ in range(r)] for _ in range(m)])
    B = NumericMatrix([[Fraction(rng.randint(-size, size)) for _ in range(n)] for _ in range(r)])
    return A @ B


def test_rank_examples():
    assert matrix_rank(NumericMatrix.zeros(3, 4)) == 0
    assert matrix_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    X = _product(3, 2, 6, random.Random(1))
    assert matrix_rank(X) == 2


def test_zero_matrix():
    g = matrix_to_sequence(NumericMatrix.zeros(3, 6))
    assert str(g) == "{[0,3],[3,7]}"


def test_generic_rank_deficient():
    X = _product(3, 2, 6, random.Random(3), size=10 ** 6)
    assert minimal_deficient_intervals(X) == []
    assert str(matrix_to_sequence(X)) == "{[0,7]}"


def test_not_in_variety():
    X = NumericMatrix([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    with pytest.raises(NotInVariety):
        matrix_to_sequence(X)


@pytest.mark.parametrize("m,n,gamma,seed", [(2, 7, "0-3,3-8", 5), (3, 8, "0-9", 8)])
def test_literal_last_interval_rule_can_fail(m, n, gamma, seed):
    X, _, _ = phi_sample(parse_gamma(gamma, m, n), seed)
    with pytest.raises(InvalidSequence):
        matrix_to_sequence(X, promote_last_column=False)
    g = matrix_to_sequence(X)
    assert g.is_valid() and in_sequence_variety(X, g)


def _check(X):
    g = matrix_to_sequence(X)
    assert g.is_valid()
    pt = X.point()
    assert all(f.evaluate(pt) == 0 for f in sequence_generators(g))
    assert in_sequence_variety(X, g)
    return g


@pytest.mark.parametrize("m", [2, 3, 4])
def test_round_trip_from_phi(m):
    for n in (m + 1, m + 3):
        for g in enumerate_prime_sequences(m, n):
            for seed in range(4):
                _check(phi_sample(g, seed)[0])


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.integers(0, 4), st.integers(0, 2 ** 32))
def test_output_is_prime_sequence_containing_x(m, extra, seed):
    n = m + extra
    rng = random.Random(seed)
    g = rng.choice(enumerate_prime_sequences(m, n))
    _check(phi_sample(g, rng.randrange(10 ** 6))[0])


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(0, 4), st.integers(0, 2 ** 32))
def test_sparse_matrices(m, extra, seed):
    # random low-rank matrices with zeroed columns still land in the variety
    rng = random.Random(seed)
    n = m + extra
    X = _product(m, m - 1, n, rng)
    rows = [list(r) for r in X.rows]
    for c in rng.sample(range(n), rng.randint(0, n)):
        for r in rows:
            r[c] = Fraction(0)
    _check(NumericMatrix(rows))


def test_deficient_intervals_have_distinct_starts():
    rng = random.Random(4)
    for _ in range(30):
        g = rng.choice(enumerate_prime_sequences(4, 8))
        X = phi_sample(g, rng.randrange(1000))[0]
        ivs = minimal_deficient_intervals(X)
        starts = [iv.a for iv in ivs]
        assert starts == sorted(set(starts))
        ends = [iv.b for iv in ivs]
        assert ends == sorted(set(ends))
