import pytest
from hypothesis import given, settings, strategies as st

from minorprime.adjacent import adjacent_minors
from minorprime.groebner import check_groebner_basis, ideal_equal
from minorprime.sequences import (InvalidSequence, PrimeSequence, adjacent_minor_in_sequence,
                                  count_prime_sequences, enumerate_prime_sequences, parse_gamma,
                                  sequence_generators, sequence_to_ideal)
from minorprime.poly import grid_ring

EXAMPLE_36 = ["{[0,7]}", "{[0,3],[3,7]}", "{[0,3],[2,7]}", "{[0,4],[4,7]}",
              "{[0,4],[3,7]}", "{[0,5],[4,7]}", "{[0,3],[2,5],[4,7]}"]


def test_count_examples():
    assert count_prime_sequences(3, 6) == 7
    assert count_prime_sequences(3, 5) == 4
    for m in range(2, 7):
        assert count_prime_sequences(m, m - 1) == 1
        assert count_prime_sequences(m, m) == 1
        assert all(count_prime_sequences(m, k) == 0 for k in range(1, m - 1))


def test_enumerate_examples():
    assert sorted(map(str, enumerate_prime_sequences(3, 6))) == sorted(EXAMPLE_36)
    assert [str(g) for g in enumerate_prime_sequences(3, 3)] == ["{[0,4]}"]
    assert len(enumerate_prime_sequences(3, 4)) == 2


def test_printed_last_sequence_is_not_prime():
    # the displayed third interval list overlaps in two columns, one too many for m = 3
    printed = parse_gamma("[0,3],[2,6],[4,7]", 3, 6)
    assert not printed.is_valid()
    with pytest.raises(InvalidSequence):
        sequence_to_ideal(printed)
    assert parse_gamma("0-3,2-5,4-7", 3, 6).is_valid()


@pytest.mark.parametrize("m", range(2, 6))
def test_enumeration_matches_recurrence(m):
    for n in range(m - 1, 13):
        seqs = enumerate_prime_sequences(m, n)
        assert len(seqs) == count_prime_sequences(m, n)
        assert len(set(map(str, seqs))) == len(seqs)
        assert all(g.is_valid() for g in seqs)


def test_axiom_violations():
    bad = {"0-2,2-7": "fewer than m+1", "0-4,1-7": "overlap", "0-3,3-6": "n+1",
           "0-5,2-4,3-7": "increasing"}
    for text, word in bad.items():
        assert any(word in v for v in parse_gamma(text, 3, 6).violations()), text


def test_generator_examples():
    R = grid_ring(3, 6)
    full = sequence_generators(parse_gamma("0-7", 3, 6), R)
    assert len(full) == 20
    g2 = sequence_generators(parse_gamma("0-3,3-7", 3, 6), R)
    assert len(g2) == 1 + 4 + 3
    assert {R.x(1, 3), R.x(2, 3), R.x(3, 3)} <= set(g2)
    g3 = sequence_generators(parse_gamma("0-3,2-7", 3, 6), R)
    assert len(g3) == 1 + 10 + 3
    assert sum(1 for g in g3 if g.total_degree() == 2) == 3


def test_single_interval_is_maximal_minor_ideal():
    P = sequence_to_ideal(parse_gamma("0-5", 2, 4))
    assert len(P.generators) == 6


@pytest.mark.parametrize("m,n", [(2, 5), (3, 5), (3, 6), (4, 7)])
def test_adjacent_minors_lie_in_every_component(m, n):
    ncols = n - m + 1
    for g in enumerate_prime_sequences(m, n):
        assert all(adjacent_minor_in_sequence(g, c) for c in range(1, ncols + 1))


@pytest.mark.parametrize("char", [0, 32003])
def test_components_of_36_are_groebner_bases(char):
    for g in enumerate_prime_sequences(3, 6):
        P = sequence_to_ideal(g, char)
        assert check_groebner_basis(P.generators)
        assert all(max(f.leading_monomial()) <= 1 for f in P.generators)


def test_single_component_when_square():
    (g,) = enumerate_prime_sequences(3, 3)
    P = sequence_to_ideal(g)
    R = P.ring
    from minorprime.groebner import Ideal
    assert ideal_equal(P, Ideal(R, adjacent_minors(3, 3, 3, R)))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10), st.data())
def test_random_sequence_is_valid(m, extra, data):
    n = m - 1 + extra
    seqs = enumerate_prime_sequences(m, n)
    g = data.draw(st.sampled_from(seqs))
    starts = [iv.a for iv in g]
    assert starts == sorted(set(starts))
    for cur, nxt in zip(g.intervals, g.intervals[1:]):
        assert 0 <= cur.b - nxt.a < m - 1
    assert PrimeSequence(m, n, tuple(g.as_pairs())) == g
