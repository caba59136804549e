import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import reference_primes, trial_division, trial_division_mask
from prime_lissajous.primes import (
    MAX_PRIMES,
    AlternatingSplit,
    PrimeSequence,
    first_n_primes,
    is_prime,
    sieve,
    split_alternating,
)


def test_first_five():
    assert list(first_n_primes(5)) == [2, 3, 5, 7, 11]


def test_empty():
    seq = first_n_primes(0)
    assert seq.count == 0
    assert list(seq) == []


@pytest.mark.parametrize("n, last", [(100, 541), (1000, 7919)])
def test_landmarks(n, last):
    assert first_n_primes(n)[-1] == last


def test_5000th_prime_matches_reference():
    # the 5000th prime is 48611; 104729 is the 10000th
    assert first_n_primes(5000)[-1] == reference_primes(5000)[-1] == 48611
    assert first_n_primes(10000)[-1] == 104729


@pytest.mark.parametrize("n", [1, 2, 5, 6, 7, 50, 200, 5000])
def test_matches_reference(n):
    assert list(first_n_primes(n)) == reference_primes(n)


def test_all_up_to_5000_pass_trial_division():
    seq = first_n_primes(5000)
    assert len(seq) == 5000
    assert all(trial_division(p) for p in seq)
    assert np.all(np.diff(seq.as_array()) > 0)


def test_cap():
    with pytest.raises(ValueError, match=str(MAX_PRIMES)):
        first_n_primes(MAX_PRIMES + 1)
    with pytest.raises(ValueError):
        first_n_primes(-1)


@pytest.mark.slow
def test_cap_is_reachable():
    seq = first_n_primes(MAX_PRIMES)
    assert seq[-1] == 15485863


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 3000), st.integers(0, 3000))
def test_prefix_monotone(m, n):
    m, n = sorted((m, n))
    assert first_n_primes(n).values[:m] == first_n_primes(m).values


def test_split_paper_example():
    split = split_alternating(PrimeSequence((2, 3, 5, 7, 11, 13)))
    assert list(split.odd_indexed) == [2, 5, 11]
    assert list(split.even_indexed) == [3, 7, 13]


@pytest.mark.parametrize("vals, odd, even", [((), [], []), ((2,), [2], [])])
def test_split_small(vals, odd, even):
    split = split_alternating(PrimeSequence(vals))
    assert list(split.odd_indexed) == odd
    assert list(split.even_indexed) == even


@given(st.integers(0, 400))
def test_split_round_trip(n):
    seq = first_n_primes(n)
    assert split_alternating(seq).interleave() == seq


def test_split_type():
    assert isinstance(split_alternating(first_n_primes(4)), AlternatingSplit)


@pytest.mark.parametrize("n, expected", [(0, False), (1, False), (2, True), (3, True), (4, False),
                                         (25, False), (49, False), (104729, True), (104730, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


@pytest.mark.slow
def test_is_prime_agrees_with_trial_division_to_a_million():
    limit = 10**6
    mask = trial_division_mask(limit)
    got = np.fromiter((is_prime(k) for k in range(limit + 1)), dtype=bool, count=limit + 1)
    assert np.array_equal(got, mask)


def test_sieve_matches_trial_division():
    limit = 20000
    assert np.array_equal(sieve(limit), trial_division_mask(limit))
    assert sieve(0).tolist() == [False]
    assert sieve(1).tolist() == [False, False]


def test_sequence_is_immutable():
    seq = first_n_primes(3)
    with pytest.raises(AttributeError):
        seq.values = (1,)
