"""Prime generation by sieve, scalar primality, and the alternating prime split."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

MAX_PRIMES = 1_000_000

_SMALL_PRIMES = (2, 3, 5, 7, 11)


@dataclass(frozen=True)
class PrimeSequence:
    """Ordered run of primes. Positions are 1-based in prose, 0-based in code."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def count(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)


@dataclass(frozen=True)
class AlternatingSplit:
    odd_indexed: PrimeSequence
    even_indexed: PrimeSequence

    def interleave(self) -> PrimeSequence:
        out = []
        for i in range(len(self.odd_indexed)):
            out.append(self.odd_indexed[i])
            if i < len(self.even_indexed):
                out.append(self.even_indexed[i])
        return PrimeSequence(tuple(out))


def sieve(limit: int) -> np.ndarray:
    """Boolean mask of length ``limit + 1``; ``mask[k]`` is True iff k is prime."""
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


def _upper_bound(n: int) -> int:
    # p_n < n (ln n + ln ln n) for n >= 6 (Rosser)
    if n < 6:
        return 13
    ln = math.log(n)
    return int(n * (ln + math.log(ln))) + 1


@lru_cache(maxsize=8)
def _first_primes(n: int) -> tuple[int, ...]:
    if n <= len(_SMALL_PRIMES):
        return _SMALL_PRIMES[:n]
    found = np.flatnonzero(sieve(_upper_bound(n)))
    return tuple(int(p) for p in found[:n])


def first_n_primes(n: int) -> PrimeSequence:
    """The first ``n`` primes, ascending.

    Raises ``ValueError`` for negative ``n`` or ``n`` above ``MAX_PRIMES``.
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > MAX_PRIMES:
        raise ValueError(f"n={n} exceeds the cap of {MAX_PRIMES} primes")
    return PrimeSequence(_first_primes(n))


def split_alternating(p: PrimeSequence) -> AlternatingSplit:
    """Split into 1st, 3rd, 5th, ... and 2nd, 4th, 6th, ... elements."""
    vals = tuple(p)
    return AlternatingSplit(PrimeSequence(vals[0::2]), PrimeSequence(vals[1::2]))


def is_prime(n: int) -> bool:
    """Deterministic trial division over 6k +/- 1 candidates."""
    n = int(n)
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True
