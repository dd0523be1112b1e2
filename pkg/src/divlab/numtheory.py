"""Integer factoring and primality services.

Factoring is plain trial division by a sieved prime table followed by a
Miller-Rabin test on whatever is left.  Nothing sub-exponential: when the
cofactor is composite and has no factor below the trial bound, the report
says so (``complete=False``) and callers decide what to do about it.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_MR_ROUNDS = 24

# Deterministic for n < 3.3e24, which covers the |n| < 2^64 contract.
_SMALL_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=8)
def primes_up_to(bound: int) -> tuple[int, ...]:
    """All primes p <= bound (sieve of Eratosthenes)."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, bound + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Miller-Rabin; exact below 2^64, ``rounds`` seeded random bases above."""
    if n < 2:
        return False
    for p in _SMALL_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        bases = _SMALL_WITNESSES
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(rounds))
    return all(_strong_probable_prime(n, b, d, s) for b in bases)


@dataclass(frozen=True)
class FactorReport:
    input: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int
    complete: bool

    @property
    def sign(self) -> int:
        return -1 if self.input < 0 else 1

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def product(self) -> int:
        out = self.sign * self.cofactor
        for p, k in self.factors:
            out *= p**k
        return out


def factorize(
    n: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    mr_rounds: int = DEFAULT_MR_ROUNDS,
) -> FactorReport:
    """Factor ``n`` by trial division up to ``trial_bound``.

    The leftover cofactor is either 1, a probable prime (recorded as a factor),
    or a composite with no prime factor <= trial_bound, in which case the
    report is incomplete.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    if trial_bound < 2:
        raise ValueError("trial_bound must be >= 2")
    m = abs(n)
    found: dict[int, int] = {}
    table = primes_up_to(trial_bound)
    # Only primes up to sqrt of the shrinking cofactor matter.
    stop = bisect_right(table, math.isqrt(m))
    i = 0
    while i < stop:
        p = table[i]
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            found[p] = k
            stop = min(stop, bisect_right(table, math.isqrt(m)))
        i += 1
    complete = True
    if m > 1:
        # isqrt(m) <= trial_bound means every candidate divisor was tried.
        if math.isqrt(m) <= trial_bound or is_probable_prime(m, mr_rounds):
            found[m] = found.get(m, 0) + 1
            m = 1
        else:
            complete = False
    return FactorReport(n, tuple(sorted(found.items())), m, complete)
