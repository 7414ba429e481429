"""Exact integer/rational helpers: p-adic valuations, primes, integer roots."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

from .errors import NonPrimeModulus

Rational = Union[int, Fraction]


@total_ordering
class _Infinity:
    """Valuation of zero.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("copperscope.inf")

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()
PAdicVal = Union[int, _Infinity]

# Deterministic Miller-Rabin with the first 13 prime bases is proven correct
# below this bound (Sorenson & Webster 2015).
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_RANDOM_ROUNDS = 64  # error <= 4**-64 = 2**-128


def _mr_round(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_mr_round(n, a, d, s) for a in _MR_BASES)
    rng = random.Random(n)
    return all(_mr_round(n, rng.randrange(2, n - 1), d, s) for _ in range(_MR_RANDOM_ROUNDS))


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(n: Rational, p: int) -> PAdicVal:
    """v_p(n) for rational n; ``INFINITY`` when n == 0."""
    _check_prime(p)
    n = Fraction(n)
    if n == 0:
        return INFINITY
    return _int_valuation(n.numerator, p) - _int_valuation(n.denominator, p)


def padic_abs(n: Rational, p: int) -> Fraction:
    v = padic_valuation(n, p)
    if v is INFINITY:
        return Fraction(0)
    return Fraction(1, p**v) if v >= 0 else Fraction(p ** (-v))


def primes_up_to(M: int) -> list[int]:
    if M < 2:
        return []
    sieve = bytearray([1]) * (M + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(M) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, M + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def smallest_prime_factor_up_to(N: int, M: int) -> Optional[int]:
    """Least prime p <= M dividing N, by trial division; None if there is none."""
    for p in primes_up_to(M):
        if N % p == 0:
            return p
    return None


def compare_power(x: int, d: int, N: int) -> int:
    """Sign of x**d - N, as -1, 0 or 1."""
    if d < 1:
        raise ValueError("d must be >= 1")
    v = x**d
    return (v > N) - (v < N)


def iroot(N: int, d: int) -> int:
    """floor(N ** (1/d)) for N >= 0, exactly."""
    if N < 0 or d < 1:
        raise ValueError("need N >= 0 and d >= 1")
    if N < 2 or d == 1:
        return N
    # Newton from an overestimate; monotone decreasing to the floor root.
    x = 1 << -(-N.bit_length() // d)
    while True:
        y = ((d - 1) * x + N // x ** (d - 1)) // d
        if y >= x:
            return x
        x = y
