"""Integer-valued polynomials in the binomial basis and the bounded
constructions built from them.

b_i(x) = x (x-1) ... (x-i+1) / i!.  A rational polynomial takes integers to
integers exactly when its binomial-basis coefficients are integers (Polya),
and those coefficients are the forward differences at 0.
"""

from __future__ import annotations

import bisect
import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import poly
from .arith import primes_up_to
from .errors import CapExceeded, DegenerateInput

BinomialCombo = list  # coeffs[i] multiplies b_i(x); trailing zeros trimmed


@lru_cache(maxsize=None)
def _falling_factorial(i: int) -> tuple[int, ...]:
    """Integer coefficients of x (x-1) ... (x-i+1) (signed Stirling numbers)."""
    if i == 0:
        return (1,)
    prev = _falling_factorial(i - 1)
    return tuple(poly.mul(prev, [-(i - 1), 1]))


def binomial_poly(i: int) -> poly.RatPoly:
    if i < 0:
        raise DegenerateInput("i must be >= 0")
    fact = math.factorial(i)
    return [Fraction(c, fact) for c in _falling_factorial(i)]


def to_binomial_basis(h: Sequence) -> BinomialCombo:
    """coeffs[i] = (Delta^i h)(0)."""
    P, den = poly.clear_denominators(h)
    if not P:
        return []
    vals = [poly.evaluate(P, x) for x in range(len(P))]
    coeffs = []
    while vals:
        coeffs.append(Fraction(vals[0], den))
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return poly.trim(coeffs)


def from_binomial_basis(coeffs: Sequence) -> poly.RatPoly:
    coeffs = poly.trim(Fraction(c) for c in coeffs)
    if not coeffs:
        return []
    n = len(coeffs) - 1
    # common denominator n! * lcm(coefficient denominators) keeps the sum integral
    den = 1
    for c in coeffs:
        den = math.lcm(den, c.denominator)
    nfact = math.factorial(n)
    acc = [0] * (n + 1)
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        k = c.numerator * (den // c.denominator) * (nfact // math.factorial(i))
        for j, s in enumerate(_falling_factorial(i)):
            acc[j] += k * s
    total = den * nfact
    return poly.trim(Fraction(a, total) for a in acc)


def is_integer_valued(h: Sequence) -> bool:
    return all(Fraction(c).denominator == 1 for c in to_binomial_basis(h))


def explicit_construction(t: int) -> BinomialCombo:
    """b_{2t+1}(x + t) in the binomial basis; it vanishes at -t..t."""
    if t < 1:
        raise DegenerateInput("t must be >= 1")
    return to_binomial_basis(poly.shift(binomial_poly(2 * t + 1), t))


def construction_sup_norm(t: int, r) -> Fraction:
    """max |b_{2t+1}(z + t)| over |z| <= r, attained at z = i r.

    Equals r * prod_{j=1..t} (r^2 + j^2) / (2t+1)!.
    """
    if t < 1:
        raise DegenerateInput("t must be >= 1")
    if isinstance(r, float):
        raise DegenerateInput("r must be rational")
    r = Fraction(r)
    if r <= 0:
        raise DegenerateInput("r must be positive")
    r2 = r * r
    num = r
    for j in range(1, t + 1):
        num *= r2 + j * j
    return num / math.factorial(2 * t + 1)


def ln_fraction(x: Fraction) -> float:
    """Natural log of a positive rational that may overflow a float."""
    return math.log(x.numerator) - math.log(x.denominator)


def q0_function(q: float) -> float:
    """q ln(4/q^2 + 1) + 4 arctan(q/2) - 2 ln(2) q.

    t * q0_function(q) / q is the leading term of ln sup |b_{2t+1}(z+t)| on the
    disc of radius r = 2t/q, so the construction is bounded by 1 once this is
    negative.
    """
    return q * math.log(4 / (q * q) + 1) + 4 * math.atan(q / 2) - 2 * math.log(2) * q


def solve_q0(tolerance: float = 1e-12) -> float:
    """Unique positive root of ``q0_function`` (about 3.80572), by bisection on [2, 64]."""
    if not tolerance >= 1e-12:
        raise DegenerateInput("tolerance must be >= 1e-12")
    lo, hi = 2.0, 64.0
    # q0_function is strictly decreasing on [2, inf): derivative ln(1/q^2 + 1/4) < 0
    while True:
        mid = 0.5 * (lo + hi)
        fm = q0_function(mid)
        if abs(fm) <= tolerance or hi - lo <= 4 * math.ulp(mid):
            return mid
        if fm > 0:
            lo = mid
        else:
            hi = mid


def minkowski_margin(m: int, r) -> float:
    """ln vol(C) + ln[L : Z[x]] - (m+1) ln 2 for polynomials of degree <= m.

    C is the box of sum q_i (x/r)^i with |q_i| <= 1/(m+2); the binomial lattice
    L contains Z[x] with index prod_{i<=m} i!.  A nonnegative margin means
    Minkowski's theorem yields a nonzero integral binomial combination of degree
    <= m bounded by 1 on |z| < r.
    """
    lnr = math.log(r) if not isinstance(r, Fraction) else ln_fraction(r)
    ln_vol = (m + 1) * (math.log(2) - math.log(m + 2)) - m * (m + 1) / 2 * lnr
    ln_index = math.fsum(math.lgamma(i + 1) for i in range(m + 1))
    return ln_vol + ln_index - (m + 1) * math.log(2)


def minkowski_degree_bound(r, c, cap: int = 10**6) -> int:
    """Smallest m with a nonnegative ``minkowski_margin``.

    The margin grows like (ln(m/r) - 3/2) m^2 / 2, so the answer is close to
    e^{3/2} r regardless of c; ``c`` (> 1) is the degree allowance c r the
    caller wants to compare against and is validated here only.
    """
    if isinstance(r, float) or isinstance(c, float):
        raise DegenerateInput("r and c must be rational")
    r, c = Fraction(r), Fraction(c)
    if c <= 1:
        raise DegenerateInput("c must exceed 1")
    if r < 2:
        raise DegenerateInput("r must be >= 2")
    lnr = ln_fraction(r)
    ln2 = math.log(2)
    ln_index = 0.0
    for m in range(cap + 1):
        if m:
            ln_index += math.lgamma(m + 1)
        ln_vol = (m + 1) * (ln2 - math.log(m + 2)) - m * (m + 1) / 2 * lnr
        if ln_vol + ln_index - (m + 1) * ln2 >= 0:
            return m
    raise CapExceeded(f"no degree <= {cap} satisfies the Minkowski condition at r={r}")


def prime_log_sum(Y: int) -> float:
    """sum_{p <= Y} ln(p) / (p - 1)."""
    return math.fsum(math.log(p) / (p - 1) for p in primes_up_to(Y))


SIEVE_LIMIT = 1 << 22
# Mertens' constant E in sum_{p<=x} ln p / p = ln x + E + o(1)
MERTENS_E = -1.332582275733220


def cutoff_upper_bound(delta_logN: float) -> int:
    """Least integer Y with ln Y + E - 1/ln Y > delta_logN.

    Rosser & Schoenfeld give sum_{p<=x} ln p/p > ln x + E - 1/(2 ln x) for
    x > 1, and ln p/(p-1) > ln p/p, so the prime sum already exceeds
    delta_logN at this Y.  The true cutoff is at most Y.
    """
    target = delta_logN - MERTENS_E
    x = max(target, 1.0)
    for _ in range(100):
        x = target + 1 / x
    Y = math.ceil(math.exp(x) * (1 + 1e-9)) + 1
    while math.log(Y) + MERTENS_E - 1 / math.log(Y) <= delta_logN:
        Y = Y * 1001 // 1000 + 1
    return Y


def min_prime_cutoff_for_existence(delta_logN: float) -> int:
    """Smallest Y with sum_{p<=Y} ln p/(p-1) > delta_logN.

    For that Y the adelic set with E_p = Z_p at p <= Y and the disc of radius
    N^delta at infinity has capacity < 1.  The answer is exact (and prime)
    whenever it lies below SIEVE_LIMIT; beyond that the explicit bound from
    ``cutoff_upper_bound`` is returned instead.
    """
    if not delta_logN > 0:
        raise DegenerateInput("delta * ln N must be positive")
    primes, sums = _prefix_sums()
    i = bisect.bisect_right(sums, delta_logN)
    if i < len(primes):
        return primes[i]
    return cutoff_upper_bound(delta_logN)


@lru_cache(maxsize=1)
def _prefix_sums() -> tuple[list[int], list[float]]:
    primes = primes_up_to(SIEVE_LIMIT)
    return primes, list(itertools.accumulate(math.log(p) / (p - 1) for p in primes))
