"""When can integral combinations of b_i(x) b_j(f(x)/N) with i, j <= M beat
the N^(1/d) barrier?

If no prime p <= M divides N, the polynomial is p-adically bounded on all of
Z_p for p <= M and on f^{-1}(N Zbar_p) for p > M.  The capacity of that
adelic set with the disc of radius N^(1/d + eps) at infinity is

    prod_{p <= M} p^(-1/(p-1)) * N^eps,

so once this exceeds 1 no bounded auxiliary polynomial can exist: any useful
one forces N to have a prime factor <= M.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from . import poly
from .arith import padic_valuation, primes_up_to, smallest_prime_factor_up_to
from .binomial import binomial_poly
from .errors import DegenerateInput, DomainTooSmall

EULER_GAMMA = 0.5772156649015329
ROSSER_MIN_M = 319
# Constant form of the sufficient condition, C * N^eps > M, with two candidate
# constants.  PROOF_CONSTANT drives the verdict flag; both are reported.
PROOF_CONSTANT = 1.48744
STATEMENT_CONSTANT = 1.48774
CAPACITY_SLACK = 1e-9


class NegativeVerdict(str, enum.Enum):
    FORCES_SMALL_FACTOR = "ForcesSmallFactor"
    INCONCLUSIVE = "Inconclusive"
    SMALL_FACTOR_FOUND = "SmallFactorFound"


@dataclass(frozen=True)
class NegativeAnalysis:
    N: int
    d: int
    epsilon: Fraction
    M: int
    small_factor: Optional[int]
    prime_product_log: float
    capacity_log: float
    verdict: NegativeVerdict
    exact_condition: bool  # e^(gamma - 1/ln M) N^eps > M, needs M >= 319
    proof_constant_condition: bool  # 1.48744 N^eps > M >= 319
    statement_constant_condition: bool  # 1.48774 N^eps >= M >= 319


def prime_product(M: int) -> float:
    """ln prod_{p <= M} p^(1/(p-1)) = sum_{p <= M} ln p / (p - 1)."""
    if M < 2:
        raise DegenerateInput("M must be >= 2")
    return math.fsum(math.log(p) / (p - 1) for p in primes_up_to(M))


def rosser_lower_bound(M: int) -> float:
    """-ln M + gamma - 1/ln M, a lower bound for -prime_product(M) when M >= 319."""
    if M < ROSSER_MIN_M:
        raise DomainTooSmall(f"the explicit bound needs M >= {ROSSER_MIN_M}, got {M}")
    L = math.log(M)
    return -L + EULER_GAMMA - 1 / L


def analyze(N: int, d: int, epsilon, M: int) -> NegativeAnalysis:
    if isinstance(epsilon, float):
        raise DegenerateInput("epsilon must be rational")
    epsilon = Fraction(epsilon)
    if N < 2 or d < 1 or M < 2 or epsilon <= 0:
        raise DegenerateInput("need N >= 2, d >= 1, M >= 2 and epsilon > 0")
    spf = smallest_prime_factor_up_to(N, M)
    pp = prime_product(M)
    eps_lnN = float(epsilon) * math.log(N)
    cap_log = eps_lnN - pp
    if M >= ROSSER_MIN_M:
        lnM = math.log(M)
        exact = eps_lnN + EULER_GAMMA - 1 / lnM > lnM
        proof_c = math.log(PROOF_CONSTANT) + eps_lnN > lnM
        stmt_c = math.log(STATEMENT_CONSTANT) + eps_lnN >= lnM
    else:
        exact = proof_c = stmt_c = False
    if spf is not None:
        verdict = NegativeVerdict.SMALL_FACTOR_FOUND
    elif cap_log > CAPACITY_SLACK:
        verdict = NegativeVerdict.FORCES_SMALL_FACTOR
    else:
        verdict = NegativeVerdict.INCONCLUSIVE
    return NegativeAnalysis(
        N=N,
        d=d,
        epsilon=epsilon,
        M=M,
        small_factor=spf,
        prime_product_log=pp,
        capacity_log=cap_log,
        verdict=verdict,
        exact_condition=exact,
        proof_constant_condition=proof_c,
        statement_constant_condition=stmt_c,
    )


Coefficients = Union[Mapping[tuple, object], Sequence[Sequence[object]]]


def _coefficient_items(a: Coefficients):
    if isinstance(a, Mapping):
        return [((i, j), Fraction(c)) for (i, j), c in a.items() if c != 0]
    return [((i, j), Fraction(c)) for i, row in enumerate(a) for j, c in enumerate(row) if c != 0]


def evaluate_binomial_form(a: Coefficients, f: Sequence[int], N: int, z: int) -> Fraction:
    """h(z) = sum a_ij b_i(z) b_j(f(z)/N), exactly."""
    y = Fraction(poly.evaluate(f, z), N)
    total = Fraction(0)
    for (i, j), c in _coefficient_items(a):
        total += c * poly.evaluate(binomial_poly(i), z) * poly.evaluate(binomial_poly(j), y)
    return total


@dataclass
class LemmaReport:
    samples: list[int]
    primes_checked: list[int]
    violations: list[tuple[int, int, int]]  # (z, p, v_p(h(z)))

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_lemma_bounds(
    a: Coefficients,
    f: Sequence[int],
    N: int,
    M: int,
    sample_count: int = 50,
    seed: int = 0,
    extra_points: Sequence[int] = (),
    spread: int = 10**6,
) -> LemmaReport:
    """Sample integers z and check v_p(h(z)) >= 0 for every prime p <= M with p not dividing N.

    For such p, b_i(z) and b_j(f(z)/N) are p-adic integers, so a violation can
    only come from a non-integral coefficient a_ij.  ``extra_points`` lets a
    caller add planted solutions of f(z) = 0 mod N, at which h(z) must be an
    ordinary integer.
    """
    rng = random.Random(seed)
    zs = list(extra_points) + [rng.randint(-spread, spread) for _ in range(sample_count)]
    primes = [p for p in primes_up_to(M) if N % p]
    violations = []
    for z in zs:
        val = evaluate_binomial_form(a, f, N, z)
        if val == 0:
            continue
        for p in primes:
            v = padic_valuation(val, p)
            if v < 0:
                violations.append((z, p, v))
    return LemmaReport(samples=zs, primes_checked=primes, violations=violations)
