"""Univariate Coppersmith: lattice construction, reduction, root recovery.

The lattice is spanned by the coefficient vectors of g_ij(x * X) with

    g_ij(x) = x^i * f(x)^j * N^(m - j),   0 <= j <= m, 0 <= i < d,

followed by ``t_extra`` rows x^(d + i) * f(x)^m.  Every g_ij vanishes mod N^m at
a root of f mod N.  This is the integer-scaled form of the lattice of
combinations of x^i (f(x)/N)^j: multiply by N^m and the two coincide.
Ordering the rows by degree makes the basis lower triangular with diagonal
N^(m-j) X^(i + d j).
"""

from __future__ import annotations

import logging
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import poly
from .arith import iroot, is_prime
from .errors import BoundNotCertified, DegenerateInput, NonMonicPolynomial
from .lattice import DEFAULT_DELTA, lll_reduce

log = logging.getLogger(__name__)

MAX_MULTIPLICITY = 12
_HEURISTIC_ROOT_HERMITE = 1.02


@dataclass(frozen=True)
class Problem:
    """f monic (constant term first), modulus N, search radius X.

    ``m=None`` selects the multiplicity from the default schedule.
    """

    f: tuple
    N: int
    X: int
    m: Optional[int] = None
    t_extra: int = 0

    def __post_init__(self):
        f = tuple(poly.trim(int(c) for c in self.f))
        object.__setattr__(self, "f", f)
        if len(f) < 2:
            raise DegenerateInput("f must have degree >= 1")
        if f[-1] != 1:
            raise NonMonicPolynomial(f"leading coefficient is {f[-1]}, expected 1")
        if self.N < 2:
            raise DegenerateInput("N must be >= 2")
        if self.X < 1:
            raise DegenerateInput("X must be >= 1")
        if self.m is not None and self.m < 1:
            raise DegenerateInput("m must be >= 1")
        if self.t_extra < 0:
            raise DegenerateInput("t_extra must be >= 0")

    @property
    def d(self) -> int:
        return len(self.f) - 1


@dataclass
class SolveReport:
    roots: list[int]
    m: int
    t_extra: int
    dimension: int
    X: int
    certified: bool
    auxiliary: list  # h(x) as a RatPoly; h(x*X) is the short vector
    swap_count: int
    timings_ms: dict = field(default_factory=dict)


def lattice_dimension(d: int, m: int, t_extra: int) -> int:
    return d * (m + 1) + t_extra


def build_lattice(p: Problem, m: Optional[int] = None) -> list[list[int]]:
    m = p.m if m is None else m
    if m is None:
        m = default_multiplicity(p.f, p.N, p.X, p.t_extra)
    d, N, X = p.d, p.N, p.X
    w = lattice_dimension(d, m, p.t_extra)
    f_pows = [[1]]
    for _ in range(m):
        f_pows.append(poly.mul(f_pows[-1], p.f))
    rows = []
    for j in range(m + 1):
        base = poly.scale(f_pows[j], N ** (m - j))
        for i in range(d):
            rows.append([0] * i + base)
    for i in range(p.t_extra):
        rows.append([0] * (d + i) + f_pows[m])
    out = []
    for g in rows:
        v = poly.substitute_scaled(g, X)
        out.append(v + [0] * (w - len(v)))
    return out


def lattice_determinant(d: int, N: int, X: int, m: int, t_extra: int) -> int:
    """Product of the triangular diagonal of ``build_lattice``."""
    w = lattice_dimension(d, m, t_extra)
    return N ** (d * m * (m + 1) // 2) * X ** (w * (w - 1) // 2)


def howgrave_graham_check(h: Sequence, X: int, N: int, m: int) -> bool:
    """True iff ||h(x X)||_2 < N^m / sqrt(w), with w = deg h + 1.

    When true, every integer r with |r| <= X and h(r) = 0 mod N^m is a root
    of h over the integers.
    """
    h = poly.to_fractions(h)
    if not h:
        return False
    w = len(h)
    v = poly.substitute_scaled(h, X)
    return w * sum(c * c for c in v) < Fraction(N) ** (2 * m)


def _predicts_certified(d: int, N: int, X: int, m: int, t_extra: int, rigorous: bool) -> bool:
    w = lattice_dimension(d, m, t_extra)
    det = lattice_determinant(d, N, X, m, t_extra)
    if rigorous:
        # LLL guarantee ||b1||^2 <= alpha^((w-1)/2) det^(2/w), alpha = 4/(4 delta - 1);
        # raised to the w-th power to stay in integers.
        alpha = 4 / (4 * DEFAULT_DELTA - 1)
        E = w * (w - 1) // 2
        return alpha.numerator**E * det * det * w**w < N ** (2 * m * w) * alpha.denominator**E
    log_b1 = (w - 1) * math.log(_HEURISTIC_ROOT_HERMITE) + math.log(det) / w
    return log_b1 + 0.5 * math.log(w) < m * math.log(N)


def default_multiplicity(f: Sequence[int], N: int, X: int, t_extra: int = 0) -> int:
    """Smallest m whose lattice determinant guarantees certification at X.

    Tries the worst-case LLL bound first, then the typical-case estimate
    (root Hermite factor 1.02); falls back to the cap.
    """
    d = len(poly.trim(f)) - 1
    for rigorous in (True, False):
        for m in range(1, MAX_MULTIPLICITY + 1):
            if _predicts_certified(d, N, X, m, t_extra, rigorous):
                return m
    return MAX_MULTIPLICITY


def isolate_integer_roots(h: Sequence, X: int) -> list[int]:
    """All integers r with |r| <= X and h(r) = 0, ascending and deduplicated.

    Real roots are isolated with a Sturm sequence by bisecting (-X-1, X] down
    to unit intervals (a, a+1]; each surviving right endpoint is then tested
    by exact evaluation.
    """
    P = poly.primitive(h)
    if len(P) <= 1:
        return []
    seq = poly.sturm_sequence(P)
    sf = seq[0]
    found: list[int] = []
    # explicit stack of half-open intervals (a, b] with their variation counts
    lo, hi = -X - 1, X
    stack = [(lo, hi, poly.sign_variations(seq, lo), poly.sign_variations(seq, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        if va - vb <= 0:
            continue
        if b - a == 1:
            if poly.evaluate(sf, b) == 0:
                found.append(b)
            continue
        c = (a + b) // 2
        vc = poly.sign_variations(seq, c)
        stack.append((a, c, va, vc))
        stack.append((c, b, vc, vb))
    return sorted(found)


def _normalized(p: Problem) -> Problem:
    """Same problem with f's lower coefficients reduced into (-N/2, N/2]."""
    f = [((c + p.N // 2) % p.N) - p.N // 2 for c in p.f[:-1]] + [1]
    return Problem(tuple(f), p.N, p.X, p.m, p.t_extra)


def _attempt(p: Problem, m: int, X: int):
    t0 = time.perf_counter()
    q = Problem(p.f, p.N, X, m, p.t_extra)
    basis = build_lattice(q, m)
    t1 = time.perf_counter()
    red = lll_reduce(basis)
    t2 = time.perf_counter()
    v = red.reduced[0]
    h = poly.trim(Fraction(c, X**k) for k, c in enumerate(v))
    ok = howgrave_graham_check(h, X, p.N, m)
    timings = {"build": (t1 - t0) * 1e3, "reduce": (t2 - t1) * 1e3}
    return h, ok, red.swap_count, len(basis), timings


def certified_radius(p: Problem, m: int, upper: Optional[int] = None, refine: bool = False) -> int:
    """Largest radius <= upper (default p.X) at which the reduced vector passes
    the Howgrave-Graham test, found by halving; with ``refine`` the gap to the
    first failing radius is then closed by bisection.  0 if even X=1 fails."""
    p = _normalized(p)
    X = p.X if upper is None else upper
    failed = None
    while X >= 1:
        _, ok, *_ = _attempt(p, m, X)
        if ok:
            break
        failed = X
        X //= 2
    if X < 1:
        return 0
    if refine and failed is not None:
        lo, hi = X, failed
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _attempt(p, m, mid)[1]:
                lo = mid
            else:
                hi = mid
        X = lo
    return X


def solve_report(p: Problem) -> SolveReport:
    """Run the full method and return roots with diagnostics.

    Raises BoundNotCertified when the reduced vector is too long at p.X.
    """
    p = _normalized(p)
    if p.m is not None:
        schedule = [p.m]
    else:
        m0 = default_multiplicity(p.f, p.N, p.X, p.t_extra)
        schedule = list(range(m0, MAX_MULTIPLICITY + 1))
    for m in schedule:
        h, ok, swaps, w, timings = _attempt(p, m, p.X)
        log.debug("m=%d w=%d swaps=%d certified=%s", m, w, swaps, ok)
        if ok:
            break
    else:
        certified = certified_radius(p, m, upper=p.X // 2) if p.X > 1 else 0
        raise BoundNotCertified(p.X, certified, m, p.t_extra)
    t0 = time.perf_counter()
    candidates = isolate_integer_roots(h, p.X)
    roots = [r for r in candidates if poly.evaluate(p.f, r) % p.N == 0]
    timings["roots"] = (time.perf_counter() - t0) * 1e3
    return SolveReport(
        roots=roots,
        m=m,
        t_extra=p.t_extra,
        dimension=w,
        X=p.X,
        certified=True,
        auxiliary=h,
        swap_count=swaps,
        timings_ms=timings,
    )


def solve(p: Problem) -> list[int]:
    """All r with |r| <= X and f(r) = 0 mod N."""
    return solve_report(p).roots


def random_prime(bits: int, rng: random.Random) -> int:
    while True:
        c = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(c):
            return c


def stereotyped_instance(bits: int, rng: random.Random, loss_bits: Optional[int] = None):
    """Low-exponent RSA with a known message prefix.

    Returns (f, N, X, r) where f(x) = (x~ + x)^3 - c mod N and r = x0 - x~ is
    the unknown part, |r| <= X.
    """
    half = bits // 2
    while True:
        N = random_prime(half, rng) * random_prime(bits - half, rng)
        if N.bit_length() == bits:
            break
    if loss_bits is None:
        loss_bits = max(1, -(-bits // 12))
    X = max(1, iroot(N, 3) >> loss_bits)
    x0 = rng.randrange(N)
    r = rng.randint(-X, X)
    approx = x0 - r
    c = pow(x0, 3, N)
    f = poly.add(poly.power([approx, 1], 3), [-c])
    f = [c_ % N for c_ in f[:-1]] + [1]
    return f, N, X, r


def demo_stereotyped_rsa(bits: int, rng_seed: int) -> dict:
    if not 16 <= bits <= 512:
        raise DegenerateInput("bits must be in [16, 512]")
    rng = random.Random(rng_seed)
    t0 = time.perf_counter()
    f, N, X, r = stereotyped_instance(bits, rng)
    gen_ms = (time.perf_counter() - t0) * 1e3
    rep = solve_report(Problem(tuple(f), N, X))
    return {
        "bits": bits,
        "seed": rng_seed,
        "N": N,
        "e": 3,
        "f": f,
        "planted": r,
        "recovered": rep.roots,
        "success": r in rep.roots,
        "m": rep.m,
        "t_extra": rep.t_extra,
        "w": rep.dimension,
        "certified_X": rep.X,
        "timings_ms": {"generate": gen_ms, **rep.timings_ms},
    }
