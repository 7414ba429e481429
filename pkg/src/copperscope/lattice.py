"""Exact LLL reduction.

The reduction runs the integral variant of LLL (Cohen, *A Course in
Computational Algebraic Number Theory*, Alg. 2.6.7), which keeps the Gram
determinants d_i and the scaled coefficients lambda_ij = d_j * mu_ij as
integers.  No floating point is involved anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import BadDelta, DependentRows

try:  # GMP integers make the exact divisions on Gram determinants much cheaper
    from gmpy2 import divexact as _divexact
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int

    def _divexact(a, b):
        return a // b

Number = Union[int, Fraction]
Basis = list  # list of rows, each a list of int or Fraction

DEFAULT_DELTA = Fraction(99, 100)


@dataclass(frozen=True)
class ReductionReport:
    reduced: list[list[Number]]
    transform: list[list[int]]
    delta: Fraction
    swap_count: int
    scale: int  # common denominator the input was multiplied by


def _dot(u: Sequence[Number], v: Sequence[Number]):
    return sum(a * b for a, b in zip(u, v))


def _check_shape(b: Sequence[Sequence[Number]]) -> None:
    if not b:
        raise DependentRows("empty basis")
    w = len(b[0])
    if any(len(row) != w for row in b):
        raise ValueError("rows have unequal dimension")
    if len(b) > w:
        raise DependentRows(f"{len(b)} rows in dimension {w}")


def gram_schmidt(b: Sequence[Sequence[Number]]) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Exact Gram-Schmidt orthogonalisation.

    Returns ``(bstar, mu)`` with ``b[i] = bstar[i] + sum_{j<i} mu[i][j] bstar[j]``
    and ``mu[i][i] = 1``.
    """
    _check_shape(b)
    n = len(b)
    bstar: list[list[Fraction]] = []
    norms: list[Fraction] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            mu[i][j] = _dot(b[i], bstar[j]) / norms[j]
            if mu[i][j]:
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        mu[i][i] = Fraction(1)
        nrm = _dot(v, v)
        if nrm == 0:
            raise DependentRows(f"row {i} is in the span of the previous rows")
        bstar.append(v)
        norms.append(nrm)
    return bstar, mu


def _integral_rows(b: Sequence[Sequence[Number]]) -> tuple[list[list[int]], int]:
    den = 1
    for row in b:
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
    return [[int(Fraction(x) * den) for x in row] for row in b], den


def lll_reduce(b: Sequence[Sequence[Number]], delta: Number = DEFAULT_DELTA) -> ReductionReport:
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise BadDelta(f"delta must lie in (1/4, 1), got {delta}")
    _check_shape(b)
    rows, scale = _integral_rows(b)
    rows = [[_bigint(x) for x in r] for r in rows]
    n = len(rows)
    H = [[_bigint(int(i == j)) for j in range(n)] for i in range(n)]
    p, q = delta.numerator, delta.denominator

    # D[i] is Cohen's d_i: D[0] = 1 and D[i + 1] = Gram determinant of rows[0..i].
    D = [_bigint(1)] + [_bigint(0)] * n
    lam = [[_bigint(0)] * n for _ in range(n)]
    swaps = 0

    def size_reduce(k: int, l: int) -> None:
        dl = D[l + 1]
        if 2 * abs(lam[k][l]) <= dl:
            return
        r = (2 * lam[k][l] + dl) // (2 * dl)
        rows[k] = [a - r * c for a, c in zip(rows[k], rows[l])]
        H[k] = [a - r * c for a, c in zip(H[k], H[l])]
        lam[k][l] -= r * dl
        lk, ll = lam[k], lam[l]
        for i in range(l):
            lk[i] -= r * ll[i]

    def swap(k: int, kmax: int) -> None:
        rows[k], rows[k - 1] = rows[k - 1], rows[k]
        H[k], H[k - 1] = H[k - 1], H[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        B = _divexact(D[k - 1] * D[k + 1] + lm * lm, D[k])
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = _divexact(D[k + 1] * lam[i][k - 1] - lm * t, D[k])
            lam[i][k - 1] = _divexact(B * t + lm * lam[i][k], D[k + 1])
        D[k] = B

    def extend_gso(k: int) -> None:
        for j in range(k + 1):
            u = _bigint(_dot(rows[k], rows[j]))
            for i in range(j):
                u = _divexact(D[i + 1] * u - lam[k][i] * lam[j][i], D[i])
            if j < k:
                lam[k][j] = u
            else:
                if u == 0:
                    raise DependentRows(f"row {k} is in the span of the previous rows")
                D[k + 1] = u

    extend_gso(0)
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            extend_gso(k)
        size_reduce(k, k - 1)
        lm = lam[k][k - 1]
        if p * D[k] * D[k] > q * (D[k + 1] * D[k - 1] + lm * lm):
            swap(k, kmax)
            swaps += 1
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1

    if scale == 1:
        reduced: list[list[Number]] = [[int(x) for x in r] for r in rows]
    else:
        reduced = [[Fraction(int(x), scale) for x in r] for r in rows]
    transform = [[int(x) for x in r] for r in H]
    return ReductionReport(reduced=reduced, transform=transform, delta=delta, swap_count=swaps, scale=scale)


def gram_determinant(b: Sequence[Sequence[Number]]) -> Fraction:
    """det(B B^T), computed as the product of the squared GSO norms."""
    bstar, _ = gram_schmidt(b)
    out = Fraction(1)
    for v in bstar:
        out *= _dot(v, v)
    return out


def is_lll_reduced(b: Sequence[Sequence[Number]], delta: Number = DEFAULT_DELTA) -> bool:
    """Check size reduction and the Lovasz condition with exact GSO."""
    delta = Fraction(delta)
    bstar, mu = gram_schmidt(b)
    norms = [_dot(v, v) for v in bstar]
    for i in range(len(b)):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for k in range(1, len(b)):
        if delta * norms[k - 1] > norms[k] + mu[k][k - 1] ** 2 * norms[k - 1]:
            return False
    return True


def integer_determinant(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss fraction-free elimination)."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
