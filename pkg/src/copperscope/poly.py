"""Dense univariate polynomials over Z and Q.

A polynomial is a list of coefficients, constant term first, with no trailing
zeros; the zero polynomial is ``[]``.  ``IntPoly`` holds ints, ``RatPoly``
holds ``Fraction`` (ints are accepted anywhere a RatPoly is).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

IntPoly = list
RatPoly = list
Number = Union[int, Fraction]


def trim(p: Iterable[Number]) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence[Number]) -> int:
    """Degree, with deg(0) = -1."""
    return len(trim(p)) - 1


def add(a: Sequence[Number], b: Sequence[Number]) -> list:
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def scale(p: Sequence[Number], c: Number) -> list:
    return trim(c * x for x in p)


def mul(a: Sequence[Number], b: Sequence[Number]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def power(p: Sequence[Number], k: int) -> list:
    result: list = [1]
    base = list(p)
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def evaluate(p: Sequence[Number], x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def shift(p: Sequence[Number], t: Number) -> list:
    """Coefficients of p(x + t) (Taylor shift via repeated synthetic division)."""
    out = list(p)
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += t * out[j + 1]
    return trim(out)


def substitute_scaled(p: Sequence[Number], X: Number) -> list:
    """Coefficients of p(x * X)."""
    return trim(c * X**i for i, c in enumerate(p))


def derivative(p: Sequence[Number]) -> list:
    return trim(i * p[i] for i in range(1, len(p)))


def is_monic(p: Sequence[Number]) -> bool:
    p = trim(p)
    return bool(p) and p[-1] == 1


def to_fractions(p: Iterable[Number]) -> RatPoly:
    return trim(Fraction(c) for c in p)


def clear_denominators(p: Sequence[Number]) -> tuple[IntPoly, int]:
    """Return (P, D) with P integral and p = P / D, D > 0."""
    den = 1
    for c in p:
        den = math.lcm(den, Fraction(c).denominator)
    return trim(int(Fraction(c) * den) for c in p), den


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def primitive(p: Sequence[Number]) -> IntPoly:
    """Primitive integer polynomial with positive leading coefficient, same roots as p."""
    P, _ = clear_denominators(p)
    if not P:
        return []
    g = content(P)
    if P[-1] < 0:
        g = -g
    return [c // g for c in P]


def divmod_poly(a: Sequence[Number], b: Sequence[Number]) -> tuple[RatPoly, RatPoly]:
    """Euclidean division over Q."""
    b = to_fractions(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = to_fractions(a)
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    lead = b[-1]
    while len(r) >= len(b):
        k = len(r) - len(b)
        c = r[-1] / lead
        q[k] = c
        for i, bc in enumerate(b):
            r[i + k] -= c * bc
        r = trim(r)
    return trim(q), r


def _int_rem_positive(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive part of a positive multiple of rem(a, b).

    Uses pseudo-division by |lc(b)| so the sign of the remainder is preserved,
    which is what the Sturm sequence needs.
    """
    r = list(a)
    lc = b[-1]
    alc = abs(lc)
    db = len(b) - 1
    while len(r) >= len(b):
        k = len(r) - len(b)
        top = r[-1]
        # r <- |lc| * r - sign(lc) * top * x^k * b  (positive scaling of r)
        r = [alc * c for c in r]
        s = top if lc > 0 else -top
        for i in range(db + 1):
            r[i + k] -= s * b[i]
        r = trim(r)
        g = content(r)
        if g > 1:
            r = [c // g for c in r]
    return r


def gcd_poly(a: Sequence[Number], b: Sequence[Number]) -> IntPoly:
    """Primitive gcd of two polynomials (primitive PRS)."""
    a, b = primitive(a), primitive(b)
    while b:
        a, b = b, primitive(_int_rem_positive(a, b))
    return a


def squarefree_part(p: Sequence[Number]) -> IntPoly:
    P = primitive(p)
    if len(P) <= 2:
        return P
    g = gcd_poly(P, derivative(P))
    if len(g) <= 1:
        return P
    q, r = divmod_poly(P, g)
    assert not r
    return primitive(q)


def sturm_sequence(p: Sequence[Number]) -> list[IntPoly]:
    """Sturm sequence of the square-free part of p, each term scaled by a
    positive constant (which leaves every sign count unchanged)."""
    s0 = squarefree_part(p)
    if len(s0) <= 1:
        return [s0]
    seq = [s0, primitive(derivative(s0))]
    while len(seq[-1]) > 1:
        r = _int_rem_positive(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def sign_variations(seq: Sequence[IntPoly], x: Number) -> int:
    signs = [s for s in (_sign(evaluate(q, x)) for q in seq) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_real_roots(seq: Sequence[IntPoly], a: Number, b: Number) -> int:
    """Distinct real roots in the half-open interval (a, b], a < b."""
    return sign_variations(seq, a) - sign_variations(seq, b)
