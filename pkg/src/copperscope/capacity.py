"""Capacities of adelic sets in closed form, with exact comparison against 1.

Only sets whose capacity has a closed form are modelled: p-adic discs, Z_p,
the default Zbar_p, monic-polynomial preimages of those, complex discs and
symmetric real intervals.  A capacity is stored as a finite product
prod base**exp with positive integer bases and rational exponents, so every
feasibility verdict is decided with integer arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from . import poly
from .arith import is_prime, padic_valuation
from .errors import DegenerateInput, NonMonicPolynomial, NonPrimeModulus

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class LogCapacity:
    """Exact positive real prod(base ** exp).  The empty product is 1."""

    factors: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[int, Fraction] = {}
        for base, exp in self.factors.items():
            base = int(base)
            if base < 1:
                raise DegenerateInput(f"capacity base must be a positive integer, got {base}")
            if isinstance(exp, float):
                raise DegenerateInput("capacity exponents must be rational, not float")
            exp = Fraction(exp)
            if base == 1 or exp == 0:
                continue
            clean[base] = clean.get(base, Fraction(0)) + exp
        object.__setattr__(self, "factors", {b: e for b, e in sorted(clean.items()) if e != 0})

    @classmethod
    def one(cls) -> "LogCapacity":
        return cls({})

    @classmethod
    def rational(cls, r: Rational) -> "LogCapacity":
        if isinstance(r, float):
            raise DegenerateInput("radius must be rational, not float")
        r = Fraction(r)
        if r <= 0:
            raise DegenerateInput(f"radius must be positive, got {r}")
        return cls({r.numerator: Fraction(1), r.denominator: Fraction(-1)})

    @classmethod
    def power(cls, base: int, exp: Rational) -> "LogCapacity":
        """base ** exp, e.g. N^(1/d + eps) with eps rational."""
        return cls({base: exp})

    def __mul__(self, other: "LogCapacity") -> "LogCapacity":
        merged = dict(self.factors)
        for b, e in other.factors.items():
            merged[b] = merged.get(b, Fraction(0)) + e
        return LogCapacity(merged)

    def __pow__(self, k: Rational) -> "LogCapacity":
        k = Fraction(k)
        return LogCapacity({b: e * k for b, e in self.factors.items()})

    def inverse(self) -> "LogCapacity":
        return self ** -1

    def ln(self) -> float:
        """Natural log as a float (for reporting; verdicts use ``compare_to_one``)."""
        return math.fsum(float(e) * math.log(b) for b, e in self.factors.items())

    def to_json(self) -> dict:
        return {str(b): str(e) for b, e in self.factors.items()}


def compare_to_one(c: LogCapacity) -> int:
    """Exact sign of c - 1, as -1, 0 or 1.

    Clears exponent denominators with L = lcm, then compares
    prod b**(L e) over e > 0 against prod b**(-L e) over e < 0.
    """
    if not c.factors:
        return 0
    L = 1
    for e in c.factors.values():
        L = math.lcm(L, e.denominator)
    num = den = 1
    for b, e in c.factors.items():
        k = int(e * L)
        if k > 0:
            num *= b**k
        else:
            den *= b ** (-k)
    return (num > den) - (num < den)


# -- local sets -------------------------------------------------------------


@dataclass(frozen=True)
class PDisk:
    """{z in Qbar_p : |z|_p <= |N|_p}."""

    p: int
    N: int


@dataclass(frozen=True)
class PIntegers:
    """Z_p (not its algebraic closure)."""

    p: int


@dataclass(frozen=True)
class PDefault:
    """Zbar_p, the closed unit disc of Qbar_p."""


@dataclass(frozen=True)
class Preimage:
    """f^{-1}(inner) for monic integral f of degree >= 1."""

    f: tuple
    inner: "LocalSet"

    def __post_init__(self):
        f = tuple(poly.trim(int(c) for c in self.f))
        object.__setattr__(self, "f", f)
        if len(f) < 2 or f[-1] != 1:
            raise NonMonicPolynomial(f"preimage polynomial must be monic of degree >= 1: {f}")


LocalSet = Union[PDisk, PIntegers, PDefault, Preimage]


def _local_prime(s: LocalSet) -> Optional[int]:
    if isinstance(s, (PDisk, PIntegers)):
        return s.p
    if isinstance(s, Preimage):
        return _local_prime(s.inner)
    return None


def local_capacity(s: LocalSet) -> LogCapacity:
    if isinstance(s, PDefault):
        return LogCapacity.one()
    if isinstance(s, PDisk):
        if not is_prime(s.p):
            raise NonPrimeModulus(f"{s.p} is not prime")
        if s.N < 1:
            raise DegenerateInput("disc radius must be |N|_p for an integer N >= 1")
        return LogCapacity({s.p: -padic_valuation(s.N, s.p)})
    if isinstance(s, PIntegers):
        if not is_prime(s.p):
            raise NonPrimeModulus(f"{s.p} is not prime")
        return LogCapacity({s.p: Fraction(-1, s.p - 1)})
    if isinstance(s, Preimage):
        return local_capacity(s.inner) ** Fraction(1, len(s.f) - 1)
    raise TypeError(f"not a local set: {s!r}")


# -- archimedean sets -------------------------------------------------------


def _as_radius(r: Union[Rational, LogCapacity]) -> LogCapacity:
    return r if isinstance(r, LogCapacity) else LogCapacity.rational(r)


@dataclass(frozen=True)
class ComplexDisk:
    radius: LogCapacity

    def __post_init__(self):
        object.__setattr__(self, "radius", _as_radius(self.radius))


@dataclass(frozen=True)
class RealInterval:
    """[-half_width, half_width]."""

    half_width: LogCapacity

    def __post_init__(self):
        object.__setattr__(self, "half_width", _as_radius(self.half_width))


ArchSet = Union[ComplexDisk, RealInterval]


def arch_capacity(s: ArchSet) -> LogCapacity:
    if isinstance(s, ComplexDisk):
        return s.radius
    if isinstance(s, RealInterval):
        return s.half_width * LogCapacity({2: -1})
    raise TypeError(f"not an archimedean set: {s!r}")


# -- adelic sets ------------------------------------------------------------


@dataclass(frozen=True)
class CongruenceLocus:
    """E_p = f^{-1}(D(0, |N|_p)) at every prime p | N, without factoring N.

    Primes listed explicitly in the surrounding AdelicSet take precedence.
    """

    degree: int
    N: int

    def __post_init__(self):
        if self.degree < 1 or self.N < 1:
            raise DegenerateInput("congruence locus needs degree >= 1 and N >= 1")


@dataclass(frozen=True)
class AdelicSet:
    """E_inf x prod_p E_p; unlisted primes carry Zbar_p."""

    arch: ArchSet
    exceptional: Mapping[int, LocalSet] = field(default_factory=dict)
    congruence: Optional[CongruenceLocus] = None

    def __post_init__(self):
        ex = {}
        for p, s in self.exceptional.items():
            if not is_prime(p):
                raise NonPrimeModulus(f"{p} is not prime")
            q = _local_prime(s)
            if q is not None and q != p:
                raise DegenerateInput(f"local set for {q} filed under prime {p}")
            if not isinstance(s, PDefault):
                ex[p] = s
        object.__setattr__(self, "exceptional", dict(sorted(ex.items())))


def global_capacity(e: AdelicSet) -> LogCapacity:
    """Product of the archimedean capacity and all local capacities."""
    total = arch_capacity(e.arch)
    for s in e.exceptional.values():
        total = total * local_capacity(s)
    if e.congruence is not None:
        d, N = e.congruence.degree, e.congruence.N
        # prod_{p | N} |N|_p^(1/d) = N^(-1/d); undo the primes overridden explicitly.
        total = total * LogCapacity({N: Fraction(-1, d)})
        for p in e.exceptional:
            v = padic_valuation(N, p)
            if v:
                total = total * LogCapacity({p: Fraction(v, d)})
    return total


# -- verdicts ---------------------------------------------------------------


class Status(str, enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    BOUNDARY = "Boundary"


@dataclass(frozen=True)
class Verdict:
    status: Status
    capacity: LogCapacity
    note: str


def verdict_for(c: LogCapacity, infinite_note: str = "") -> Verdict:
    sign = compare_to_one(c)
    if sign < 0:
        return Verdict(
            Status.EXISTS,
            c,
            "capacity < 1: a nonzero auxiliary polynomial bounded by 1 on every "
            "component exists (strictly below 1 at the archimedean place)",
        )
    if sign > 0:
        note = "capacity > 1: no such auxiliary polynomial exists"
        if infinite_note:
            note += "; " + infinite_note
        return Verdict(Status.NOT_EXISTS, c, note)
    return Verdict(
        Status.BOUNDARY, c, "capacity = 1: the existence criterion decides neither way"
    )


def coppersmith_adelic_set(
    f: Sequence[int], N: int, X: Union[Rational, LogCapacity], arch_kind: str = "disk"
) -> AdelicSet:
    f = poly.trim(int(c) for c in f)
    if len(f) < 2 or f[-1] != 1:
        raise NonMonicPolynomial(f"f must be monic of degree >= 1: {f}")
    if N < 2:
        raise DegenerateInput("N must be >= 2")
    if isinstance(X, LogCapacity):
        radius = X
    else:
        if isinstance(X, float):
            raise DegenerateInput("X must be rational or an exact power expression")
        if Fraction(X) <= 0:
            raise DegenerateInput(f"X must be positive, got {X}")
        radius = LogCapacity.rational(X)
    if arch_kind == "disk":
        arch: ArchSet = ComplexDisk(radius)
    elif arch_kind == "interval":
        arch = RealInterval(radius)
    else:
        raise DegenerateInput(f"arch_kind must be 'disk' or 'interval', got {arch_kind!r}")
    return AdelicSet(arch=arch, congruence=CongruenceLocus(len(f) - 1, N))


def coppersmith_feasibility(
    f: Sequence[int], N: int, X: Union[Rational, LogCapacity], arch_kind: str = "disk"
) -> Verdict:
    """Can a polynomial in Q[x] vanish on all small solutions of f = 0 mod N?

    The candidate solutions satisfy |f(z)|_p <= |N|_p at every p and lie in
    the disc |z| <= X (or in the real interval [-X, X] for ``interval``).
    """
    e = coppersmith_adelic_set(f, N, X, arch_kind)
    where = "complex disc" if arch_kind == "disk" else "real interval"
    return verdict_for(
        global_capacity(e),
        infinite_note=f"the set of algebraic-integer solutions in the {where} is infinite, "
        "so no nonzero rational function vanishes on all of them",
    )
