import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from copperscope.arith import compare_power, iroot, primes_up_to
from copperscope.capacity import (
    AdelicSet,
    ComplexDisk,
    CongruenceLocus,
    LogCapacity,
    PDefault,
    PDisk,
    PIntegers,
    Preimage,
    RealInterval,
    Status,
    arch_capacity,
    compare_to_one,
    coppersmith_feasibility,
    global_capacity,
    local_capacity,
)
from copperscope.errors import DegenerateInput, NonMonicPolynomial, NonPrimeModulus

PRIMES = primes_up_to(100)
exps = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def cap_equal(a, b):
    return compare_to_one(a * b.inverse()) == 0


def test_local_examples():
    assert local_capacity(PIntegers(2)) == LogCapacity({2: -1})
    assert local_capacity(PIntegers(7)) == LogCapacity({7: Fraction(-1, 6)})
    N = 5**3 * 11
    assert local_capacity(Preimage((1, 0, 0, 1), PDisk(5, N))) == LogCapacity({5: -1})
    assert local_capacity(Preimage((0, 1, 0, 1), PDisk(11, N))) == LogCapacity({11: Fraction(-1, 3)})
    assert local_capacity(PDefault()) == LogCapacity.one()


def test_local_rejects_bad_input():
    with pytest.raises(NonPrimeModulus):
        local_capacity(PIntegers(9))
    with pytest.raises(NonMonicPolynomial):
        Preimage((1, 2), PDefault())


def test_arch_examples():
    N = 10**20 + 39
    assert arch_capacity(ComplexDisk(LogCapacity.power(N, Fraction(1, 3)))) == LogCapacity({N: Fraction(1, 3)})
    assert cap_equal(arch_capacity(RealInterval(4)), LogCapacity.rational(2))
    assert arch_capacity(ComplexDisk(1)) == LogCapacity.one()


def test_global_examples():
    N, d = 1000003 * 1000033, 3
    X = LogCapacity.power(7, 5)
    disk = AdelicSet(ComplexDisk(X), congruence=CongruenceLocus(d, N))
    assert global_capacity(disk) == X * LogCapacity({N: Fraction(-1, 3)})
    interval = AdelicSet(RealInterval(X), congruence=CongruenceLocus(d, N))
    assert global_capacity(interval) == X * LogCapacity({2: -1, N: Fraction(-1, 3)})
    assert global_capacity(AdelicSet(ComplexDisk(1))) == LogCapacity.one()


def test_explicit_prime_overrides_congruence_locus():
    # listing p | N explicitly must reproduce the same capacity as the implicit locus
    p, q, d = 1000003, 1000033, 3
    N = p * q
    f = (5, 0, 0, 1)
    implicit = AdelicSet(ComplexDisk(10), congruence=CongruenceLocus(d, N))
    explicit = AdelicSet(
        ComplexDisk(10),
        exceptional={p: Preimage(f, PDisk(p, N)), q: Preimage(f, PDisk(q, N))},
        congruence=CongruenceLocus(d, N),
    )
    factored = AdelicSet(
        ComplexDisk(10), exceptional={p: Preimage(f, PDisk(p, N)), q: Preimage(f, PDisk(q, N))}
    )
    assert cap_equal(global_capacity(implicit), global_capacity(explicit))
    assert cap_equal(global_capacity(implicit), global_capacity(factored))


def test_adelic_set_drops_defaults_and_checks_keys():
    e = AdelicSet(ComplexDisk(1), exceptional={3: PDefault(), 5: PIntegers(5)})
    assert list(e.exceptional) == [5]
    with pytest.raises(DegenerateInput):
        AdelicSet(ComplexDisk(1), exceptional={3: PIntegers(5)})
    with pytest.raises(NonPrimeModulus):
        AdelicSet(ComplexDisk(1), exceptional={4: PDefault()})


def test_compare_examples():
    assert compare_to_one(LogCapacity({2: -1})) == -1
    N = 10**18 + 9
    X = iroot(N, 3)
    assert compare_to_one(LogCapacity({X: 1, N: Fraction(-1, 3)})) == -1
    assert compare_to_one(LogCapacity({X + 1: 1, N: Fraction(-1, 3)})) == 1
    assert compare_to_one(LogCapacity.one()) == 0
    assert compare_to_one(LogCapacity({8: Fraction(1, 3), 2: -1})) == 0


def test_float_inputs_rejected():
    with pytest.raises(DegenerateInput):
        LogCapacity({2: 0.5})
    with pytest.raises(DegenerateInput):
        coppersmith_feasibility([0, 0, 0, 1], 101, 4.0)


def test_feasibility_examples():
    N = 10**30 + 57
    f = [3, 0, 0, 1]
    X = iroot(N, 3)
    assert X**3 < N
    assert coppersmith_feasibility(f, N, X).status is Status.EXISTS
    eta = Fraction(1, 10**6)
    X_int = LogCapacity({2: 1, N: Fraction(1, 3)}) * LogCapacity.rational(1 + eta)
    assert coppersmith_feasibility(f, N, X_int, "interval").status is Status.NOT_EXISTS
    assert coppersmith_feasibility([7, 1], N, N).status is Status.BOUNDARY


local_sets = st.one_of(
    st.sampled_from(PRIMES).map(PIntegers),
    st.tuples(st.sampled_from(PRIMES), st.integers(1, 10**6)).map(lambda t: PDisk(*t)),
    st.tuples(st.sampled_from(PRIMES), st.integers(1, 10**6), st.integers(1, 5)).map(
        lambda t: Preimage((1,) + (0,) * (t[2] - 1) + (1,), PDisk(t[0], t[1]))
    ),
)


@given(
    st.dictionaries(st.sampled_from(PRIMES), st.just(None), max_size=8).flatmap(
        lambda ks: st.tuples(*[local_sets.filter(lambda s, p=p: _prime_of(s) == p) for p in ks])
        if ks
        else st.just(())
    ),
    st.fractions(min_value=Fraction(1, 1000), max_value=1000),
)
def test_product_law(sets, radius):
    e = AdelicSet(ComplexDisk(radius), exceptional={_prime_of(s): s for s in sets})
    total = global_capacity(e).ln()
    parts = math.fsum([arch_capacity(e.arch).ln()] + [local_capacity(s).ln() for s in sets])
    assert total == pytest.approx(parts, rel=1e-12, abs=1e-12)


def _prime_of(s):
    return s.inner.p if isinstance(s, Preimage) else s.p


@given(st.dictionaries(st.integers(2, 10**6), exps, max_size=6))
def test_compare_agrees_with_high_precision(factors):
    c = LogCapacity(factors)
    with mpmath.workprec(256):
        value = mpmath.fprod(mpmath.mpf(b) ** (mpmath.mpf(e.numerator) / e.denominator) for b, e in c.factors.items())
        gap = value - 1
        assume(abs(gap) > mpmath.mpf(10) ** -30)
        assert compare_to_one(c) == (1 if gap > 0 else -1)


@given(st.integers(2, 2**200), st.integers(1, 7))
def test_threshold_sharpness(N, d):
    f = [1] + [0] * (d - 1) + [1]
    X = iroot(N, d)
    at = coppersmith_feasibility(f, N, X).status
    assert at is (Status.BOUNDARY if X**d == N else Status.EXISTS)
    assert coppersmith_feasibility(f, N, X + 1).status is Status.NOT_EXISTS
    if X > 1:
        assert coppersmith_feasibility(f, N, X - 1).status is Status.EXISTS
    Y = iroot(2**d * N, d)
    at = coppersmith_feasibility(f, N, Y, "interval").status
    assert at is (Status.BOUNDARY if compare_power(Y, d, 2**d * N) == 0 else Status.EXISTS)
    assert coppersmith_feasibility(f, N, Y + 1, "interval").status is Status.NOT_EXISTS


@given(st.integers(2, 2**128), st.integers(1, 5), st.fractions(min_value=0, max_value=1, max_denominator=1000))
def test_epsilon_form(N, d, eps):
    assume(eps > 0)
    f = [0] * d + [1]
    X = LogCapacity.power(N, Fraction(1, d) + eps)
    assert coppersmith_feasibility(f, N, X).status is Status.NOT_EXISTS
    # interval: NotExists exactly when N^(d eps) > 2^d
    expected = compare_to_one(LogCapacity({N: d * eps}) * LogCapacity({2: -d}))
    status = coppersmith_feasibility(f, N, X, "interval").status
    assert status is {1: Status.NOT_EXISTS, 0: Status.BOUNDARY, -1: Status.EXISTS}[expected]


def test_twenty_random_thresholds_exact():
    rng = random.Random(3)
    for _ in range(20):
        d = rng.randint(1, 6)
        N = rng.randint(2, 2**256)
        f = [rng.randint(0, N)] + [0] * (d - 1) + [1]
        X = iroot(N, d)
        assert coppersmith_feasibility(f, N, X + 1).status is Status.NOT_EXISTS
        assert coppersmith_feasibility(f, N, X).status is not Status.NOT_EXISTS
