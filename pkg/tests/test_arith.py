# property_* functions are quantified suites executed by the acceptance gate (criterion 9).

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from waci.arith import (
    INF,
    factorize,
    four_square_decompose,
    hilbert_symbol,
    is_probable_prime,
    is_rational_square,
    is_sum_two_rational_squares,
    legendre,
    relevant_primes,
    square_class,
)

nonzero = st.integers(-10**6, 10**6).filter(bool)
rationals = st.builds(Fraction, st.integers(1, 10**6) | st.integers(-(10**6), -1), st.integers(1, 200))
small_primes = st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43])


def test_primality_against_sympy():
    for n in range(-5, 5000):
        assert is_probable_prime(n) == sympy.isprime(n), n
    for n in (2**61 - 1, 2**89 - 1, (2**61 - 1) * (2**31 - 1), 3215031751, 341550071728321):
        assert is_probable_prime(n) == sympy.isprime(n)


@pytest.mark.parametrize(
    "n",
    [1, 2, 12, 360, 2**40, 999983 * 1000003, (2**31 - 1) * (2**61 - 1), 600851475143, 10**18 + 9],
)
def test_factorize_against_sympy(n):
    assert factorize(n) == sorted(sympy.factorint(n).items())


def test_factorize_by_trial_division():
    for n in range(2, 3000):
        got = factorize(n)
        assert math.prod(p**e for p, e in got) == n
        assert all(sympy.isprime(p) for p, _ in got)


def test_legendre_against_euler_and_sympy():
    for p in (3, 5, 7, 11, 101):
        for a in range(-20, 40):
            want = 0 if a % p == 0 else sympy.legendre_symbol(a % p, p)
            assert legendre(a, p) == want
    with pytest.raises(ValueError):
        legendre(3, 2)
    with pytest.raises(ValueError):
        legendre(3, 9)


def test_square_class():
    assert square_class(Fraction(8, 3)).representative() == 6
    assert square_class(-12).representative() == -3
    assert square_class(Fraction(49, 4)).is_square()
    assert is_rational_square(Fraction(9, 25))
    assert not is_rational_square(-4)
    assert (square_class(6) * square_class(15)).representative() == 10


# Independent oracle: z^2 = a x^2 + b y^2 has a primitive solution modulo p^k.


@lru_cache(maxsize=None)
def _squares(mod, p):
    every = {x * x % mod for x in range(mod)}
    units = {x * x % mod for x in range(mod) if x % p}
    return every, units


def _solvable_mod(a, b, p, k):
    mod = p**k
    sq, sq_unit = _squares(mod, p)
    for s1 in sq:
        for s2 in sq:
            s3 = (a * s1 + b * s2) % mod
            if s3 in sq_unit:
                return True
            if s3 in sq and (s1 in sq_unit or s2 in sq_unit):
                return True
    return False


def oracle_hilbert(a, b, p):
    k = 6 if p == 2 else 3
    return 1 if _solvable_mod(a, b, p, k) else -1


SQUAREFREE = [n for n in range(-30, 31) if n and sympy.factorint(abs(n)) and all(e == 1 for e in sympy.factorint(abs(n)).values())] + [1, -1]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_hilbert_against_local_solubility(p):
    vals = sorted(set(SQUAREFREE))
    vals = [v for v in vals if abs(v) <= 15]
    for a, b in itertools.combinations_with_replacement(vals, 2):
        assert hilbert_symbol(a, b, p) == oracle_hilbert(a, b, p), (a, b, p)


def test_hilbert_examples():
    assert hilbert_symbol(5, 5, 5) == 1
    assert hilbert_symbol(15, 15, 3) == -1
    assert hilbert_symbol(15, 15, 5) == 1
    assert oracle_hilbert(5, 5, 5) == 1
    assert oracle_hilbert(15, 15, 3) == -1
    assert hilbert_symbol(-1, -1, INF) == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(2, 3, 3) == -1
    with pytest.raises(ValueError):
        hilbert_symbol(0, 3, 3)
    with pytest.raises(ValueError):
        hilbert_symbol(2, 3, 4)


@settings(max_examples=1000, deadline=None)
@given(rationals, rationals, rationals, small_primes)
def property_hilbert_bilinear_and_symmetric(a, b, c, p):
    assert hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p)
    assert hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p)
    assert hilbert_symbol(a, -a, p) == 1


@settings(max_examples=1000, deadline=None)
@given(rationals, rationals, rationals, small_primes)
def property_hilbert_square_class_invariance(a, b, c, p):
    assert hilbert_symbol(a * c * c, b, p) == hilbert_symbol(a, b, p)


@settings(max_examples=1000, deadline=None)
@given(rationals, rationals)
def property_hilbert_product_formula(a, b):
    places = relevant_primes(a, b, 2) + [INF]
    assert math.prod(hilbert_symbol(a, b, v) for v in places) == 1
    # places outside the support contribute +1
    for p in (3, 5, 7, 11):
        if p not in places:
            assert hilbert_symbol(a, b, p) == 1


def _min_squares(n):
    for k in range(5):
        for combo in itertools.combinations_with_replacement(range(math.isqrt(n) + 1), k):
            if sum(x * x for x in combo) == n:
                return k
    raise AssertionError


def test_four_squares_exhaustive():
    for n in range(0, 600):
        d = four_square_decompose(n)
        assert len(d) == 4 and sum(x * x for x in d) == n
        assert list(d) == sorted(d, reverse=True)
        assert sum(1 for x in d if x) == (_min_squares(n) if n else 0)
    assert four_square_decompose(61) == (6, 5, 0, 0)
    assert four_square_decompose(7) == (2, 1, 1, 1)
    assert four_square_decompose(72) == (6, 6, 0, 0)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9))
def test_four_squares_large(n):
    d = four_square_decompose(n)
    assert sum(x * x for x in d) == n and min(d) >= 0


def test_two_rational_squares_brute_force():
    reps = {Fraction(a * a + b * b, d * d) for a in range(13) for b in range(13) for d in range(1, 5)}
    for num in range(1, 40):
        for den in range(1, 5):
            q = Fraction(num, den)
            if q in reps:
                assert is_sum_two_rational_squares(q)
    for q in (3, 7, 6, Fraction(3, 4), 21, -1):
        assert not is_sum_two_rational_squares(q)
    for q in (1, 2, 5, Fraction(1, 2), 25, 0):
        assert is_sum_two_rational_squares(q)
