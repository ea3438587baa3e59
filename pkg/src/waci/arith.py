"""Exact number theory over Z and Q: factorization, square classes,
Legendre and Hilbert symbols, sums of squares."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Union[int, Fraction]

TRIAL_DIVISION_LIMIT = 10**6

# Deterministic Miller-Rabin: these bases are exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class Infinity:
    """The real place of Q."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    limit = TRIAL_DIVISION_LIMIT
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of the odd composite n (Brent's variant)."""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of a positive integer as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    out: dict[int, int] = {}
    for p in _small_primes() if n > 1 else ():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n <= TRIAL_DIVISION_LIMIT**2:
            out[n] = out.get(n, 0) + 1
        else:
            _split(n, out)
    return sorted(out.items())


def as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q.strip())
    raise TypeError(f"not an exact rational: {q!r}")


@dataclass(frozen=True, order=True)
class SquareClass:
    """A coset of Q*/Q*^2, represented by sign * (product of distinct primes)."""

    sign: int
    primes: tuple[int, ...] = ()

    def representative(self) -> int:
        return self.sign * math.prod(self.primes)

    def __mul__(self, other: SquareClass) -> SquareClass:
        return SquareClass(self.sign * other.sign, tuple(sorted(set(self.primes) ^ set(other.primes))))

    def is_square(self) -> bool:
        return self.sign == 1 and not self.primes

    def __str__(self):
        return str(self.representative())


def square_class(q: Rational) -> SquareClass:
    q = as_fraction(q)
    if q == 0:
        raise ValueError("zero has no square class")
    n = abs(q.numerator) * q.denominator
    primes = tuple(p for p, e in factorize(n) if e % 2)
    return SquareClass(1 if q > 0 else -1, primes)


def is_rational_square(q: Rational) -> bool:
    q = as_fraction(q)
    if q < 0:
        return False
    return math.isqrt(q.numerator) ** 2 == q.numerator and math.isqrt(q.denominator) ** 2 == q.denominator


def legendre(a: int, p: int) -> int:
    if p == 2 or not is_probable_prime(p):
        raise ValueError(f"legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _valuation(n: int, p: int) -> tuple[int, int]:
    """(v, u) with n = p^v * u and p not dividing u; n nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _eps(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert_symbol(a: Rational, b: Rational, place) -> int:
    """Hilbert symbol (a, b)_v for nonzero rationals at a prime or at INF."""
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol of zero is undefined")
    if place is INF:
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    if not is_probable_prime(p):
        raise ValueError(f"{place} is not a place of Q")
    # n/d and n*d lie in the same square class.
    ai = a.numerator * a.denominator
    bi = b.numerator * b.denominator
    alpha, u = _valuation(ai, p)
    beta, v = _valuation(bi, p)
    if p == 2:
        e = _eps(u) * _eps(v) + alpha * _omega(v) + beta * _omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * _eps(p)) % 2 else 1
    if beta % 2:
        sign *= legendre(u, p)
    if alpha % 2:
        sign *= legendre(v, p)
    return sign


def relevant_primes(*values: Rational) -> list[int]:
    """Primes dividing a numerator or denominator of any of the values."""
    ps: set[int] = set()
    for q in values:
        q = as_fraction(q)
        for n in (abs(q.numerator), q.denominator):
            if n > 1:
                ps.update(p for p, _ in factorize(n))
    return sorted(ps)


def is_sum_two_rational_squares(q: Rational) -> bool:
    q = as_fraction(q)
    if q == 0:
        return True
    if q < 0:
        return False
    n = q.numerator * q.denominator
    return all(e % 2 == 0 for p, e in factorize(n) if p % 4 == 3)


def _two_squares(n: int) -> tuple[int, int] | None:
    for a in range(math.isqrt(n), -1, -1):
        rest = n - a * a
        if rest > a * a:
            return None
        b = math.isqrt(rest)
        if b * b == rest:
            return a, b
    return None


def four_square_decompose(n: int) -> tuple[int, int, int, int]:
    """Write n as a sum of four squares, using as few nonzero squares as possible.

    Within the minimal count the first entry is as large as possible; the
    result is sorted in descending order.
    """
    if n < 0:
        raise ValueError("four_square_decompose needs n >= 0")
    if n == 0:
        return (0, 0, 0, 0)
    r = math.isqrt(n)
    if r * r == n:
        return (r, 0, 0, 0)
    two = _two_squares(n)
    if two:
        return (two[0], two[1], 0, 0)
    # n is a sum of three squares unless n = 4^a (8b + 7).
    m = n
    while m % 4 == 0:
        m //= 4
    if m % 8 != 7:
        for a in range(r, 0, -1):
            two = _two_squares(n - a * a)
            if two and two[0] <= a:
                return (a, two[0], two[1], 0)
    for a in range(r, 0, -1):
        rest = n - a * a
        for b in range(min(a, math.isqrt(rest)), -1, -1):
            two = _two_squares(rest - b * b)
            if two and two[0] <= b:
                return (a, b, two[0], two[1])
    raise AssertionError(f"Lagrange's theorem failed for {n}")  # unreachable
