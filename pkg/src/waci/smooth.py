"""Smoothability verdicts for rational Poincare duality algebras of formal
dimension at most 11, with explicit witnesses in dimensions 4 and 8."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import four_square_decompose
from .qform import IntegralityVerdict, integrality_over_orientations, signature
from .quotient import (
    QuotientRing,
    el_orientation,
    middle_form,
    poincare_polynomial,
)

SMOOTHABLE = "smoothable"
NOT_SMOOTHABLE = "not-smoothable"
UNDECIDED = "undecided"

# Explicit solutions of a + b = sigma, 25a + 18b = sum of alpha_i^2 for small sigma.
_SMALL_SIGNATURE_SOLUTIONS = {
    1: (1, 0, (5,)),
    2: (0, 2, (6,)),
    3: (1, 2, (5, 6)),
}


class InfeasibleError(ValueError):
    pass


@dataclass(frozen=True)
class Dim4Witness:
    t: int
    s: int

    @property
    def model(self) -> str:
        if self.t + self.s == 0:
            return "S^4"
        parts = ["CP^2"] * self.t + ["-CP^2"] * self.s
        return " # ".join(parts)


@dataclass(frozen=True)
class Dim8Witness:
    """Pontrjagin data matching the bordism class a*CP^4 + b*CP^2 x CP^2.

    q1 = sum alpha_i x_i over a positive-definite orthonormal part of A^4 and
    q2 = (10a + 9b) * omega.
    """

    a: int
    b: int
    alphas: tuple[int, ...]

    @property
    def q1_coeffs(self) -> tuple[int, ...]:
        return self.alphas

    @property
    def q2_coeff(self) -> int:
        return 10 * self.a + 9 * self.b

    @property
    def q1_squared(self) -> int:
        return sum(x * x for x in self.alphas)

    def check(self, sigma: int) -> bool:
        return (
            self.a + self.b == sigma
            and 25 * self.a + 18 * self.b == self.q1_squared
            and 7 * self.q2_coeff - self.q1_squared == 45 * sigma
        )


@dataclass(frozen=True)
class SmoothVerdict:
    decision: str
    reason: str
    formal_dimension: int
    signature: int | None = None
    rank: int | None = None
    witness: object = None
    obstruction: IntegralityVerdict | None = None
    integrality: IntegralityVerdict | None = None
    orientation_flipped: bool = False


def solve_sq_system(sigma: int, t: int) -> Dim8Witness:
    """Integers a, b, alpha_1..alpha_t with a + b = sigma and 25a + 18b = sum alpha_i^2."""
    if sigma < 0 or t < 0:
        raise ValueError("sigma and t must be nonnegative")
    if t < sigma:
        raise InfeasibleError(f"t = {t} < sigma = {sigma}: positive part cannot carry the signature")
    if sigma == 0:
        return Dim8Witness(0, 0, (0,) * t)
    if sigma in _SMALL_SIGNATURE_SOLUTIONS:
        a, b, alphas = _SMALL_SIGNATURE_SOLUTIONS[sigma]
        return Dim8Witness(a, b, alphas + (0,) * (t - len(alphas)))
    # sigma >= 4 forces t >= 4, so a = 0 works: 18 * sigma is a sum of four squares.
    return Dim8Witness(0, sigma, four_square_decompose(18 * sigma) + (0,) * (t - 4))


def dim4_witness(sigma: int, r: int) -> Dim4Witness:
    if r < abs(sigma) or (r - sigma) % 2:
        raise ValueError(f"no connected sum with signature {sigma} and rank {r}")
    return Dim4Witness((r + sigma) // 2, (r - sigma) // 2)


def _decide_form(gram, m: int) -> SmoothVerdict:
    sigma = signature(gram) if len(gram) else 0
    r = len(gram)
    verdict = integrality_over_orientations(gram)
    if m > 11:
        return SmoothVerdict(
            UNDECIDED,
            "formal dimension >= 12: integrality alone does not decide smoothability",
            m,
            sigma,
            r,
            integrality=verdict,
        )
    if not verdict.passes:
        return SmoothVerdict(
            NOT_SMOOTHABLE,
            "integrality obstruction: no orientation makes the middle form a sum of signed squares",
            m,
            sigma,
            r,
            obstruction=verdict,
            integrality=verdict,
        )
    # orient so that sigma >= 0 before building witnesses
    flipped = sigma < 0
    sigma_pos = abs(sigma)
    if m == 4:
        witness = dim4_witness(sigma_pos, r)
        reason = "sign-diagonal intersection form realized by a connected sum"
    elif sigma_pos == 0:
        witness = None
        reason = "signature zero: split middle form"
    else:
        witness = solve_sq_system(sigma_pos, (r + sigma_pos) // 2)
        assert witness.check(sigma_pos)
        reason = "Pontrjagin numbers of a*CP^4 + b*CP^2xCP^2 match"
    return SmoothVerdict(
        SMOOTHABLE,
        reason,
        m,
        sigma,
        r,
        witness=witness,
        integrality=verdict,
        orientation_flipped=flipped,
    )


def smoothable(q: QuotientRing) -> SmoothVerdict:
    """Decide smoothability of a validated WACI using the Eisenbud-Levine orientation."""
    m = q.m
    if m % 4:
        if m <= 11:
            return SmoothVerdict(SMOOTHABLE, "Q-surgery: formal dimension not divisible by 4", m)
        return SmoothVerdict(UNDECIDED, "formal dimension >= 12", m)
    form = middle_form(q, el_orientation(q))
    return _decide_form(form.gram, m)


def smoothable_form(S, m: int) -> SmoothVerdict:
    """Entry point for an arbitrary 1-connected Q-PDA given by its middle form and m."""
    if m % 2 or m < 0:
        raise ValueError("formal dimension must be even and nonnegative")
    if m % 4:
        if m <= 11:
            return SmoothVerdict(SMOOTHABLE, "Q-surgery: formal dimension not divisible by 4", m)
        return SmoothVerdict(UNDECIDED, "formal dimension >= 12", m)
    if m == 0:
        return SmoothVerdict(SMOOTHABLE, "a point", m, 0, 0)
    gram = getattr(S, "gram", S)
    return _decide_form(gram, m)


# homogeneous complete intersections

_ROMAN = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII")


@dataclass(frozen=True)
class CaseEntry:
    label: str
    m: int
    degrees: tuple[int, ...]
    r: int


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def homogeneous_case_table() -> list[CaseEntry]:
    """Degree vectors (d_i >= 2, weights 2) with formal dimension 4 or 8, and r = dim A^(m/2)."""
    out = []
    for m in (4, 8):
        # sum 2(d_i - 1) = m, so d - 1 runs over partitions of m/2; more parts first
        vectors = [tuple(sorted(x + 1 for x in p)) for p in _partitions(m // 2)]
        for i, d in enumerate(sorted(vectors, key=lambda d: (-len(d), d))):
            series = poincare_polynomial([2] * len(d), [2 * x for x in d])
            out.append(CaseEntry(f"({_ROMAN[i]}{m})", m, d, series[m // 4]))
    return out


def product_model_signature(d: Sequence[int]) -> int:
    """Signature of prod CP^(d_i - 1): 1 if every d_i is odd, else 0."""
    if any(x < 2 for x in d):
        raise ValueError("degrees must be at least 2")
    return 1 if all(x % 2 for x in d) else 0
