"""Nondegenerate symmetric bilinear forms over Q.

Diagonalization by congruence, Sylvester signature, discriminant, Hasse-Witt
local invariants, the W(Z) membership test, and the integrality test taken over
all rescalings of the orientation.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import matrix as mx
from .arith import (
    INF,
    SquareClass,
    hilbert_symbol,
    is_rational_square,
    relevant_primes,
    square_class,
)

DEFAULT_SEARCH_HEIGHT = 50
DEFAULT_SEARCH_BUDGET = 200_000


class SingularFormError(ValueError):
    pass


@dataclass(frozen=True)
class DiagonalForm:
    """entries = diagonal of T^T G T; columns of `transform` are the new basis."""

    entries: tuple[Fraction, ...]
    transform: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class QFormInvariants:
    rank: int
    signature: int
    discriminant: SquareClass
    local: dict = field(default_factory=dict)  # place -> +-1; omitted odd primes are +1


@dataclass(frozen=True)
class IntegralityVerdict:
    passes: bool
    case_tag: str  # "odd-rank" | "even-•" | "even-••"
    witness_lambda: Fraction | None
    failing_prime: int | None
    discriminant_ok: bool
    bad_primes: tuple[int, ...] = ()
    primes_examined: tuple[int, ...] = ()


def _as_gram(G) -> mx.Matrix:
    gram = getattr(G, "gram", G)
    m = mx.to_matrix(gram)
    if not mx.is_symmetric(m):
        raise ValueError("Gram matrix is not symmetric")
    return m


def diagonalize(G) -> DiagonalForm:
    """Symmetric Gaussian elimination: returns T with T^T G T diagonal.

    A zero pivot with a nonzero partner G[k][j] is repaired by adding
    (or subtracting) row and column j to row and column k, smallest j first.
    """
    a = _as_gram(G)
    n = len(a)
    t = mx.identity(n)

    def add_col(dst, src, f):
        # basis change e_dst += f * e_src
        for row in a:
            row[dst] += f * row[src]
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        for row in t:
            row[dst] += f * row[src]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
            if j is None:
                raise SingularFormError("form is degenerate")
            f = 1 if 2 * a[k][j] + a[j][j] != 0 else -1
            add_col(k, j, Fraction(f))
        piv = a[k][k]
        for i in range(k + 1, n):
            if a[k][i] != 0:
                add_col(i, k, -a[k][i] / piv)
    return DiagonalForm(tuple(a[i][i] for i in range(n)), tuple(tuple(r) for r in t))


def _entries(G) -> tuple[Fraction, ...]:
    if isinstance(G, DiagonalForm):
        return G.entries
    return diagonalize(G).entries


def signature(G) -> int:
    e = _entries(G)
    return sum(1 if x > 0 else -1 for x in e)


def discriminant(G) -> SquareClass:
    return square_class(math.prod(_entries(G), start=Fraction(1)))


def local_invariant(D, place) -> int:
    """epsilon_p = product over i < j of (a_i, a_j)_p."""
    e = _entries(D)
    if place is not INF and place != 2:
        # Hilbert symbols of two p-units are trivial at odd p.
        if not any(x.numerator % place == 0 or x.denominator % place == 0 for x in e):
            return 1
    out = 1
    for x, y in itertools.combinations(e, 2):
        out *= hilbert_symbol(x, y, place)
    return out


def support_primes(D) -> list[int]:
    return relevant_primes(*_entries(D))


def invariants(G) -> QFormInvariants:
    d = G if isinstance(G, DiagonalForm) else diagonalize(G)
    places = sorted(set(support_primes(d)) | {2}) + [INF]
    local = {p: local_invariant(d, p) for p in places}
    return QFormInvariants(d.rank, signature(d), discriminant(d), local)


def _odd_bad_primes(e: Sequence[Fraction]) -> tuple[list[int], list[int]]:
    d = DiagonalForm(tuple(e), ())
    odd = [p for p in support_primes(d) if p != 2]
    return odd, [p for p in odd if local_invariant(d, p) == -1]


def in_witt_Z(G) -> bool:
    """True iff |a_1...a_r| is a square and epsilon_p = 1 at every odd prime."""
    e = _entries(G)
    prod = math.prod(e, start=Fraction(1))
    if not is_rational_square(abs(prod)):
        return False
    return not _odd_bad_primes(e)[1]


def integrality_over_orientations(S) -> IntegralityVerdict:
    """Is (V, lambda * form) in W(Z) for some nonzero rational lambda?

    `witness_lambda` is the orientation multiplier: the form under lambda*omega
    is gram / lambda.
    """
    e = diagonalize(S).entries
    r = len(e)
    prod = math.prod(e, start=Fraction(1))
    if r == 0:
        return IntegralityVerdict(True, "even-•", Fraction(1), None, True)
    if r % 2:
        lam = prod
        rescaled = [x / lam for x in e]
        examined, bad = _odd_bad_primes(rescaled)
        passes = not bad
        verdict = IntegralityVerdict(
            passes,
            "odd-rank",
            lam if passes else None,
            None if passes else bad[0],
            True,
            tuple(bad),
            tuple(examined),
        )
    else:
        eps = 1 if prod > 0 else -1
        disc_ok = is_rational_square(abs(prod))
        single = (r % 4 == 0 and eps == 1) or (r % 4 == 2 and eps == -1)
        examined, bad = _odd_bad_primes(e)
        if single:
            blocking = bad
            lam = Fraction(1)
        else:
            blocking = [p for p in bad if p % 4 == 1]
            lam = Fraction(math.prod(bad))
        passes = disc_ok and not blocking
        verdict = IntegralityVerdict(
            passes,
            "even-•" if single else "even-••",
            lam if passes else None,
            blocking[0] if blocking else None,
            disc_ok,
            tuple(bad),
            tuple(examined),
        )
    if verdict.passes and not in_witt_Z(DiagonalForm(tuple(x / verdict.witness_lambda for x in e), ())):
        raise AssertionError("integrality witness failed its W(Z) self-check")
    return verdict


def rescale(G, lam) -> mx.Matrix:
    """Gram matrix under the orientation lam * omega, i.e. G / lam."""
    lam = Fraction(lam)
    return [[x / lam for x in row] for row in _as_gram(G)]


def search_height() -> int:
    return int(os.environ.get("WACI_SEARCH_HEIGHT", DEFAULT_SEARCH_HEIGHT))


def _find_representing_vector(a: Sequence[int], target: int, height: int, budget: int):
    """Integer v, rational s > 0 with sum a_i v_i^2 = target * s^2, or None."""
    n = len(a)
    for i, x in enumerate(a):
        if x * target > 0 and is_rational_square(Fraction(x * target)):
            v = [0] * n
            v[i] = 1
            return v, Fraction(math.isqrt(x * target))
    evaluated = 0
    for radius in range(1, height + 1):
        for k in range(1, n + 1):
            for support in itertools.combinations(range(n), k):
                ranges = [range(1, radius + 1)] + [
                    [s for s in range(-radius, radius + 1) if s] for _ in range(k - 1)
                ]
                for vals in itertools.product(*ranges):
                    if max(abs(x) for x in vals) != radius:
                        continue
                    evaluated += 1
                    if evaluated > budget:
                        return None
                    value = sum(a[i] * x * x for i, x in zip(support, vals)) * target
                    if value > 0:
                        s = math.isqrt(value)
                        if s * s == value:
                            v = [0] * n
                            for i, x in zip(support, vals):
                                v[i] = x
                            return v, Fraction(s)
    return None


def sign_diagonal_witness(G, height: int | None = None, budget: int = DEFAULT_SEARCH_BUDGET):
    """T with T^T G T = diag(1,..,1,-1,..,-1), or None if the search bound is exhausted.

    Splits off a vector representing +1 (or -1) found by a bounded search and
    recurses on its orthogonal complement.
    """
    g = _as_gram(G)
    if not in_witt_Z(g):
        raise ValueError("form is not a sum of signed squares over Q")
    height = search_height() if height is None else height
    n = len(g)
    # current subspace: basis columns (in original coordinates) with diagonal Gram
    d = diagonalize(g)
    basis = [list(col) for col in zip(*d.transform)] if n else []
    entries = list(d.entries)
    pos, neg = [], []
    while basis:
        # normalize entries to squarefree integers
        norm_basis, ints = [], []
        for vec, x in zip(basis, entries):
            rep = square_class(x).representative()
            c = Fraction(math.isqrt((Fraction(rep) / x).numerator), math.isqrt((Fraction(rep) / x).denominator))
            norm_basis.append([c * y for y in vec])
            ints.append(rep)
        r = len(ints)
        sig = sum(1 if x > 0 else -1 for x in ints)
        target = 1 if (r + sig) // 2 > 0 else -1
        found = _find_representing_vector(ints, target, height, budget)
        if found is None:
            return None
        v, s = found
        w = [sum(Fraction(vi) * col[k] for vi, col in zip(v, norm_basis)) / s for k in range(n)]
        (pos if target == 1 else neg).append(w)
        if r == 1:
            break
        comp = mx.nullspace([[ai * vi for ai, vi in zip(ints, v)]])
        sub = [[sum(c[i] * norm_basis[i][k] for i in range(r)) for k in range(n)] for c in comp]
        sub_gram = [[_bil(g, x, y) for y in sub] for x in sub]
        dd = diagonalize(sub_gram)
        basis = [
            [sum(dd.transform[i][j] * sub[i][k] for i in range(len(sub))) for k in range(n)]
            for j in range(len(sub))
        ]
        entries = list(dd.entries)
    cols = pos + neg
    return mx.transpose(cols) if cols else []


def _bil(g, x, y) -> Fraction:
    return sum((x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if g[i][j]), Fraction(0))
