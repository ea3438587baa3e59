"""Weighted artinian complete intersections A = Q[x]/(f_1..f_n).

Builds and validates the quotient, exposes the Poincare duality pairing and
the middle-dimensional inner product space, and computes the Eisenbud-Levine
orientation and degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import matrix as mx
from .poly import (
    GroebnerBasis,
    Monomial,
    NotArtinianError,
    PolyError,
    PolyRing,
    WPoly,
    groebner,
    jacobian_det,
)


class InvalidAlgebraError(ValueError):
    """The presentation does not define a WACI."""


class NotRegularSequenceError(InvalidAlgebraError):
    pass


class DualityFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class Orientation:
    """omega = scale * (top standard monomial)."""

    scale: Fraction

    def __post_init__(self):
        if self.scale == 0:
            raise ValueError("orientation must be nonzero")

    def scaled(self, lam) -> Orientation:
        return Orientation(self.scale * Fraction(lam))


@dataclass(frozen=True)
class InnerProductSpace:
    basis_labels: tuple[str, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    orientation: Orientation | None = None

    @property
    def rank(self) -> int:
        return len(self.gram)

    def matrix(self) -> list[list[Fraction]]:
        return [list(row) for row in self.gram]


def poincare_polynomial(var_weights: Sequence[int], rel_degrees: Sequence[int]) -> list[int]:
    """Coefficients of prod (1 - t^|f_i|)/(1 - t^|x_i|), listed by degree/2 (odd degrees vanish)."""
    num = [1]
    for d in rel_degrees:
        k = d // 2
        out = [0] * (len(num) + k)
        for i, c in enumerate(num):
            out[i] += c
            out[i + k] -= c
        num = out
    for w in var_weights:
        k = w // 2
        for i in range(k, len(num)):
            num[i] += num[i - k]
    top = (sum(rel_degrees) - sum(var_weights)) // 2
    if top < 0 or any(num[top + 1 :]) or any(c < 0 for c in num):
        raise InvalidAlgebraError(
            f"degrees {list(rel_degrees)} over weights {list(var_weights)} give no polynomial Hilbert series"
        )
    return num[: top + 1]


@dataclass(frozen=True)
class QuotientRing:
    ring: PolyRing
    relations: tuple[WPoly, ...]
    relation_degrees: tuple[int, ...]
    gb: GroebnerBasis
    basis: tuple[Monomial, ...]
    formal_dimension: int

    @property
    def m(self) -> int:
        return self.formal_dimension

    @cached_property
    def index(self) -> dict[Monomial, int]:
        return {b: i for i, b in enumerate(self.basis)}

    @cached_property
    def top_monomial(self) -> Monomial:
        top = [b for b in self.basis if self.ring.degree(b) == self.m]
        if len(top) != 1:
            raise DualityFailure(f"dim A^m = {len(top)}, expected 1")
        return top[0]

    def degree_basis(self, d: int) -> list[Monomial]:
        return [b for b in self.basis if self.ring.degree(b) == d]

    @cached_property
    def graded_dimensions(self) -> list[int]:
        """dim A^(2k) for k = 0..m/2."""
        dims = [0] * (self.m // 2 + 1)
        for b in self.basis:
            dims[self.ring.degree(b) // 2] += 1
        return dims

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def element(self, p) -> WPoly:
        """Normal form of a polynomial or polynomial text."""
        return self.gb.reduce(self.ring(p))

    def reduce(self, p: WPoly) -> WPoly:
        return self.gb.reduce(p)

    def top_coefficient(self, p) -> Fraction:
        return self.element(p).coefficient(self.top_monomial)

    @cached_property
    def _products(self) -> dict:
        return {}

    def multiply_basis(self, a: Monomial, b: Monomial) -> WPoly:
        key = (a, b) if a <= b else (b, a)
        cache = self._products
        if key not in cache:
            mm = tuple(x + y for x, y in zip(a, b))
            cache[key] = self.reduce(self.ring.monomial(mm))
        return cache[key]

    def format_monomial(self, m: Monomial) -> str:
        return self.ring.format_monomial(m)

    def orientation_of(self, element) -> Orientation:
        """Orientation given by a nonzero element of top degree."""
        nf = self.element(element)
        if nf.is_zero():
            raise ValueError("orientation element reduces to zero")
        if any(self.ring.degree(mo) != self.m for mo in nf.terms):
            raise ValueError(f"orientation element must have degree {self.m}")
        return Orientation(nf.coefficient(self.top_monomial))

    def pairing_value(self, p: WPoly, orientation: Orientation) -> Fraction:
        """Coordinate of p on omega."""
        return self.reduce(p).coefficient(self.top_monomial) / orientation.scale


def _as_ring(variables) -> PolyRing:
    if isinstance(variables, PolyRing):
        return variables
    return PolyRing.from_specs(variables)


def build_waci(variables, relations: Iterable) -> QuotientRing:
    """Validate a presentation and construct the quotient algebra.

    Rejects: relation count mismatch, inhomogeneous relations, relations with a
    linear term (redundant generators), and non-regular sequences (detected as a
    non-artinian quotient or a Hilbert series differing from the product formula).
    """
    ring = _as_ring(variables)
    n = ring.nvars
    if n == 0:
        raise InvalidAlgebraError("need at least one variable")
    rels = []
    for r in relations:
        try:
            rels.append(ring(r))
        except PolyError as exc:
            raise InvalidAlgebraError(str(exc)) from exc
    if len(rels) != n:
        raise InvalidAlgebraError(f"{n} variables but {len(rels)} relations")
    degrees = []
    for i, f in enumerate(rels):
        if f.is_zero():
            raise NotRegularSequenceError(f"relation {i + 1} is zero: not a regular sequence")
        d = f.weighted_homogeneous_degree()
        if d is None:
            raise InvalidAlgebraError(f"relation {i + 1} ({f}) is not weighted homogeneous")
        for mono in f.terms:
            if sum(mono) == 1:
                raise InvalidAlgebraError(
                    f"relation {i + 1} ({f}) has a linear term; drop the redundant generator"
                )
        if sum(next(iter(f.terms))) == 0:
            raise InvalidAlgebraError(f"relation {i + 1} is a nonzero constant")
        degrees.append(d)
    gb = groebner(rels)
    try:
        std = gb.standard_monomials()
    except NotArtinianError as exc:
        raise NotRegularSequenceError("not a regular sequence (quotient is not artinian)") from exc
    m = sum(degrees) - sum(ring.weights)
    expected = poincare_polynomial(ring.weights, degrees)
    dims = [0] * (max(d for _, d in std) // 2 + 1)
    for _, d in std:
        dims[d // 2] += 1
    if dims != expected:
        raise NotRegularSequenceError(
            f"not a regular sequence: Hilbert series {dims} differs from product formula {expected}"
        )
    basis = tuple(b for b, _ in std)
    q = QuotientRing(ring, tuple(rels), tuple(degrees), gb, basis, m)
    for j in range(0, m // 2 + 1, 2):
        pairing_matrix(q, j, Orientation(Fraction(1)))
    return q


def poincare_series_of(q: QuotientRing) -> list[int]:
    return poincare_polynomial(q.ring.weights, q.relation_degrees)


def pairing_matrix(q: QuotientRing, j: int, orientation: Orientation) -> list[list[Fraction]]:
    """Matrix of A^j x A^(m-j) -> Q, rows indexed by degree-j standard monomials."""
    if not 0 <= j <= q.m:
        raise ValueError(f"degree {j} outside [0, {q.m}]")
    rows = q.degree_basis(j)
    cols = q.degree_basis(q.m - j)
    if len(rows) != len(cols):
        raise DualityFailure(f"dim A^{j} = {len(rows)} but dim A^{q.m - j} = {len(cols)}")
    top = q.top_monomial
    mat = [
        [q.multiply_basis(a, b).coefficient(top) / orientation.scale for b in cols]
        for a in rows
    ]
    if rows and mx.rank(mat) != len(rows):
        raise DualityFailure(f"degenerate pairing in degree {j}")
    return mat


def middle_form(
    q: QuotientRing,
    orientation: Orientation | None = None,
    basis: Sequence | None = None,
) -> InnerProductSpace:
    """Gram matrix of the Poincare product on A^(m/2), valued in Q via omega."""
    if q.m % 4:
        raise ValueError(f"formal dimension {q.m} is not divisible by 4")
    if orientation is None:
        orientation = el_orientation(q)
    k = q.m // 2
    if basis is None:
        elems = [q.ring.monomial(b) for b in q.degree_basis(k)]
    else:
        elems = [q.element(b) for b in basis]
        r = len(q.degree_basis(k))
        if len(elems) != r:
            raise ValueError(f"middle basis needs {r} elements, got {len(elems)}")
        for e in elems:
            if any(q.ring.degree(mo) != k for mo in e.terms):
                raise ValueError(f"middle basis element {e} is not of degree {k}")
        coords = [[e.coefficient(b) for b in q.degree_basis(k)] for e in elems]
        if mx.rank(coords) != r:
            raise ValueError("middle basis elements are linearly dependent in A")
    std = q.degree_basis(k)
    top = q.top_monomial
    g = [[q.multiply_basis(a, b).coefficient(top) / orientation.scale for b in std] for a in std]
    if basis is None:
        gram = tuple(map(tuple, g))
    else:
        # C G C^T with C the coordinates of the given elements
        gram = tuple(map(tuple, mx.matmul(mx.matmul(coords, g), mx.transpose(coords))))
    return InnerProductSpace(tuple(str(e) for e in elems), gram, orientation)


def el_orientation(q: QuotientRing) -> Orientation:
    """Class of the Jacobian determinant of the relations."""
    jac = q.reduce(jacobian_det(q.relations))
    c = jac.coefficient(q.top_monomial)
    if c == 0 or len(jac.terms) != 1:
        raise DualityFailure("Jacobian class is not a nonzero top-degree element")
    return Orientation(c)


def full_form(q: QuotientRing, orientation: Orientation | None = None) -> list[list[Fraction]]:
    """Gram matrix of <p, q> = phi(pq) on all of A, phi positive on omega."""
    if orientation is None:
        orientation = el_orientation(q)
    sign = 1 if orientation.scale > 0 else -1
    top = q.top_monomial
    return [
        [sign * q.multiply_basis(a, b).coefficient(top) for b in q.basis] for a in q.basis
    ]


def el_degree(q: QuotientRing) -> int:
    """Signature of the Eisenbud-Levine form, i.e. the local degree of the relations map."""
    from .qform import signature

    return signature(full_form(q))
