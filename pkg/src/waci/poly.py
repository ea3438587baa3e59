"""Weighted multivariate polynomials over Q, Groebner bases and normal forms.

Monomials are dense exponent tuples.  The monomial order is weighted-degree
reverse lexicographic with variables ranked in declaration order
(x_1 > x_2 > ... > x_n).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

Monomial = tuple[int, ...]
Terms = dict[Monomial, Fraction]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class PolyError(ValueError):
    pass


class PolySyntaxError(PolyError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class NotArtinianError(PolyError):
    pass


@dataclass(frozen=True)
class VarSpec:
    name: str
    weight: int = 2

    def __post_init__(self):
        if not _IDENT.match(self.name):
            raise PolyError(f"invalid variable name {self.name!r}")
        if not isinstance(self.weight, int) or self.weight < 2 or self.weight % 2:
            raise PolyError(f"weight of {self.name} must be a positive even integer, got {self.weight!r}")


@dataclass(frozen=True)
class PolyRing:
    """Q[x_1..x_n] with positive even weights."""

    variables: tuple[VarSpec, ...]

    def __post_init__(self):
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise PolyError(f"duplicate variable names in {names}")

    @classmethod
    def from_specs(cls, specs: Iterable) -> PolyRing:
        out = []
        for s in specs:
            if isinstance(s, VarSpec):
                out.append(s)
            elif isinstance(s, str):
                out.append(VarSpec(s))
            elif isinstance(s, dict):
                out.append(VarSpec(s["name"], s.get("weight", 2)))
            else:
                out.append(VarSpec(*s))
        return cls(tuple(out))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.weight for v in self.variables)

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def degree(self, m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, self.weights))

    def order_key(self, m: Monomial):
        """Sort key realizing weighted degrevlex; larger key = larger monomial."""
        return (self.degree(m), tuple(-e for e in reversed(m)))

    @cached_property
    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def monomial(self, m: Monomial, coeff=1) -> WPoly:
        return WPoly(self, {tuple(m): Fraction(coeff)} if coeff else {})

    def const(self, c) -> WPoly:
        return self.monomial(self.one_monomial, c)

    def zero(self) -> WPoly:
        return WPoly(self, {})

    def var(self, name: str) -> WPoly:
        i = self._index[name]
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.nvars)))

    def gens(self) -> tuple[WPoly, ...]:
        return tuple(self.var(n) for n in self.names)

    def parse(self, text: str) -> WPoly:
        return parse_poly(text, self)

    def __call__(self, obj) -> WPoly:
        if isinstance(obj, WPoly):
            if obj.ring != self:
                raise PolyError("polynomial belongs to a different ring")
            return obj
        if isinstance(obj, str):
            return self.parse(obj)
        return self.const(obj)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


class WPoly:
    """A polynomial with rational coefficients in a PolyRing; treat as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    # arithmetic

    def _coerce(self, other) -> WPoly:
        if isinstance(other, WPoly):
            if other.ring != self.ring:
                raise PolyError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return WPoly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return WPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return WPoly(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: Terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = t.get(m, 0) + c1 * c2
        return WPoly(self.ring, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power")
        out = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, WPoly) else other
        if other is NotImplemented:
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structure

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: self.ring.order_key(mc[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        return max(self.terms, key=self.ring.order_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def monic(self) -> WPoly:
        return self * (1 / self.leading_coefficient())

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get(self.ring.one_monomial, Fraction(0))

    def weighted_homogeneous_degree(self) -> int | None:
        """Common weighted degree of all terms, or None if inhomogeneous."""
        if not self.terms:
            raise PolyError("the zero polynomial has no degree")
        degs = {self.ring.degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def diff(self, i: int) -> WPoly:
        t: Terms = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = m[:i] + (m[i] - 1,) + m[i + 1 :]
                t[mm] = c * m[i]
        return WPoly(self.ring, t)

    def substitute(self, images: Sequence[WPoly]) -> WPoly:
        """Replace x_i by images[i] (all in a common target ring)."""
        target = images[0].ring
        out = target.zero()
        for m, c in self.terms.items():
            term = target.const(c)
            for img, e in zip(images, m):
                if e:
                    term = term * img**e
            out = out + term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            mono = self.ring.format_monomial(m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append((sign, body))
        s = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"WPoly({str(self)!r})"


# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse_poly(text: str, ring: PolyRing) -> WPoly:
    """Parse `expr := [sign] term (('+'|'-') term)*` in the given ring.

    term := [coeff] ('*'? factor)*, factor := var ('^' posint)?,
    coeff := integer | integer '/' posint.
    """
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = toks[i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise PolySyntaxError(f"expected {want}, found {tok[1] or 'end of input'!r}", text, tok[2])
        i += 1
        return tok

    def factor() -> Monomial:
        _, name, pos = take("id")
        if name not in ring._index:
            raise PolySyntaxError(f"unknown variable {name!r}", text, pos)
        e = 1
        if peek()[1] == "^":
            take()
            _, digits, p = take("num")
            e = int(digits)
            if e < 1:
                raise PolySyntaxError("exponent must be positive", text, p)
        m = [0] * ring.nvars
        m[ring._index[name]] = e
        return tuple(m)

    def term() -> tuple[Monomial, Fraction]:
        coeff = Fraction(1)
        mono = [0] * ring.nvars
        seen = False
        if peek()[0] == "num":
            _, digits, _ = take()
            coeff = Fraction(int(digits))
            if peek()[1] == "/":
                take()
                _, den, p = take("num")
                if int(den) == 0:
                    raise PolySyntaxError("zero denominator", text, p)
                coeff /= int(den)
            seen = True
        while True:
            tok = peek()
            if tok[1] == "*":
                take()
                if peek()[0] != "id":
                    raise PolySyntaxError("expected variable after '*'", text, peek()[2])
                continue
            if tok[0] != "id":
                break
            f = factor()
            mono = [a + b for a, b in zip(mono, f)]
            seen = True
        if not seen:
            tok = peek()
            raise PolySyntaxError(f"expected a term, found {tok[1] or 'end of input'!r}", text, tok[2])
        return tuple(mono), coeff

    terms: Terms = {}

    def add(m, c):
        terms[m] = terms.get(m, 0) + c

    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take()[1] == "-" else 1
    m, c = term()
    add(m, sign * c)
    while peek()[0] != "end":
        tok = peek()
        if tok[1] not in ("+", "-"):
            raise PolySyntaxError(f"unexpected {tok[1]!r}", text, tok[2])
        take()
        m, c = term()
        add(m, c if tok[1] == "+" else -c)
    return WPoly(ring, terms)


# Groebner bases


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce_terms(terms: Terms, gens: Sequence[tuple[Monomial, Terms]], key) -> Terms:
    """Full reduction of `terms` by monic generators (lm, terms)."""
    p = dict(terms)
    rem: Terms = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for glm, gterms in gens:
            if _divides(glm, m):
                q = tuple(x - y for x, y in zip(m, glm))
                for gm, gc in gterms.items():
                    mm = tuple(x + y for x, y in zip(q, gm))
                    v = p.get(mm, 0) - c * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = p.pop(m)
    return rem


def _monic(terms: Terms, key) -> tuple[Monomial, Terms]:
    lm = max(terms, key=key)
    lc = terms[lm]
    return lm, {m: c / lc for m, c in terms.items()}


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis under weighted degrevlex; generators sorted descending."""

    ring: PolyRing
    generators: tuple[WPoly, ...]
    _gens: tuple = field(repr=False, compare=False, default=())

    @property
    def order(self) -> str:
        return "weighted-degrevlex"

    @cached_property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial() for g in self.generators)

    def reduce(self, p: WPoly) -> WPoly:
        return WPoly(self.ring, _reduce_terms(p.terms, self._gens, self.ring.order_key))

    def is_artinian(self) -> bool:
        for i in range(self.ring.nvars):
            if not any(m[i] and sum(m) == m[i] for m in self.leading_monomials):
                return False
        return True

    def standard_monomials(self) -> list[tuple[Monomial, int]]:
        """Monomials outside the leading-term ideal, sorted by (degree, order)."""
        if not self.is_artinian():
            raise NotArtinianError("not artinian: some variable has no pure-power leading term")
        lms = self.leading_monomials
        n = self.ring.nvars
        seen = {self.ring.one_monomial}
        frontier = [self.ring.one_monomial]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(n):
                    mm = m[:i] + (m[i] + 1,) + m[i + 1 :]
                    if mm in seen or any(_divides(l, mm) for l in lms):
                        continue
                    seen.add(mm)
                    nxt.append(mm)
            frontier = nxt
        ordered = sorted(seen, key=self.ring.order_key)
        return [(m, self.ring.degree(m)) for m in ordered]

    def contains(self, p: WPoly) -> bool:
        return self.reduce(p).is_zero()


def s_polynomial(f: WPoly, g: WPoly) -> WPoly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = _lcm(lf, lg)
    ring = f.ring
    uf = ring.monomial(tuple(a - b for a, b in zip(l, lf)), 1 / f.leading_coefficient())
    ug = ring.monomial(tuple(a - b for a, b in zip(l, lg)), 1 / g.leading_coefficient())
    return uf * f - ug * g


def groebner(relations: Sequence[WPoly]) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm (normal selection strategy)."""
    relations = [r for r in relations]
    if not relations:
        raise PolyError("need at least one relation")
    ring = relations[0].ring
    if any(r.ring != ring for r in relations):
        raise PolyError("relations from different rings")
    key = ring.order_key
    gens: list[tuple[Monomial, Terms]] = []
    for r in relations:
        if r.is_zero():
            raise PolyError("zero relation")
        t = _reduce_terms(r.terms, gens, key) if gens else dict(r.terms)
        if t:
            gens.append(_monic(t, key))
    pairs = {(i, j) for j in range(len(gens)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(gens[ij[0]][0], gens[ij[1]][0])), ij))
        pairs.discard((i, j))
        (li, ti), (lj, tj) = gens[i], gens[j]
        if all(not (a and b) for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        l = _lcm(li, lj)
        s: Terms = {}
        for (lm, tt), sgn in (((li, ti), 1), ((lj, tj), -1)):
            q = tuple(a - b for a, b in zip(l, lm))
            for m, c in tt.items():
                mm = tuple(a + b for a, b in zip(q, m))
                s[mm] = s.get(mm, 0) + sgn * c
        s = {m: c for m, c in s.items() if c}
        h = _reduce_terms(s, gens, key)
        if h:
            gens.append(_monic(h, key))
            k = len(gens) - 1
            pairs.update((a, k) for a in range(k))
    # minimize, then inter-reduce
    minimal = []
    for idx, (lm, t) in enumerate(gens):
        if any(
            _divides(olm, lm) and (olm != lm or jdx < idx)
            for jdx, (olm, _) in enumerate(gens)
            if jdx != idx
        ):
            continue
        minimal.append((lm, t))
    reduced = []
    for idx, (lm, t) in enumerate(minimal):
        others = [g for jdx, g in enumerate(minimal) if jdx != idx]
        tail = _reduce_terms({m: c for m, c in t.items() if m != lm}, others, key)
        tail[lm] = Fraction(1)
        reduced.append((lm, tail))
    reduced.sort(key=lambda g: key(g[0]), reverse=True)
    polys = tuple(WPoly(ring, t) for _, t in reduced)
    return GroebnerBasis(ring, polys, tuple(reduced))


def normal_form(p: WPoly, G: GroebnerBasis) -> WPoly:
    return G.reduce(p)


def standard_monomials(G: GroebnerBasis) -> list[tuple[Monomial, int]]:
    return G.standard_monomials()


def jacobian_det(relations: Sequence[WPoly]) -> WPoly:
    """Expanded determinant of the matrix of partial derivatives d f_i / d x_j."""
    ring = relations[0].ring
    n = ring.nvars
    if len(relations) != n:
        raise PolyError(f"jacobian needs {n} relations, got {len(relations)}")
    jac = [[f.diff(j) for j in range(n)] for f in relations]
    det = ring.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = ring.const(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term = term * jac[i][j]
            if term.is_zero():
                break
        det = det + term
    return det


PolyLike = Union[WPoly, str]
