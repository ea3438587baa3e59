"""The two parametric families of homogeneous WACIs and their closed-form oracles.

A(c) = Q[x, y]/(x^3 - x y^2, y^3 - c x^2 y), defined for c != 1 (case (IV8)).
B(c) = Q[x1..x4]/(x_i^2 - x4^2 (i <= 3), sum_{i<j} x_i x_j - c x4^2),
defined for c not in {-2, 0, 6} (case (I8)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import matrix as mx
from .arith import as_fraction, is_rational_square, is_sum_two_rational_squares, square_class
from .poly import PolyRing, VarSpec, WPoly
from .qform import discriminant, signature
from .quotient import NotRegularSequenceError, QuotientRing, build_waci, middle_form
from .smooth import SMOOTHABLE, smoothable

A_BASIS = ("x*y", "x^2", "x^2 - y^2")
B_BASIS = (
    "x1*x2 - x3*x4",
    "x1*x4 - x2*x3",
    "x1*x3 - x2*x4",
    "x1*x2 + x3*x4",
    "x1*x4 + x2*x3",
    "x1*x3 + x2*x4",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    c: Fraction
    ring: PolyRing
    relations: tuple[WPoly, ...]
    middle_basis: tuple[str, ...]
    orientation: WPoly
    reference_matrix: tuple[tuple[Fraction, ...], ...]
    smoothable: bool
    sigma: int | None = None  # signed, w.r.t. `orientation`
    sigma_abs: int | None = None
    reference_diagonal: tuple[Fraction, ...] | None = None

    def to_algebra_json(self) -> dict:
        return {
            "variables": [{"name": v.name, "weight": v.weight} for v in self.ring.variables],
            "relations": [str(r) for r in self.relations],
            "orientation": str(self.orientation),
            "middle_basis": list(self.middle_basis),
        }

    def oracle_json(self) -> dict:
        out = {"family": self.family, "c": str(self.c)}
        if self.sigma is not None:
            out["signature"] = self.sigma
        out["signature_abs"] = self.sigma_abs
        out["smoothable"] = self.smoothable
        out["reference_matrix"] = mx.format_matrix(self.reference_matrix)
        if self.reference_diagonal is not None:
            out["reference_diagonal"] = [str(x) for x in self.reference_diagonal]
        return out

    def build(self) -> QuotientRing:
        return build_waci(self.ring, self.relations)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def family_A(c) -> FamilySpec:
    c = as_fraction(c)
    if c == 1:
        raise NotRegularSequenceError("A(1) is not a regular sequence: c must differ from 1")
    ring = PolyRing((VarSpec("x"), VarSpec("y")))
    x, y = ring.gens()
    rels = (x**3 - x * y**2, y**3 - c * x**2 * y)
    k = 1 / (c - 1)
    ref = mx.diag([k, k, 1])
    return FamilySpec(
        "A",
        c,
        ring,
        rels,
        A_BASIS,
        (c - 1) * x**4,
        tuple(map(tuple, ref)),
        is_sum_two_rational_squares(abs(c - 1)),
        sigma=2 * _sgn(k) + 1,
        sigma_abs=2 + _sgn(c - 1),
        reference_diagonal=(k, k, Fraction(1)),
    )


def b_block(c: Fraction) -> tuple[Fraction, Fraction]:
    den = (6 - c) * (c + 2)
    return c * (c - 4) / den, 2 * c / den


def b1_matrix(c) -> mx.Matrix:
    c = as_fraction(c)
    a, b = b_block(c)
    m = mx.identity(6)
    for i in range(3, 6):
        for j in range(3, 6):
            m[i][j] = a if i == j else b
    return m


def b3_diagonal(c) -> tuple[Fraction, ...]:
    c = as_fraction(c)
    one = Fraction(1)
    return (
        one,
        one,
        one,
        c * (c - 4) / ((6 - c) * (c + 2)),
        -2 * c / (c + 2),
        -2 * (c - 4) / (c + 2),
    )


def family_B(c) -> FamilySpec:
    c = as_fraction(c)
    if c in (-2, 0, 6):
        raise NotRegularSequenceError(f"B({c}) is not a regular sequence: c must avoid -2, 0, 6")
    ring = PolyRing(tuple(VarSpec(f"x{i}") for i in range(1, 5)))
    xs = ring.gens()
    x4 = xs[3]
    rels = [xs[i] ** 2 - x4**2 for i in range(3)]
    rels.append(
        sum((xs[i] * xs[j] for i in range(4) for j in range(i + 1, 4)), ring.zero()) - c * x4**2
    )
    ref = b1_matrix(c)
    diag = b3_diagonal(c) if c != 4 else None
    sigma = signature(mx.diag(diag)) if diag else signature(ref)
    return FamilySpec(
        "B",
        c,
        ring,
        tuple(rels),
        B_BASIS,
        (6 - c) * (c + 2) / 3 * x4**4,
        tuple(map(tuple, ref)),
        is_rational_square(abs((c - 6) * (c + 2))),
        sigma=sigma,
        sigma_abs=abs(sigma),
        reference_diagonal=diag,
    )


def family(name: str, c) -> FamilySpec:
    name = name.upper()
    if name == "A":
        return family_A(c)
    if name == "B":
        return family_B(c)
    raise ValueError(f"unknown family {name!r}")


@dataclass
class FamilyReport:
    spec: FamilySpec
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    computed: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    def failures(self) -> list[str]:
        return [f"{name}: {detail}" for name, ok, detail in self.checks if not ok]


def b_identities(q: QuotientRing, c: Fraction) -> dict[str, WPoly]:
    """Residues of the multiplicative identities that single out omega = y^2 in B(c)."""
    x1, x2, x3, x4 = q.ring.gens()
    y = x4**2
    out = {
        "x1x2x3x4 = (c^2-4c-6)/6 y^2": x1 * x2 * x3 * x4 - (c * c - 4 * c - 6) / 6 * y**2,
        "c y x1x2 = y^2 + y(x1+x2)(x3+x4) + x1x2x3x4": c * y * x1 * x2
        - (y**2 + y * (x1 + x2) * (x3 + x4) + x1 * x2 * x3 * x4),
        "c y x3x4 = c y x1x2": c * y * x3 * x4 - c * y * x1 * x2,
    }
    xs = (x1, x2, x3, x4)
    for i in range(4):
        out[f"x{i + 1}^2 = y"] = xs[i] ** 2 - y
        for j in range(i + 1, 4):
            out[f"y x{i + 1}x{j + 1} = c/6 y^2"] = y * xs[i] * xs[j] - c / 6 * y**2
    return {k: q.reduce(v) for k, v in out.items()}


def verify_family(spec: FamilySpec) -> FamilyReport:
    """Rebuild the ring and replay every printed claim about it."""
    report = FamilyReport(spec)
    q = spec.build()
    report.check("hilbert series", q.graded_dimensions == ([1, 2, 3, 2, 1] if spec.family == "A" else [1, 4, 6, 4, 1]),
                 str(q.graded_dimensions))
    orient = q.orientation_of(spec.orientation)
    form = middle_form(q, orient, spec.middle_basis)
    for i, row in enumerate(form.gram):
        for j, v in enumerate(row):
            want = spec.reference_matrix[i][j]
            if v != want:
                report.check(f"middle matrix entry ({i},{j})", False, f"computed {v}, reference {want}")
    report.check("middle matrix", all(
        v == spec.reference_matrix[i][j] for i, row in enumerate(form.gram) for j, v in enumerate(row)
    ))
    sigma = signature(form.gram)
    report.computed["signature"] = sigma
    report.check("signature", sigma == spec.sigma and abs(sigma) == spec.sigma_abs, f"computed {sigma}, oracle {spec.sigma}")
    verdict = smoothable(q)
    report.computed["decision"] = verdict.decision
    report.check(
        "smoothable",
        (verdict.decision == SMOOTHABLE) == spec.smoothable,
        f"computed {verdict.decision}, oracle {spec.smoothable}",
    )
    if spec.family == "B":
        c = spec.c
        disc = discriminant(form.gram)
        report.check(
            "discriminant", disc == square_class((6 - c) * (c + 2)), f"computed {disc}, expected class of {(6 - c) * (c + 2)}"
        )
        for name, residue in b_identities(q, c).items():
            report.check(f"identity {name}", residue.is_zero(), f"residue {residue}")
        if spec.reference_diagonal is not None:
            report.check(
                "diagonal signs",
                signature(mx.diag(spec.reference_diagonal)) == sigma,
                str([str(x) for x in spec.reference_diagonal]),
            )
    report.computed["graded_dimensions"] = q.graded_dimensions
    return report
