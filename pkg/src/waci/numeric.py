"""Floating-point local degree of a polynomial map germ (diagnostic only).

The degree is computed as the signed count of preimages of a random regular
value.  Supported maps: one variable, or two variables with both components
homogeneous of the same degree in variables of equal weight.  Nothing here
feeds an exact result; it exists to cross-check the Eisenbud-Levine signature.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import brentq

from .poly import WPoly

_SAMPLES = 4096


def _evaluator(p: WPoly):
    exps = np.array(list(p.terms), dtype=float) if p.terms else np.zeros((0, p.ring.nvars))
    coeffs = np.array([float(c) for c in p.terms.values()])

    def f(*xs):
        xs = [np.asarray(x, dtype=float) for x in xs]
        out = 0.0
        for e, c in zip(exps, coeffs):
            term = c
            for x, k in zip(xs, e):
                if k:
                    term = term * x**k
            out = out + term
        return out

    return f


def _degree_1d(f: WPoly, rng: np.random.Generator) -> int:
    coeffs = np.zeros(max(m[0] for m in f.terms) + 1)
    for (k,), c in f.terms.items():
        coeffs[k] = float(c)
    target = rng.normal()
    poly = coeffs.copy()
    poly[0] -= target
    roots = np.roots(poly[::-1])
    deriv = np.polynomial.polynomial.polyder(coeffs)
    total = 0
    for z in roots:
        if abs(z.imag) < 1e-9 * max(1.0, abs(z)):
            total += int(np.sign(np.polynomial.polynomial.polyval(z.real, deriv)))
    return total


def _degree_2d(f1: WPoly, f2: WPoly, rng: np.random.Generator) -> int:
    e1, e2 = _evaluator(f1), _evaluator(f2)
    j = [[_evaluator(g.diff(i)) for i in range(2)] for g in (f1, f2)]
    angle = rng.uniform(0, 2 * np.pi)
    y1, y2 = np.cos(angle), np.sin(angle)

    def cross(theta):
        c, s = np.cos(theta), np.sin(theta)
        return e1(c, s) * y2 - e2(c, s) * y1

    grid = np.linspace(0.0, 2 * np.pi, _SAMPLES + 1)
    vals = cross(grid)
    total = 0
    for k in range(_SAMPLES):
        a, b = vals[k], vals[k + 1]
        if a == 0.0 or a * b < 0:
            theta = grid[k] if a == 0.0 else brentq(cross, grid[k], grid[k + 1], xtol=1e-14)
            c, s = np.cos(theta), np.sin(theta)
            if e1(c, s) * y1 + e2(c, s) * y2 <= 0:
                continue  # image points away from the target
            jac = j[0][0](c, s) * j[1][1](c, s) - j[0][1](c, s) * j[1][0](c, s)
            total += int(np.sign(jac))
    return total


def numeric_degree(relations, trials: int = 20, seed: int = 0) -> list[int]:
    """Signed preimage counts of `trials` random regular values."""
    relations = list(relations)
    ring = relations[0].ring
    rng = np.random.default_rng(seed)
    if ring.nvars == 1:
        return [_degree_1d(relations[0], rng) for _ in range(trials)]
    if ring.nvars == 2 and len(set(ring.weights)) == 1:
        degs = {sum(m) for f in relations for m in f.terms}
        if len(degs) == 1:
            return [_degree_2d(relations[0], relations[1], rng) for _ in range(trials)]
    raise NotImplementedError(
        "numeric degree supports one variable, or two equal-weight variables with equal relation degrees"
    )
