from fractions import Fraction

import pytest

from waci import matrix as mx
from waci.arith import is_rational_square, is_sum_two_rational_squares, square_class
from waci.families import b1_matrix, b3_diagonal, b_block, family, family_A, family_B, verify_family
from waci.qform import discriminant, signature
from waci.quotient import NotRegularSequenceError, middle_form
from waci.smooth import SMOOTHABLE, smoothable


def _sweep(exclude, dens=range(1, 11), nums=range(-20, 21)):
    seen = set()
    for d in dens:
        for n in nums:
            c = Fraction(n, d)
            if c not in exclude and c not in seen:
                seen.add(c)
    return sorted(seen)


def _sgn(x):
    return (x > 0) - (x < 0)


@pytest.mark.parametrize("c", _sweep({1}))
def test_family_a_sweep(c):
    rep = verify_family(family_A(c))
    assert rep.ok, rep.failures()
    assert abs(rep.computed["signature"]) == 2 + _sgn(c - 1)
    assert (rep.computed["decision"] == SMOOTHABLE) == is_sum_two_rational_squares(abs(c - 1))


@pytest.mark.parametrize("c", _sweep({-2, 0, 6}, dens=(1, 2, 5, 7), nums=range(-20, 21, 3)))
def test_family_b_sweep(c):
    rep = verify_family(family_B(c))
    assert rep.ok, rep.failures()
    assert rep.computed["signature"] in {0, 2, -2, 6, -6}
    assert (rep.computed["decision"] == SMOOTHABLE) == is_rational_square(abs((c - 6) * (c + 2)))


@pytest.mark.parametrize(
    "c,sigma,smooth",
    [(-3, 0, True), (2, 2, True), (Fraction(-2, 5), 6, True), (-1, 6, False), (4, 2, False)],
)
def test_family_b_named_points(c, sigma, smooth):
    spec = family_B(c)
    assert spec.sigma == sigma and spec.smoothable == smooth
    rep = verify_family(spec)
    assert rep.ok, rep.failures()


def test_degenerate_parameters():
    with pytest.raises(NotRegularSequenceError):
        family_A(1)
    for c in (-2, 0, 6):
        with pytest.raises(NotRegularSequenceError):
            family_B(c)
    with pytest.raises(ValueError):
        family("C", 1)


def test_b_block_and_diagonal():
    a, b = b_block(Fraction(2))
    assert (a, b) == (Fraction(-1, 4), Fraction(1, 4))
    assert b3_diagonal(Fraction(-1)) == (1, 1, 1, Fraction(5, 7), 2, 10)
    assert discriminant(b1_matrix(-1)) == square_class(7)


def test_b_lambda_parametrization():
    """The block a I + b (J - I) has eigenvalues a + 2b (once) and a - b (twice)."""
    for c in (Fraction(-3), Fraction(1, 3), Fraction(5), Fraction(-7, 2)):
        a, b = b_block(c)
        den = (6 - c) * (c + 2)
        assert a + 2 * b == c * c / den
        assert a - b == c * (c - 6) / den
        block = [row[3:] for row in b1_matrix(c)[3:]]
        assert mx.det(block) == (a + 2 * b) * (a - b) ** 2


def test_family_json():
    spec = family_A(2)
    doc = spec.to_algebra_json()
    assert doc["relations"] == ["x^3 - x*y^2", "-2*x^2*y + y^3"]
    assert doc["orientation"] == "x^4"
    assert spec.oracle_json()["signature_abs"] == 3
    q = spec.build()
    assert middle_form(q, q.orientation_of(spec.orientation), spec.middle_basis).matrix() == mx.identity(3)


def test_a_orientation_sign_convention():
    # under the Eisenbud-Levine orientation A(2) has signature -3
    q = family_A(2).build()
    assert signature(middle_form(q).gram) == -3
    assert smoothable(q).orientation_flipped
