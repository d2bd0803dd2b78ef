from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import kelems, small_fractions
from halphen.numfield import B, EPS, ONE, ZERO, to_kelem
from halphen.polyring import (
    CommonFactorError,
    Form,
    UPoly,
    X,
    Y,
    Z,
    aronhold_S,
    cubic_from_coeffs,
    evaluate,
    gradient,
    hessian_det,
    parse_form,
    resultant_elim,
    resultant_upoly,
    roots_in_K,
    upoly_gcd,
    upoly_inverse_mod,
)

FERMAT = parse_form("x^3+y^3+z^3")


def test_parse_and_print():
    f = parse_form("x^2*y + e*y^2*z - b*x*z^2")
    assert f.coeff((2, 1, 0)) == ONE
    assert f.coeff((0, 2, 1)) == EPS
    assert f.coeff((1, 0, 2)) == -B
    assert parse_form(f.to_string()) == f


def test_parse_rejects_junk():
    with pytest.raises(ValueError):
        parse_form("__import__('os')")


def test_arithmetic():
    assert (X + Y) * (X - Y) == X * X - Y * Y
    assert ((X + Y) ** 3).coeff((1, 2, 0)) == to_kelem(3)
    assert (X * Y * Z).divide_exact(Z) == X * Y
    assert (X * 2 + Y).normalized() == X + Y * Fraction(1, 2)
    assert (X * EPS).proportional(X)


def test_evaluate_and_gradient():
    assert evaluate(FERMAT, (1, -1, 0)) == ZERO
    assert gradient(FERMAT, (1, 2, 3)) == (3, 12, 27)


def test_fermat_hessian():
    # independent value: the Hessian matrix of x^3+y^3+z^3 is diag(6x, 6y, 6z)
    assert hessian_det(FERMAT) == X * Y * Z * 216


def test_hessian_covariance():
    f = parse_form("x^2*y+y^2*z+x*z^2")
    M = ((1, 2, 0), (0, 1, 1), (1, 0, 1))  # det 3
    assert hessian_det(f.substitute(M)) == hessian_det(f).substitute(M) * 9


@given(small_fractions, small_fractions, small_fractions, small_fractions)
def test_aronhold_calibration(a, b, c, d):
    f = X**3 * a + Y**3 * b + Z**3 * c + X * Y * Z * (6 * d)
    assert aronhold_S(f) == to_kelem(a * b * c * d - d**4)


def test_aronhold_invariance():
    f = parse_form("x^3+2*y^3-z^3+x*y*z+e*x^2*y")
    M = ((1, 1, 0), (0, 1, 2), (1, 0, 1))  # det 3
    assert aronhold_S(f.substitute(M)) == aronhold_S(f) * 3**4


def _sympy_form(f: Form):
    x, y, z = sympy.symbols("x y z")
    return sum(c.rational() * x**i * y**j * z**k for (i, j, k), c in f.terms.items())


@pytest.mark.parametrize(
    "f, g",
    [
        ("x^3+y^3-z^3", "x^2*y+y^2*z+x*z^2"),
        ("x^3+2*y^3-3*z^3+x*y*z", "x*y^2-z^3+2*x^2*z"),
        ("x^2+y^2-z^2", "x*y-z^2"),
    ],
)
def test_resultant_against_sympy(f, g):
    F, G = parse_form(f), parse_form(g)
    x, y, z = sympy.symbols("x y z")
    expected = sympy.Poly(sympy.resultant(_sympy_form(F), _sympy_form(G), z).subs(y, 1), x)
    r, deg = resultant_upoly(F, G)
    assert deg == F.degree * G.degree
    got = [c.rational() for c in r.c]
    want = [Fraction(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs())]
    assert got == want


def test_resultant_common_factor():
    with pytest.raises(CommonFactorError):
        resultant_elim(X * Z, Y * Z, "z")
    R = resultant_elim(X - Z, Y - Z, "z")
    assert R.proportional(X - Y)


def test_upoly_division_and_gcd():
    x = UPoly([0, 1])
    f = (x - UPoly([1])) * (x - UPoly([2])) * (x - UPoly([EPS]))
    g = (x - UPoly([2])) * (x - UPoly([B]))
    assert upoly_gcd(f, g) == x - UPoly([2])
    q, r = f.divmod(g)
    assert q * g + r == f and r.degree < g.degree
    inv = upoly_inverse_mod(x + UPoly([3]), g)
    assert ((x + UPoly([3])) * inv) % g == UPoly([1])


@given(st.lists(kelems(), min_size=1, max_size=4), st.lists(kelems(), min_size=2, max_size=4))
def test_upoly_divmod_property(a, b):
    f, g = UPoly(a), UPoly(b)
    if g.is_zero():
        return
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_roots_in_K():
    x = UPoly([0, 1])
    f = (x - UPoly([B])) * (x - UPoly([EPS * B])) * (x * x + UPoly([5]))
    roots = roots_in_K(f)
    assert set(roots) == {B, EPS * B}
    assert roots_in_K(UPoly([-2, 0, 0, 1])) and len(roots_in_K(UPoly([-2, 0, 0, 1]))) == 3
    assert roots_in_K(UPoly([1, 0, 1])) == []  # i is not in K


def test_cubic_from_coeffs_round_trip():
    C = parse_form("x^3-2*x*y*z+e*y^2*z")
    assert cubic_from_coeffs(C.coeffs()) == C
