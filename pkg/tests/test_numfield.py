from fractions import Fraction

import mpmath
import pytest
from hypothesis import given

from conftest import kelems
from halphen.numfield import (
    B,
    EPS,
    ONE,
    ZERO,
    KElem,
    apply_automorphism,
    automorphisms,
    embed_complex,
    galois_conjugates,
    inverse_by_linear_system,
    kelem_from_json,
    kelem_to_json,
    minimal_polynomial,
    to_kelem,
)


def test_defining_relations():
    assert EPS * EPS + EPS + 1 == ZERO
    assert B**3 == 2
    assert EPS**3 == ONE


def test_basis_order():
    assert (EPS * B).coords == (0, 0, 0, 1, 0, 0)
    assert (B * B).coords == (0, 0, 0, 0, 1, 0)
    assert (EPS * B * B).coords == (0, 0, 0, 0, 0, 1)
    assert (EPS * EPS).coords == (-1, -1, 0, 0, 0, 0)


def test_minimal_polynomials_of_generators():
    assert minimal_polynomial(EPS) == (1, 1, 1)
    assert minimal_polynomial(B) == (-2, 0, 0, 1)
    assert minimal_polynomial(to_kelem(Fraction(3, 7))) == (Fraction(-3, 7), 1)
    # b + 1 has minimal polynomial (x - 1)^3 - 2
    assert minimal_polynomial(B + 1) == (-3, 3, -3, 1)


def test_inverse_examples():
    assert (B.inverse()) == B * B / 2
    assert (1 + EPS).inverse() == -EPS
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_automorphisms():
    sig = automorphisms()
    assert len(sig) == 6
    assert sig[0](B + EPS) == B + EPS
    assert apply_automorphism(EPS, 2, 0) == EPS * EPS
    assert apply_automorphism(B, 1, 1) == EPS * B
    imgs = {s(B) for s in sig}
    assert imgs == {B, EPS * B, EPS * EPS * B}
    assert len(galois_conjugates(B + EPS)) == 6
    assert galois_conjugates(to_kelem(5)) == [to_kelem(5)]


def test_embedding():
    with mpmath.workdps(40):
        z = embed_complex(EPS, 30)
        assert abs(z - mpmath.expjpi(mpmath.mpf(2) / 3)) < mpmath.mpf(10) ** -28
        assert abs(embed_complex(B, 30) - mpmath.cbrt(2)) < mpmath.mpf(10) ** -28


def test_json_round_trip():
    a = KElem([Fraction(1, 2), -3, 0, Fraction(7, 9), 0, 1])
    assert kelem_to_json(a)[0] == "1/2"
    assert kelem_from_json(kelem_to_json(a)) == a


@given(kelems(), kelems(), kelems())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(kelems(nonzero=True))
def test_inverse_routes_agree(a):
    assert a * a.inverse() == ONE
    assert a.inverse() == inverse_by_linear_system(a)


@given(kelems(), kelems())
def test_automorphisms_are_ring_maps(a, b):
    for s in automorphisms():
        assert s(a * b) == s(a) * s(b)
        assert s(a + b) == s(a) + s(b)


@given(kelems())
def test_minimal_polynomial_vanishes(a):
    p = minimal_polynomial(a)
    acc = ZERO
    for c in reversed(p):
        acc = acc * a + to_kelem(c)
    assert acc == ZERO
    assert len(p) - 1 in (1, 2, 3, 6)
