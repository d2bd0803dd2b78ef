from fractions import Fraction

import pytest
import sympy

from halphen.elliptic import TORSION_CURVE, flexes_of
from halphen.numfield import B, EPS, ONE, ZERO, minimal_polynomial, to_kelem
from halphen.plane import INF, PPoint
from halphen.torsion import (
    V1,
    p1_torsion_exact,
    project_from_vertex,
    s3_images,
    s3_orbit,
    tau,
)

E2 = EPS * EPS


def test_projection_examples():
    assert project_from_vertex(PPoint(1, 0, 1)) == ONE
    assert project_from_vertex(PPoint(1, -B, -1)) == to_kelem(-1)
    assert project_from_vertex(PPoint(-1, 1, 0)) in (-EPS, -E2)
    with pytest.raises(ValueError):
        project_from_vertex(V1)


def test_branch_points_project_to_branch_values():
    # the three points with y = 0 have tangent through v1
    vals = {project_from_vertex(PPoint(1, 0, w)) for w in (ONE, EPS, E2)}
    assert vals == {ZERO, ONE, INF}


def test_order_one():
    assert set(p1_torsion_exact(1)) == {-EPS, -E2}
    assert all(not u.is_rational() for u in p1_torsion_exact(1))


def test_order_two():
    P = p1_torsion_exact(2)
    assert len(P) == 11
    assert P.is_s3_invariant()
    assert set(p1_torsion_exact(1)) <= set(P)
    assert sorted(u.rational() for u in P if u.is_rational()) == [-1, Fraction(1, 2), 2]
    t = tau()
    assert set(s3_orbit(t)) <= set(P) and len(s3_orbit(t)) == 6
    assert all(u not in (ZERO, ONE) for u in P)


def test_unsupported_order():
    with pytest.raises(ValueError):
        p1_torsion_exact(3)


def test_s3_orbits():
    assert s3_orbit(-1) == frozenset(to_kelem(x) for x in (-1, Fraction(1, 2), 2))
    assert s3_orbit(-EPS) == frozenset({-EPS, -E2})
    for bad in (0, 1, INF):
        with pytest.raises(ValueError):
            s3_orbit(bad)
    assert s3_images(INF)[1] == ZERO


def _tau_oracle(b):
    e = sympy.Rational(-1, 2) + sympy.sqrt(3) * sympy.I / 2
    return -e * (b * e**2 - 1) / (b * e - 1)


def test_tau_minimal_polynomial_against_sympy():
    x = sympy.Symbol("x")
    oracle = sympy.Poly(sympy.minimal_polynomial(_tau_oracle(sympy.cbrt(2)), x), x)
    want = [Fraction(int(c)) for c in reversed(oracle.all_coeffs())]
    got = list(minimal_polynomial(tau()))
    assert got == want
    # frozen value of that oracle
    assert got == [1, -3, 60, -115, 60, -3, 1]
    for u in s3_orbit(tau()):
        assert minimal_polynomial(u) == tuple(got)


def test_listed_sextic_belongs_to_the_other_real_cube_root():
    x = sympy.Symbol("x")
    other = sympy.minimal_polynomial(_tau_oracle(-sympy.cbrt(2)), x)
    assert sympy.expand(other - (x**6 - 3 * x**5 + 5 * x**3 - 3 * x + 1)) == 0
    assert sympy.expand((x**2 - x - 1) ** 3 + 2 - (x**6 - 3 * x**5 + 5 * x**3 - 3 * x + 1)) == 0


def test_order_one_cross_ratio_is_cube_root_of_unity():
    # cross ratio (0, 1; inf, u) = u, so -u must be a primitive cube root of 1
    for u in p1_torsion_exact(1):
        assert (-u) ** 3 == ONE and -u != ONE


def test_flexes_project_into_order_one_set():
    vals = {project_from_vertex(p) for p in flexes_of(TORSION_CURVE) if p != V1}
    assert {u for u in vals if u not in (ZERO, ONE, INF)} == set(p1_torsion_exact(1))
