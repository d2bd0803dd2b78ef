from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from halphen.abelian import (
    CLASSES,
    E0,
    G_HAT,
    G_MAP,
    H_HAT,
    H_MAP,
    ORIGIN,
    ZETA,
    ZETA_BAR,
    APoint,
    Eisenstein,
    PhiMatrix,
    class_square,
    curve_intersect_torsion,
    curve_membership,
    eigen_points,
    fixed_point,
    intersection_number,
    kernel_check,
    labelled_eigen_points,
    n_curves,
    phi,
    psi,
    psi_identity_holds,
    sigma_apply,
    sigma_fixed_points,
    theta_matrices,
    translates,
    verify_abelian,
)
from halphen.hesse import VERTICES
from halphen.numfield import EPS
from halphen.plane import PPoint

P = [[fixed_point(i, j) for j in range(3)] for i in range(3)]
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=6)
eis = st.builds(Eisenstein, rationals, rationals)
apoints = st.builds(APoint, eis, eis)


def test_eisenstein_arithmetic():
    assert ZETA * ZETA == ZETA - 1
    assert ZETA + ZETA_BAR == Eisenstein(1, 0)
    assert (1 + ZETA).norm() == 3
    assert Eisenstein(2, 3).norm() == 4 + 6 + 9
    assert Eisenstein(Fraction(1, 2), 1) * Eisenstein(Fraction(1, 2), 1).inverse() == Eisenstein(1, 0)


@given(eis)
def test_norm_positive(a):
    assert a.norm() >= 0 and (a.norm() == 0) == (not a)


def test_fixed_points():
    assert sigma_apply(P[1][2]) == P[1][2]
    fps = sigma_fixed_points()
    assert len(fps) == 9 and set(fps) == {p for row in P for p in row}
    assert all(a + b in fps for a in fps for b in fps)
    assert (P[1][0] + P[2][0]).is_zero()


def test_phi_matrices():
    assert phi("Δ+Γ") == phi("Delta") + phi("Gamma")
    assert phi("N") == phi("H") + phi("Delta") + phi("Gamma") - phi("V")
    assert phi("M") == phi("V") + phi("H") + phi("Delta") + phi("Gamma")
    assert phi("Delta+Gamma").det()
    assert phi("Delta+Gamma") @ phi("Delta+Gamma").inverse() == PhiMatrix.of([[1, 0], [0, 1]])
    assert phi("M") == PhiMatrix.of([[3, -1 - ZETA_BAR], [-1 - ZETA, 3]])


def test_g_h_conjugations():
    assert G_HAT @ phi("H") @ G_MAP == phi("Delta")
    assert H_HAT @ phi("H") @ H_MAP == phi("Gamma")


def test_psi_on_fixed_points():
    for i, j, k, l in product(range(3), repeat=4):
        assert psi(P[i][j], P[k][l]) == P[i][l]
    assert psi(ORIGIN, ORIGIN) == ORIGIN


def test_psi_identity_exhaustive_denominator_six():
    # only x_1 and y_2 enter the identity
    sixths = [Eisenstein(Fraction(a, 6), Fraction(c, 6)) for a in range(6) for c in range(6)]
    for x1, y2 in product(sixths, repeat=2):
        assert psi_identity_holds(APoint(x1, E0), APoint(E0, y2))


@given(apoints, apoints)
def test_psi_identity_random(x, y):
    assert psi_identity_holds(x, y)


def test_kernel_check():
    assert all(kernel_check(p) for row in P for p in row)
    assert kernel_check(ORIGIN)
    assert not kernel_check(APoint(Eisenstein(Fraction(1, 2), 0), E0))


def test_theta_eigen_points():
    M = theta_matrices()
    e2 = EPS * EPS
    assert set(eigen_points(M["M10"])) == {PPoint(1, 1, 1), PPoint(1, EPS, e2), PPoint(1, e2, EPS)}
    assert set(eigen_points(M["M11"])) == {PPoint(EPS, 1, 1), PPoint(1, EPS, 1), PPoint(1, 1, EPS)}
    assert set(eigen_points(M["M12"])) == {PPoint(e2, 1, 1), PPoint(1, e2, 1), PPoint(1, 1, e2)}
    pts = {p for k in ("M10", "M11", "M12") for p in eigen_points(M[k])}
    pts |= {PPoint(1, 0, 0), PPoint(0, 1, 0), PPoint(0, 0, 1)}
    assert pts == set(VERTICES.values())


def test_labelled_eigen_points_start_with_zero_vertices():
    lab = labelled_eigen_points()
    for t in ("h", "delta", "gamma"):
        assert lab[t][0] == VERTICES[(t, 0)]


def test_curve_intersections():
    N, V, H = CLASSES["N"], CLASSES["V"], CLASSES["H"]
    assert curve_intersect_torsion(N, V) == {P[0][0], P[0][1], P[0][2]}
    assert curve_intersect_torsion(V, H) == {ORIGIN}
    with pytest.raises(ValueError):
        curve_intersect_torsion(V, CLASSES["V"].translate(P[1][0]))
    N02 = n_curves()["N02"]
    on = {p for row in P for p in row if curve_membership(N02, p)}
    T = translates()
    off = {p for row in P for p in row if not (curve_membership(T["V0"], p) or curve_membership(T["V2"], p))}
    assert on == off


def test_intersection_numbers():
    C = CLASSES
    assert intersection_number(C["N"], C["V"]) == 3
    for k in ("H", "Delta", "Gamma"):
        assert intersection_number(C["N"], C[k]) == 1
    names = ["V", "H", "Delta", "Gamma"]
    for a in names:
        assert intersection_number(C[a], C[a]) == 0
        for b in names:
            assert intersection_number(C[a], C[b]) == intersection_number(C[b], C[a])
            if a != b:
                assert intersection_number(C[a], C[b]) == 1
    assert class_square([(1, C[k]) for k in names]) == 12
    assert class_square([(1, C["Delta"]), (1, C["Gamma"])]) == 2


def test_divisor_supports_cover_fixed_points():
    T, N = translates(), n_curves()
    supports = [
        [T["V1"], T["V2"], N["N12"]],
        [T["V0"], T["V2"], N["N02"]],
        [T["V0"], T["V1"], N["N01"]],
    ]
    for curves in supports:
        assert all(any(curve_membership(c, p) for c in curves) for row in P for p in row)


def test_verify_abelian():
    cert = verify_abelian()
    assert cert.passed, cert.failures()
