import pytest

from halphen.hesse import (
    FERMAT,
    FLEXES,
    LINES,
    PENCILS,
    SINGULAR_MEMBERS,
    VERTICES,
    base_points,
    harmonic_polar,
    lines_through_vertex,
    pencil_member,
    polar_conic,
    verify_dual_hesse,
    verify_flexes,
    verify_pencils,
    verify_printed_members,
)
from halphen.numfield import EPS, ZERO, to_kelem
from halphen.plane import INF, Line, PPoint
from halphen.polyring import determinant, evaluate, parse_form


def test_constants_sizes():
    assert len(VERTICES) == 12 and len(LINES) == 9 and len(FLEXES) == 9


def test_pencil_member_examples():
    assert pencil_member("v", 0) == parse_form("z^3-y^3")
    assert pencil_member("h", 1) == SINGULAR_MEMBERS[("h", 0)] + SINGULAR_MEMBERS[("h", INF)]
    f = pencil_member("v", -EPS)
    assert all(evaluate(f, p.coords) == ZERO for p in base_points("v"))
    with pytest.raises(ValueError):
        pencil_member("w", 0)


@pytest.mark.parametrize("t", PENCILS)
def test_members_vanish_on_base_points(t):
    for u in (to_kelem(3), EPS, INF, to_kelem(-1)):
        f = pencil_member(t, u)
        assert all(not evaluate(f, p.coords) for p in base_points(t))


def test_lines_through_v0():
    assert lines_through_vertex("v", 0) == sorted(
        [(0, 0, 0, 0), (0, 1, INF, 1), (0, INF, 1, INF)], key=str
    )


def test_line_1011():
    line = LINES[(1, 0, 1, 1)]
    assert line == Line(-1, 0, 1)
    on = {k for k, p in VERTICES.items() if line.contains(p)}
    assert on == {("v", 1), ("h", 0), ("delta", 1), ("gamma", 1)}


def test_polar_conic_example():
    p = PPoint(-1, 1, 0)
    # points are stored up to scale, so the polar is too
    assert polar_conic(FERMAT, p).proportional(parse_form("-3*x^2+3*y^2"))
    assert harmonic_polar(p) == LINES[(INF, 0, INF, INF)]


def test_polar_at_non_flex_is_irreducible():
    C = parse_form("x^3+y^3-2*z^3")  # (1:1:1) is on it and is not a flex
    P = polar_conic(C, PPoint(1, 1, 1))
    m = [[P.partial(i).partial(j).coeffs()[0] for j in range(3)] for i in range(3)]
    assert determinant(m) != ZERO


def test_verifiers_pass():
    for cert in (verify_dual_hesse(), verify_flexes(), verify_pencils()):
        assert cert.passed, cert.failures()
    assert verify_dual_hesse().data["incidences"] == 36


def test_printed_members_report():
    report = verify_printed_members()
    assert len(report) == 12
    for key, r in report.items():
        assert r["singular_at"], key
