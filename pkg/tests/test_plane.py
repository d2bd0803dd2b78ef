import pytest
from hypothesis import given
from hypothesis import strategies as st

from halphen.audit import marked_coordinate
from halphen.cubics import halphen_cubics
from halphen.hesse import LINES, VERTICES
from halphen.numfield import B, EPS, ONE, ZERO, to_kelem
from halphen.plane import (
    INF,
    CommonFactorError,
    Line,
    NotOnCurveError,
    PPoint,
    Direction,
    SingularPointError,
    direction_of_line,
    intersection_multiplicity,
    line_through,
    meet,
    mobius_from_marking,
    tangent_direction,
)
from halphen.polyring import parse_form
from halphen.torsion import p1_torsion_exact, s3_images

V0 = PPoint(1, 0, 0)


def test_points_are_projective():
    assert PPoint(2, 4, 6) == PPoint(1, 2, 3)
    assert PPoint(0, EPS, B) == PPoint(0, 1, B * EPS * EPS)
    assert PPoint(0, 3, 0).coords[1] == ONE
    with pytest.raises(ValueError):
        PPoint(0, 0, 0)


def test_line_through_examples():
    assert line_through(V0, PPoint(1, 1, 1)) == Line(0, -1, 1)
    assert line_through(PPoint(0, 1, 0), PPoint(0, 0, 1)) == Line(1, 0, 0)
    l = line_through(PPoint(1, EPS, EPS * EPS), V0)
    assert l == LINES[(0, 1, INF, 1)]  # z - e*y
    with pytest.raises(ValueError):
        line_through(V0, PPoint(3, 0, 0))


def test_meet():
    assert meet(Line(1, 0, 0), Line(0, 1, 0)) == PPoint(0, 0, 1)


def test_tangent_direction():
    C = parse_form("x^3+y^3-z^3")
    d = tangent_direction(C, PPoint(1, 0, 1))
    assert d.line() == Line(1, 0, -1)
    # scale invariance in C and in p
    assert tangent_direction(C.scale(to_kelem(5) * EPS), PPoint(2, 0, 2)) == d
    with pytest.raises(SingularPointError):
        tangent_direction(parse_form("z^3-y^3"), V0)
    with pytest.raises(NotOnCurveError):
        tangent_direction(C, PPoint(1, 1, 1))
    assert SingularPointError is not NotOnCurveError


def test_marking_defining_property():
    lines = sorted((LINES[k] for k in LINES if k[0] == 0), key=Line.sort_key)
    ds = [direction_of_line(V0, l) for l in lines]
    u = mobius_from_marking(*ds)
    assert [u(d) for d in ds] == [ZERO, ONE, INF]
    with pytest.raises(ValueError):
        mobius_from_marking(ds[0], ds[0], ds[1])
    other = direction_of_line(PPoint(0, 1, 0), Line(1, 0, 0))
    with pytest.raises(ValueError):
        mobius_from_marking(ds[0], ds[1], other)


def test_order_one_tangents_at_v0():
    u = marked_coordinate(("v", 0))
    vals = set()
    for t, _, C in halphen_cubics(1).items():
        if t == "v":
            continue
        vals.add(u(tangent_direction(C, V0)))
    assert vals == set(p1_torsion_exact(1))


_S3 = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
_MARKS = sorted((LINES[k] for k in LINES if k[0] == 0), key=Line.sort_key)


@pytest.mark.parametrize("perm", _S3)
def test_marking_reorder_is_an_s3_map(perm):
    ds = [direction_of_line(V0, l) for l in _MARKS]
    base = mobius_from_marking(*ds)
    u = mobius_from_marking(*(ds[i] for i in perm))
    samples = [Direction(V0, (ONE, to_kelem(s))) for s in range(-3, 4)]
    samples += [Direction(V0, (ONE, B + EPS)), Direction(V0, (ZERO, ONE))]
    maps = [lambda x, k=k: s3_images(x)[k] for k in range(6)]
    assert any(all(u(d) == g(base(d)) for d in samples) for g in maps)


def test_intersection_multiplicity_examples():
    assert intersection_multiplicity(parse_form("x"), parse_form("y"), PPoint(0, 0, 1)) == 1
    C = parse_form("x^3+y^3-z^3")
    assert intersection_multiplicity(parse_form("x-z"), C, PPoint(1, 0, 1)) == 3
    # tangent conic, cusp
    assert intersection_multiplicity(parse_form("y*z-x^2"), parse_form("y"), PPoint(0, 0, 1)) == 2
    cusp = parse_form("y^2*z-x^3")
    assert intersection_multiplicity(cusp, parse_form("x"), PPoint(0, 0, 1)) == 2
    assert intersection_multiplicity(cusp, parse_form("y"), PPoint(0, 0, 1)) == 3
    with pytest.raises(CommonFactorError):
        intersection_multiplicity(parse_form("x*y"), parse_form("x*z"), PPoint(0, 0, 1))


def test_order_one_pair_multiplicities():
    H = halphen_cubics(1)
    Cv = H.cubics["v"][-EPS]
    Ch = H.cubics["h"][-EPS]
    shared = [p for k, p in VERTICES.items() if k[0] in ("delta", "gamma")]
    mults = sorted(intersection_multiplicity(Cv, Ch, p) for p in shared)
    assert mults == [1, 1, 1, 2, 2, 2]


@given(st.integers(1, 5), st.integers(-5, -1), st.integers(-5, 5))
def test_multiplicity_symmetric(a, b, c):
    # the x^3 terms keep y out of both equations, so no shared component
    p = PPoint(0, 0, 1)
    F = parse_form(f"x^2*y+y^3+{a}*x^3")
    G = parse_form(f"y^2*z+{b}*x^3+{c}*x*y*z")
    assert intersection_multiplicity(F, G, p) == intersection_multiplicity(G, F, p)
