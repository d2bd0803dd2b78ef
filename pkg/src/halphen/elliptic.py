"""Chord-tangent group law on a smooth plane cubic with any K-rational zero."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .numfield import ONE, ZERO, KElem
from .plane import Line, NotOnCurveError, PPoint, cross, tangent_line
from .polyring import Form, UPoly, evaluate, gradient, hessian_det, parse_form, roots_in_K

__all__ = [
    "LineInCurveError",
    "third_intersection",
    "line_points",
    "CubicGroup",
    "two_torsion",
    "flexes_of",
    "six_torsion",
    "TORSION_CURVE",
    "TORSION_ORIGIN",
]

TORSION_CURVE = parse_form("x^3+y^3-z^3")
TORSION_ORIGIN = PPoint(1, 0, 1)


class LineInCurveError(ValueError):
    """The secant or tangent line is a component of the curve."""


def _dot(u: Sequence[KElem], v: Sequence[KElem]) -> KElem:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _other_point_on(line: Line, p: PPoint) -> PPoint:
    """A point of ``line`` different from p (meet with a coordinate line)."""
    for i in range(3):
        axis = [ZERO, ZERO, ZERO]
        axis[i] = ONE
        q = cross(line.coords, axis)
        if any(q):
            q = PPoint(q)
            if q != p:
                return q
    raise ValueError("degenerate line")


def third_intersection(curve: Form, line: Line | None, p: PPoint, q: PPoint) -> PPoint:
    """Residual intersection of ``line`` with the cubic after p and q.

    With p != q, curve(s p + t q) = s t (a s + c t) where a = grad(p).q and
    c = grad(q).p, so the third point is c p - a q.  With p == q the line must
    be the tangent at p; then for any other point r on it
    curve(s p + t r) = t^2 (s grad(r).p + t curve(r)).
    """
    for pt in (p, q):
        if evaluate(curve, pt.coords):
            raise NotOnCurveError(f"{pt!r} is not on the curve")
    if p != q:
        if line is None:
            line = Line(cross(p.coords, q.coords))
        if not (line.contains(p) and line.contains(q)):
            raise ValueError("the line does not pass through both points")
        a = _dot(gradient(curve, p.coords), q.coords)
        c = _dot(gradient(curve, q.coords), p.coords)
        if not a and not c:
            raise LineInCurveError("the line lies on the curve")
        return PPoint(tuple(c * x - a * y for x, y in zip(p.coords, q.coords)))
    tangent = tangent_line(curve, p)
    if line is not None and line != tangent:
        raise ValueError("for p == q the line must be the tangent at p")
    r = _other_point_on(tangent, p)
    cr = evaluate(curve, r.coords)
    gr = _dot(gradient(curve, r.coords), p.coords)
    if not cr and not gr:
        raise LineInCurveError("the tangent line lies on the curve")
    return PPoint(tuple(cr * x - gr * y for x, y in zip(p.coords, r.coords)))


def line_points(curve: Form, line: Line) -> list[PPoint]:
    """K-rational points of curve ∩ line (without multiplicity)."""
    start = _any_point_on(line)
    base = _other_point_on(line, start)
    # points start + s*base for s in K, plus base itself
    coeffs = [ZERO] * (curve.degree + 1)
    for m, c in curve.terms.items():
        # expand prod_i (start_i + s base_i)^{m_i}
        poly = UPoly([c])
        for i in range(3):
            lin = UPoly([start[i], base[i]])
            for _ in range(m[i]):
                poly = poly * lin
        for k, a in enumerate(poly.c):
            coeffs[k] = coeffs[k] + a
    f = UPoly(coeffs)
    if f.is_zero():
        raise LineInCurveError("the line lies on the curve")
    pts = [
        PPoint(tuple(a + s * b for a, b in zip(start.coords, base.coords)))
        for s in roots_in_K(f)
    ]
    if not evaluate(curve, base.coords):
        pts.append(base)
    return sorted(set(pts), key=PPoint.sort_key)


def _any_point_on(line: Line) -> PPoint:
    for i in range(3):
        axis = [ZERO, ZERO, ZERO]
        axis[i] = ONE
        q = cross(line.coords, axis)
        if any(q):
            return PPoint(q)
    raise ValueError("degenerate line")


@dataclass(frozen=True)
class CubicGroup:
    """Points of a smooth cubic with the law p + q = O*(p*q)."""

    curve: Form
    O: PPoint

    def __post_init__(self):
        if evaluate(self.curve, self.O.coords):
            raise NotOnCurveError("the zero point is not on the curve")

    def chord(self, p: PPoint, q: PPoint) -> PPoint:
        return third_intersection(self.curve, None, p, q)

    def add(self, p: PPoint, q: PPoint) -> PPoint:
        return self.chord(self.O, self.chord(p, q))

    def neg(self, p: PPoint) -> PPoint:
        return self.chord(p, self.chord(self.O, self.O))

    def scalar_multiple(self, n: int, p: PPoint) -> PPoint:
        if n < 0:
            return self.scalar_multiple(-n, self.neg(p))
        result = self.O
        addend = p
        while n:
            if n & 1:
                result = self.add(result, addend)
            n >>= 1
            if n:
                addend = self.add(addend, addend)
        return result

    def is_flex(self, p: PPoint) -> bool:
        return not evaluate(hessian_det(self.curve), p.coords)


def two_torsion(G: CubicGroup) -> list[PPoint]:
    """O and the three points whose tangent passes through the flex O.

    Those three are the intersections of the curve with the harmonic polar of
    O, the second factor of the polar conic of O.
    """
    if not G.is_flex(G.O):
        raise ValueError("two_torsion needs a flex as zero point")
    tangent = Form.linear(*gradient(G.curve, G.O.coords))
    polar = Form.zero(2)
    for i in range(3):
        if G.O[i]:
            polar = polar + G.curve.partial(i).scale(G.O[i])
    harmonic = polar.divide_exact(tangent)
    pts = line_points(G.curve, Line(harmonic.coeffs()))
    return [G.O] + sorted(pts, key=PPoint.sort_key)


def flexes_of(curve: Form) -> list[PPoint]:
    """Flexes of a cubic whose Hessian splits into coordinate-type lines.

    Only used for x^3 + y^3 - z^3, whose Hessian is a multiple of xyz.
    """
    hess = hessian_det(curve)
    xyz = parse_form("x*y*z")
    if not hess.proportional(xyz):
        raise ValueError("unsupported curve: Hessian is not a coordinate triangle")
    pts = set()
    for line in (Line(1, 0, 0), Line(0, 1, 0), Line(0, 0, 1)):
        pts.update(line_points(curve, line))
    return sorted(pts, key=PPoint.sort_key)


def six_torsion(G: CubicGroup) -> list[PPoint]:
    """The 36 sums of the 9 flexes and the 4 two-torsion points."""
    if not (G.curve.proportional(TORSION_CURVE) and G.O == TORSION_ORIGIN):
        raise ValueError("six_torsion supports x^3+y^3-z^3 with zero (1,0,1) only")
    flexes = flexes_of(G.curve)
    two = two_torsion(G)
    pts = {G.add(f, t) for f in flexes for t in two}
    return sorted(pts, key=PPoint.sort_key)
