"""Points, lines and tangent directions in P^2(K); local intersection numbers."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .numfield import ONE, ZERO, KElem, kelem_to_json, to_kelem
from .polyring import CommonFactorError, Form, evaluate, gradient

__all__ = [
    "PPoint",
    "Line",
    "Direction",
    "INF",
    "cross",
    "line_through",
    "meet",
    "tangent_line",
    "tangent_direction",
    "direction_of_line",
    "mobius_from_marking",
    "intersection_multiplicity",
    "NotOnCurveError",
    "SingularPointError",
]

# distinguished parameter value for infinity on a P^1
INF = "inf"


class NotOnCurveError(ValueError):
    pass


class SingularPointError(ValueError):
    pass


def _canonical(coords: Sequence) -> tuple[KElem, KElem, KElem]:
    c = [to_kelem(a) for a in coords]
    if len(c) != 3:
        raise ValueError("need three homogeneous coordinates")
    for a in c:
        if a:
            inv = a.inverse()
            return tuple(x * inv for x in c)
    raise ValueError("all coordinates are zero")


class _Homogeneous:
    """A triple of KElems up to scalar, stored with first nonzero entry 1."""

    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        self.coords = _canonical(coords)

    def __getstate__(self):
        return self.coords

    def __setstate__(self, state):
        self.coords = state

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def sort_key(self):
        return tuple(a.sort_key() for a in self.coords)

    def to_json(self):
        return [kelem_to_json(a) for a in self.coords]

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(a) for a in self.coords)})"


class PPoint(_Homogeneous):
    """Point of P^2(K)."""

    __slots__ = ()


class Line(_Homogeneous):
    """Line a x + b y + c z = 0."""

    __slots__ = ()

    def form(self) -> Form:
        return Form.linear(*self.coords)

    def contains(self, p: PPoint) -> bool:
        return not sum((a * c for a, c in zip(self.coords, p.coords)), ZERO)


def cross(u: Sequence[KElem], v: Sequence[KElem]) -> tuple[KElem, KElem, KElem]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def line_through(p: PPoint, q: PPoint) -> Line:
    if p == q:
        raise ValueError("line_through needs two distinct points")
    return Line(cross(p.coords, q.coords))


def meet(l1: Line, l2: Line) -> PPoint:
    if l1 == l2:
        raise ValueError("the lines coincide")
    return PPoint(cross(l1.coords, l2.coords))


@dataclass(frozen=True)
class Direction:
    """A line through ``base``, recorded by where it meets the reference line
    x_ref = 0 (the first coordinate line missing the base point).  ``chart``
    holds the two remaining coordinates of that meeting point, normalised."""

    base: PPoint
    chart: tuple[KElem, KElem]

    @property
    def ref(self) -> int:
        return _reference_axis(self.base)

    def line(self) -> Line:
        q = [ZERO, ZERO, ZERO]
        rest = [i for i in range(3) if i != self.ref]
        q[rest[0]], q[rest[1]] = self.chart
        return line_through(self.base, PPoint(q))

    def to_json(self):
        return {"base": self.base.to_json(), "chart": [kelem_to_json(a) for a in self.chart]}


def _reference_axis(p: PPoint) -> int:
    return next(i for i in range(3) if p[i])


def _normalize_pair(a: KElem, b: KElem) -> tuple[KElem, KElem]:
    if a:
        return (ONE, b / a)
    if b:
        return (ZERO, ONE)
    raise ValueError("degenerate pair")


def direction_of_line(p: PPoint, line: Line) -> Direction:
    if not line.contains(p):
        raise ValueError("line does not pass through the base point")
    ref = _reference_axis(p)
    axis = [ZERO, ZERO, ZERO]
    axis[ref] = ONE
    q = cross(line.coords, axis)
    rest = [i for i in range(3) if i != ref]
    return Direction(p, _normalize_pair(q[rest[0]], q[rest[1]]))


def tangent_line(C: Form, p: PPoint) -> Line:
    if evaluate(C, p.coords):
        raise NotOnCurveError(f"{p!r} is not on the curve")
    g = gradient(C, p.coords)
    if not any(g):
        raise SingularPointError(f"{p!r} is a singular point of the curve")
    return Line(g)


def tangent_direction(C: Form, p: PPoint) -> Direction:
    return direction_of_line(p, tangent_line(C, p))


def mobius_from_marking(
    m0: Direction, m1: Direction, minf: Direction
) -> Callable[[Direction], KElem | str]:
    """Projective coordinate u on the pencil of lines through the common base
    point with u(m0) = 0, u(m1) = 1, u(minf) = INF."""
    if not (m0.base == m1.base == minf.base):
        raise ValueError("marked directions have different base points")
    if len({m0.chart, m1.chart, minf.chart}) != 3:
        raise ValueError("marked directions must be distinct")

    def det(d, m):
        return d[0] * m[1] - d[1] * m[0]

    k = det(m1.chart, minf.chart) / det(m1.chart, m0.chart)

    def u(d: Direction):
        if d.base != m0.base:
            raise ValueError("direction has a different base point")
        den = det(d.chart, minf.chart)
        if not den:
            return INF
        return det(d.chart, m0.chart) / den * k

    return u


# ---------------------------------------------------------------------------
# Fulton's algorithm


def _local_poly(F: Form, p: PPoint) -> dict:
    """Affine equation of F near p, translated so that p is the origin.
    Returns {(i, j): c} in local variables (s, t)."""
    k = _reference_axis(p)
    pc = [a / p[k] for a in p.coords]
    rest = [i for i in range(3) if i != k]
    # F(X) with X_k = 1, X_rest = pc_rest + (s, t)
    shifts = (pc[rest[0]], pc[rest[1]])
    out: dict = {}
    for m, c in F.terms.items():
        a, b = m[rest[0]], m[rest[1]]
        # (shift0 + s)^a (shift1 + t)^b
        for i in range(a + 1):
            ci = comb(a, i) * shifts[0] ** (a - i)
            if not ci:
                continue
            for j in range(b + 1):
                cj = comb(b, j) * shifts[1] ** (b - j)
                if not cj:
                    continue
                v = c * ci * cj
                out[(i, j)] = out[(i, j)] + v if (i, j) in out else v
    return {k_: v for k_, v in out.items() if v}


def _restrict_x(F: dict) -> dict:
    """F(s, 0) as {i: c}."""
    return {i: c for (i, j), c in F.items() if j == 0}


def _deg(u: dict):
    return max(u) if u else None


def _fulton(F: dict, G: dict) -> int:
    total = 0
    while True:
        if not F or not G:
            raise CommonFactorError("curves share a component through the point")
        if F.get((0, 0)) or G.get((0, 0)):
            return total
        fx, gx = _restrict_x(F), _restrict_x(G)
        r, s = _deg(fx), _deg(gx)
        if r is None and s is None:
            raise CommonFactorError("curves share a component through the point")
        if r is None or (s is not None and s < r):
            F, G, fx, gx, r, s = G, F, gx, fx, s, r
        # now r is finite and r <= s (s may be None for infinity)
        if s is None:
            # G = t * H; I(F, t) = order of F(s, 0) at 0
            total += min(fx)
            G = {(i, j - 1): c for (i, j), c in G.items()}
            continue
        factor = gx[s] / fx[r]
        shift = s - r
        newg = dict(G)
        for (i, j), c in F.items():
            key = (i + shift, j)
            v = newg.get(key, ZERO) - factor * c
            if v:
                newg[key] = v
            else:
                newg.pop(key, None)
        G = newg


def intersection_multiplicity(C1: Form, C2: Form, p: PPoint) -> int:
    """Local intersection number of two plane curves at a K-rational point."""
    return _fulton(_local_poly(C1, p), _local_poly(C2, p))
