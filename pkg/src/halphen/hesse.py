"""The Hesse configuration in standard form and the four singular point pencils.

Pencil ids are "v", "h", "delta", "gamma"; the vertices of each triangle carry
the labels 0, 1 and INF.  A line of the dual Hesse arrangement is labelled by
the 4-tuple (u_v, u_h, u_delta, u_gamma) of the vertices it passes through.
"""

from __future__ import annotations

from itertools import combinations

from .certificate import Certificate
from .numfield import EPS, ONE, to_kelem
from .plane import INF, Line, PPoint
from .polyring import Form, evaluate, gradient, hessian_det, parse_form

__all__ = [
    "PENCILS",
    "LABELS",
    "VERTICES",
    "LINES",
    "FLEXES",
    "FERMAT",
    "TRIANGLES",
    "SINGULAR_MEMBERS",
    "PRINTED_SINGULAR_MEMBERS",
    "vertex",
    "base_points",
    "lines_through_vertex",
    "pencil_member",
    "verify_dual_hesse",
    "verify_flexes",
    "verify_pencils",
    "verify_printed_members",
    "polar_conic",
    "harmonic_polar",
]

PENCILS = ("v", "h", "delta", "gamma")
LABELS = (0, 1, INF)

_E, _E2 = EPS, EPS * EPS

VERTICES: dict[tuple[str, object], PPoint] = {
    ("v", 0): PPoint(1, 0, 0),
    ("v", 1): PPoint(0, 1, 0),
    ("v", INF): PPoint(0, 0, 1),
    ("h", 0): PPoint(1, 1, 1),
    ("h", 1): PPoint(1, _E, _E2),
    ("h", INF): PPoint(1, _E2, _E),
    ("delta", 0): PPoint(_E, 1, 1),
    ("delta", 1): PPoint(1, _E, 1),
    ("delta", INF): PPoint(1, 1, _E),
    ("gamma", 0): PPoint(_E2, 1, 1),
    ("gamma", 1): PPoint(1, _E2, 1),
    ("gamma", INF): PPoint(1, 1, _E2),
}

# Harmonic polars.  The line z - e*x passes through gamma_0 (not gamma_1),
# so its label here is (1, INF, INF, 0).
_LINE_TABLE = [
    ((0, 0, 0, 0), "z-y"),
    ((0, 1, INF, 1), "z-e*y"),
    ((0, INF, 1, INF), "e*z-y"),
    ((1, 0, 1, 1), "z-x"),
    ((1, 1, 0, INF), "e*z-x"),
    ((1, INF, INF, 0), "z-e*x"),
    ((INF, 0, INF, INF), "y-x"),
    ((INF, 1, 1, 0), "y-e*x"),
    ((INF, INF, 0, 1), "e*y-x"),
]
LINES: dict[tuple, Line] = {
    label: Line(parse_form(text).coeffs()) for label, text in _LINE_TABLE
}
_LINE_FORMS = {label: parse_form(text) for label, text in _LINE_TABLE}

FERMAT = parse_form("x^3+y^3+z^3")

FLEXES: list[PPoint] = sorted(
    {
        PPoint(c)
        for w in (ONE, _E, _E2)
        for c in ((-1, w, 0), (-1, 0, w), (0, -1, w))
    },
    key=PPoint.sort_key,
)

TRIANGLES: dict[str, Form] = {
    "v": parse_form("x*y*z"),
    "h": parse_form("x^3+y^3+z^3-3*x*y*z"),
    "delta": parse_form("x^3+y^3+z^3-3*e^2*x*y*z"),
    "gamma": parse_form("x^3+y^3+z^3-3*e*x*y*z"),
}

_SCALE = {"v": _E2, "h": ONE, "delta": ONE, "gamma": ONE}
_SIGN = {0: 1, 1: -1, INF: 1}


def lines_through_vertex(t: str, u) -> list[tuple]:
    k = PENCILS.index(t)
    return sorted((lab for lab in LINES if lab[k] == u), key=str)


def _singular_member(t: str, u) -> Form:
    """scale * sign * (product of the three harmonic polars through t_u)."""
    sign = 1 if t == "v" else _SIGN[u]
    f = Form({(0, 0, 0): _SCALE[t] * sign}, 0)
    for lab in lines_through_vertex(t, u):
        f = f * _LINE_FORMS[lab]
    return f


SINGULAR_MEMBERS: dict[tuple[str, object], Form] = {
    (t, u): _singular_member(t, u) for t in PENCILS for u in LABELS
}

# Expansions as typeset next to each product; kept as data for the label audit.
PRINTED_SINGULAR_MEMBERS: dict[tuple[str, object], Form] = {
    ("v", 0): parse_form("z^3-y^3"),
    ("v", 1): parse_form("z^3-x^3"),
    ("v", INF): parse_form("y^3-x^3"),
    ("h", 0): parse_form("-x^2*y+x*y^2+x^2*z-y^2*z-x*z^2+y*z^2"),
    ("h", 1): parse_form("e^2*(x^2*y-e^2*x*y^2-e^2*x^2*z+y^2*z+x*z^2-e^2*y*z^2)"),
    ("h", INF): parse_form("-e*(x^2*y-e*x*y^2-e*x^2*z+y^2*z+x*z^2-e*y*z^2)"),
    ("delta", 0): parse_form("-x^2*y+e*x*y^2+x^2*z-e^2*y^2*z-e*x*z^2+e^2*y*z^2"),
    ("delta", 1): parse_form("e^2*(x^2*y-x*y^2-e^2*x^2*z+e^2*y^2*z+e*x*z^2-e*y*z^2)"),
    ("delta", INF): parse_form("-e*(x^2*y-e^2*x*y^2-e*x^2*z+e^2*y^2*z+e*x*z^2-y*z^2)"),
    ("gamma", 0): parse_form("-x^2*y+x*y^2+e*x^2*z-e*y^2*z-e^2*x*z^2+e^2*y*z^2"),
    ("gamma", 1): parse_form("e^2*(x^2*y-e^2*x*y^2-x^2*z+e*y^2*z+e^2*x*z^2-e*y*z^2)"),
    ("gamma", INF): parse_form("-e*(x^2*y-e*x*y^2-e^2*x^2*z+e*y^2*z+e^2*x*z^2-y*z^2)"),
}


def vertex(t: str, u) -> PPoint:
    return VERTICES[(t, u)]


def base_points(t: str) -> list[PPoint]:
    """Lambda_t: the 9 vertices not on the triangle T_t."""
    return [p for (s, _), p in VERTICES.items() if s != t]


def pencil_member(t: str, u) -> Form:
    """C_{t_0} + u C_{t_inf}; u = INF gives C_{t_inf}."""
    if t not in PENCILS:
        raise ValueError(f"unknown pencil {t!r}")
    if u == INF:
        return SINGULAR_MEMBERS[(t, INF)]
    return SINGULAR_MEMBERS[(t, 0)] + SINGULAR_MEMBERS[(t, INF)].scale(to_kelem(u))


# ---------------------------------------------------------------------------
# verification


def verify_dual_hesse() -> Certificate:
    cert = Certificate("hesse verify: dual Hesse arrangement")
    incidences = 0
    for lab, line in LINES.items():
        on = sorted((k for k, p in VERTICES.items() if line.contains(p)), key=str)
        incidences += len(on)
        expected = sorted(((t, u) for t, u in zip(PENCILS, lab)), key=str)
        cert.check(f"line {lab} vertices", on == expected, [str(k) for k in on])
    for key, p in VERTICES.items():
        n = sum(1 for line in LINES.values() if line.contains(p))
        cert.check(f"vertex {key} on 3 lines", n == 3, n)
    cert.check("incidence total 36", incidences == 36, incidences)
    for t in PENCILS:
        for u in LABELS:
            cert.check(
                f"vertex {t}_{u} is a triangle vertex",
                not any(gradient(TRIANGLES[t], vertex(t, u).coords)),
            )
    cert.data["incidences"] = incidences
    return cert


def verify_flexes() -> Certificate:
    cert = Certificate("hesse verify: flexes")
    hess = hessian_det(FERMAT)
    cert.check("nine distinct flexes", len(FLEXES) == 9, len(FLEXES))
    for p in FLEXES:
        cert.check(f"flex {p} on Fermat", not evaluate(FERMAT, p.coords))
        cert.check(f"flex {p} on Hessian", not evaluate(hess, p.coords))
    for t, tri in TRIANGLES.items():
        cert.check(
            f"triangle {t} contains all flexes",
            all(not evaluate(tri, p.coords) for p in FLEXES),
        )
    polars = {harmonic_polar(p) for p in FLEXES}
    cert.check("harmonic polars are the 9 lines", polars == set(LINES.values()))
    return cert


def verify_pencils() -> Certificate:
    cert = Certificate("hesse verify: pencils")
    for t in PENCILS:
        s = SINGULAR_MEMBERS
        cert.check(f"{t}: C0 + Cinf = C1", s[(t, 0)] + s[(t, INF)] == s[(t, 1)])
        for u in LABELS:
            f = s[(t, u)]
            cert.check(
                f"{t}_{u}: vanishes on base points",
                all(not evaluate(f, p.coords) for p in base_points(t)),
            )
            p = vertex(t, u).coords
            second = all(
                not evaluate(f.partial(i).partial(j), p) for i in range(3) for j in range(3)
            )
            cert.check(f"{t}_{u}: triple point at vertex", not any(gradient(f, p)) and second)
    for t1, t2 in combinations(PENCILS, 2):
        shared = set(base_points(t1)) & set(base_points(t2))
        cert.check(f"{t1},{t2} share 6 base points", len(shared) == 6, len(shared))
    return cert


def verify_printed_members() -> dict:
    """For each typeset expansion, the vertex where it is singular and whether
    it agrees up to scalar with the product definition of that label."""
    out = {}
    for key, f in PRINTED_SINGULAR_MEMBERS.items():
        sing = [k for k, p in VERTICES.items() if not any(gradient(f, p.coords))]
        out[key] = {
            "singular_at": sing,
            "matches_definition": f.proportional(SINGULAR_MEMBERS[key]),
        }
    return out


def polar_conic(C: Form, p: PPoint) -> Form:
    """First polar p0 C_x + p1 C_y + p2 C_z."""
    out = Form.zero(C.degree - 1)
    for i in range(3):
        if p[i]:
            out = out + C.partial(i).scale(p[i])
    return out


def harmonic_polar(p: PPoint, C: Form = FERMAT) -> Line:
    """The line through a flex p that, with the tangent, makes up the polar conic."""
    g = gradient(C, p.coords)
    tangent = Form.linear(*g)
    rest = polar_conic(C, p).divide_exact(tangent)
    return Line(rest.coeffs())
