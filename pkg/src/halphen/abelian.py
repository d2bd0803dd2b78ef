"""Explicit calculus on A = T x T with T = C / Z[zeta], zeta = exp(2 pi i / 6).

Only torsion points are handled, so everything is exact: an Eisenstein
number a + c*zeta has rational a, c, and a torus point is such a number
reduced modulo the lattice Z[zeta] (coordinates in [0, 1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor, lcm

from .certificate import Certificate
from .hesse import VERTICES
from .numfield import EPS, ONE, ZERO
from .plane import PPoint, cross
from .polyring import UPoly, determinant, interpolate, roots_in_K

__all__ = [
    "Eisenstein",
    "ZETA",
    "ZETA_BAR",
    "TorusPoint",
    "APoint",
    "fixed_point",
    "sigma_apply",
    "sigma_fixed_points",
    "PhiMatrix",
    "phi",
    "psi",
    "kernel_check",
    "CurveClass",
    "CLASSES",
    "curve_membership",
    "curve_intersect_torsion",
    "intersection_number",
    "class_square",
    "theta_matrices",
    "eigen_points",
    "labelled_eigen_points",
    "translates",
    "n_curves",
    "verify_abelian",
]


@dataclass(frozen=True)
class Eisenstein:
    """a + c*zeta with zeta^2 = zeta - 1."""

    a: Fraction = Fraction(0)
    c: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "c", Fraction(self.c))

    @staticmethod
    def coerce(v) -> "Eisenstein":
        return v if isinstance(v, Eisenstein) else Eisenstein(v, 0)

    def __add__(self, other):
        o = Eisenstein.coerce(other)
        return Eisenstein(self.a + o.a, self.c + o.c)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.a, -self.c)

    def __sub__(self, other):
        return self + (-Eisenstein.coerce(other))

    def __rsub__(self, other):
        return Eisenstein.coerce(other) - self

    def __mul__(self, other):
        o = Eisenstein.coerce(other)
        cc = self.c * o.c
        return Eisenstein(self.a * o.a - cc, self.a * o.c + self.c * o.a + cc)

    __rmul__ = __mul__

    def conj(self) -> "Eisenstein":
        # conj(zeta) = 1 - zeta
        return Eisenstein(self.a + self.c, -self.c)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.c + self.c * self.c

    def inverse(self) -> "Eisenstein":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        cj = self.conj()
        return Eisenstein(cj.a / n, cj.c / n)

    def __truediv__(self, other):
        return self * Eisenstein.coerce(other).inverse()

    def __bool__(self):
        return bool(self.a or self.c)

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.c.denominator == 1

    def reduce(self) -> "Eisenstein":
        """Representative modulo Z[zeta] with coordinates in [0, 1)."""
        return Eisenstein(self.a - floor(self.a), self.c - floor(self.c))

    def round(self) -> "Eisenstein":
        """A nearest lattice point, for Euclidean division."""
        a, c = round(self.a), round(self.c)
        best = None
        for da, dc in product((-1, 0, 1), repeat=2):
            cand = Eisenstein(a + da, c + dc)
            d = (self - cand).norm()
            if best is None or d < best[0]:
                best = (d, cand)
        return best[1]

    def denominator(self) -> int:
        return lcm(self.a.denominator, self.c.denominator)

    def __repr__(self):
        return f"Eisenstein({self.a}, {self.c})"

    def __str__(self):
        if not self.c:
            return str(self.a)
        zc = "zeta" if self.c == 1 else f"{self.c}*zeta"
        return zc if not self.a else f"{self.a}+{zc}".replace("+-", "-")


ZETA = Eisenstein(0, 1)
ZETA_BAR = ZETA.conj()
E0 = Eisenstein(0, 0)
E1 = Eisenstein(1, 0)


def TorusPoint(a, c=0) -> Eisenstein:
    """A point of T, the reduced representative of a + c*zeta."""
    return Eisenstein(a, c).reduce()


@dataclass(frozen=True)
class APoint:
    x: Eisenstein
    y: Eisenstein

    def __post_init__(self):
        object.__setattr__(self, "x", Eisenstein.coerce(self.x).reduce())
        object.__setattr__(self, "y", Eisenstein.coerce(self.y).reduce())

    def __add__(self, other: "APoint") -> "APoint":
        return APoint(self.x + other.x, self.y + other.y)

    def __neg__(self) -> "APoint":
        return APoint(-self.x, -self.y)

    def __sub__(self, other: "APoint") -> "APoint":
        return self + (-other)

    def is_zero(self) -> bool:
        return not (self.x or self.y)

    def __str__(self):
        return f"({self.x}, {self.y})"


ORIGIN = APoint(E0, E0)


def _p(i: int) -> Eisenstein:
    return TorusPoint(Fraction(i, 3), Fraction(i, 3))


def fixed_point(i: int, j: int) -> APoint:
    """p_ij = (i/3 + i/3 zeta, j/3 + j/3 zeta)."""
    return APoint(_p(i), _p(j))


def sigma_apply(p: APoint) -> APoint:
    z2 = ZETA * ZETA
    return APoint(z2 * p.x, z2 * p.y)


def sigma_fixed_points() -> list[APoint]:
    """Fixed points of sigma among the 3-division points (it has exactly 9)."""
    pts = []
    thirds = [Fraction(k, 3) for k in range(3)]
    for a1, c1, a2, c2 in product(thirds, repeat=4):
        p = APoint(Eisenstein(a1, c1), Eisenstein(a2, c2))
        if sigma_apply(p) == p:
            pts.append(p)
    return pts


# ---------------------------------------------------------------------------
# analytic representations


@dataclass(frozen=True)
class PhiMatrix:
    rows: tuple

    @classmethod
    def of(cls, rows) -> "PhiMatrix":
        return cls(tuple(tuple(Eisenstein.coerce(v) for v in r) for r in rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return PhiMatrix.of([[self[i, j] + other[i, j] for j in range(2)] for i in range(2)])

    def __sub__(self, other):
        return PhiMatrix.of([[self[i, j] - other[i, j] for j in range(2)] for i in range(2)])

    def __matmul__(self, other):
        return PhiMatrix.of(
            [[self[i, 0] * other[0, j] + self[i, 1] * other[1, j] for j in range(2)] for i in range(2)]
        )

    def det(self) -> Eisenstein:
        return self[0, 0] * self[1, 1] - self[0, 1] * self[1, 0]

    def inverse(self) -> "PhiMatrix":
        d = self.det().inverse()
        return PhiMatrix.of([[self[1, 1] * d, -self[0, 1] * d], [-self[1, 0] * d, self[0, 0] * d]])

    def preserves_lattice(self) -> bool:
        return all(v.is_integral() for r in self.rows for v in r)

    def apply(self, p: APoint) -> APoint:
        """Action on A; well defined when the entries are integral."""
        return APoint(self[0, 0] * p.x + self[0, 1] * p.y, self[1, 0] * p.x + self[1, 1] * p.y)

    def apply_vector(self, x: Eisenstein, y: Eisenstein) -> tuple[Eisenstein, Eisenstein]:
        """Action on C^2 (no reduction)."""
        return (self[0, 0] * x + self[0, 1] * y, self[1, 0] * x + self[1, 1] * y)


_PHI = {
    "V": PhiMatrix.of([[1, 0], [0, 0]]),
    "H": PhiMatrix.of([[0, 0], [0, 1]]),
    "Delta": PhiMatrix.of([[1, -1], [-1, 1]]),
    "Gamma": PhiMatrix.of([[1, -ZETA_BAR], [-ZETA, 1]]),
    "Delta+Gamma": PhiMatrix.of([[2, -1 - ZETA_BAR], [-1 - ZETA, 2]]),
    "M": PhiMatrix.of([[3, -1 - ZETA_BAR], [-1 - ZETA, 3]]),
    "N": PhiMatrix.of([[1, -1 - ZETA_BAR], [-1 - ZETA, 3]]),
}
_PHI_ALIASES = {"Δ": "Delta", "Γ": "Gamma", "Δ+Γ": "Delta+Gamma", "D": "Delta", "G": "Gamma"}

# analytic representations of g(x, y) = (x, y - x), h(x, y) = (x, y - zeta x)
# and their duals
G_MAP = PhiMatrix.of([[1, 0], [-1, 1]])
G_HAT = PhiMatrix.of([[1, -1], [0, 1]])
H_MAP = PhiMatrix.of([[1, 0], [-ZETA, 1]])
H_HAT = PhiMatrix.of([[1, -ZETA_BAR], [0, 1]])


def phi(label: str) -> PhiMatrix:
    key = _PHI_ALIASES.get(label, label)
    if key not in _PHI:
        raise KeyError(f"unknown label {label!r}")
    return _PHI[key]


def psi(x: APoint, y: APoint) -> APoint:
    """The unique z with t_x^*V + t_y^*H + t_z^*(Delta+Gamma) linearly
    equivalent to V + H + Delta + Gamma."""
    return APoint(
        -2 * x.x - (1 + ZETA_BAR) * y.y,
        -(1 + ZETA) * x.x - 2 * y.y,
    )


def psi_identity_holds(x: APoint, y: APoint) -> bool:
    """phi_V(x) + phi_H(y) + phi_{Delta+Gamma}(psi(x, y)) = 0 on A."""
    total = phi("V").apply(x) + phi("H").apply(y) + phi("Delta+Gamma").apply(psi(x, y))
    return total.is_zero()


def kernel_check(p: APoint) -> bool:
    """True iff phi_M(p) vanishes on A, i.e. p lies in K(M)."""
    x, y = phi("M").apply_vector(p.x, p.y)
    return x.is_integral() and y.is_integral()


# ---------------------------------------------------------------------------
# elliptic curves on A


@dataclass(frozen=True)
class CurveClass:
    """The curve {(lam*x, mu*x) : x in T} translated by ``shift``."""

    lam: Eisenstein
    mu: Eisenstein
    shift: APoint = ORIGIN
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "lam", Eisenstein.coerce(self.lam))
        object.__setattr__(self, "mu", Eisenstein.coerce(self.mu))
        if not (self.lam or self.mu):
            raise ValueError("(lam, mu) must not be (0, 0)")

    def translate(self, p: APoint, name: str = "") -> "CurveClass":
        return CurveClass(self.lam, self.mu, self.shift + p, name)

    def point(self, x: Eisenstein) -> APoint:
        return APoint(self.lam * x, self.mu * x) + self.shift

    def same_class(self, other: "CurveClass") -> bool:
        return not (self.lam * other.mu - self.mu * other.lam)


CLASSES = {
    "V": CurveClass(E0, E1, name="V"),
    "H": CurveClass(E1, E0, name="H"),
    "Delta": CurveClass(E1, E1, name="Delta"),
    "Gamma": CurveClass(E1, ZETA, name="Gamma"),
    "N": CurveClass(1 + ZETA, ZETA, name="N"),
}


def _xgcd(a: Eisenstein, b: Eisenstein) -> tuple[Eisenstein, Eisenstein, Eisenstein]:
    """g, s, t with s*a + t*b = g, a gcd in Z[zeta]."""
    r0, r1 = a, b
    s0, s1, t0, t1 = E1, E0, E0, E1
    while r1:
        q = (r0 / r1).round()
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def curve_membership(C: CurveClass, p: APoint, bound: int | None = None) -> bool:
    """Whether p lies on C (p a torsion point)."""
    u = p - C.shift
    g, s, t = _xgcd(C.lam, C.mu)
    if g.norm() == 1:
        # x is forced: x = (s*u1 + t*u2) / g
        x = (s * u.x + t * u.y) / g
        return C.point(x) == p
    # non-primitive class: search x over a bounded denominator
    d = bound or lcm(u.x.denominator(), u.y.denominator()) * int(g.norm())
    return any(C.point(x) == p for x in _division_points(d))


def _division_points(d: int):
    for a, c in product(range(d), repeat=2):
        yield Eisenstein(Fraction(a, d), Fraction(c, d))


def curve_intersect_torsion(C1: CurveClass, C2: CurveClass, bound: int = 6) -> set[APoint]:
    """Points of C1 ∩ C2 whose parameter on C1 has denominator dividing ``bound``."""
    if C1.same_class(C2):
        raise ValueError("parallel classes: the curves are equal or disjoint")
    return {C1.point(x) for x in _division_points(bound) if curve_membership(C2, C1.point(x))}


def intersection_number(C1: CurveClass, C2: CurveClass) -> int:
    n = (C1.lam * C2.mu - C1.mu * C2.lam).norm()
    assert n.denominator == 1
    return int(n)


def class_square(terms) -> int:
    """Self-intersection of a formal sum given as [(coefficient, CurveClass)]."""
    terms = list(terms)
    return sum(a * b * intersection_number(c1, c2) for a, c1 in terms for b, c2 in terms)


# the twelve translates by fixed points
def translates() -> dict[str, CurveClass]:
    out = {}
    for i in range(3):
        out[f"V{i}"] = CLASSES["V"].translate(fixed_point(i, 0), f"V{i}")
        out[f"H{i}"] = CLASSES["H"].translate(fixed_point(0, i), f"H{i}")
        out[f"Delta{i}"] = CLASSES["Delta"].translate(fixed_point(i, 2 * i % 3), f"Delta{i}")
        out[f"Gamma{i}"] = CLASSES["Gamma"].translate(fixed_point(i, i), f"Gamma{i}")
    return out


def n_curves() -> dict[str, CurveClass]:
    N = CLASSES["N"]
    return {
        "N12": N.translate(ORIGIN, "N12"),
        # N + p10 as a set, i.e. the pullback of N under translation by p20
        "N02": N.translate(fixed_point(1, 0), "N02"),
        "N01": N.translate(fixed_point(2, 0), "N01"),
    }


# ---------------------------------------------------------------------------
# theta group in P^2


def _matmul3(A, B):
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(3)), ZERO) for j in range(3)) for i in range(3)
    )


def theta_matrices() -> dict[str, tuple]:
    z, o = ZERO, ONE
    e2 = EPS * EPS
    M10 = ((z, z, o), (o, z, z), (z, o, z))
    M01 = ((o, z, z), (z, EPS, z), (z, z, e2))
    return {
        "M10": M10,
        "M01": M01,
        "M11": _matmul3(M10, M01),
        "M12": _matmul3(_matmul3(M01, M01), M10),
    }


def _charpoly(M) -> UPoly:
    xs = list(range(4))
    ys = []
    for t in xs:
        ys.append(determinant([[M[i][j] - (t if i == j else 0) for j in range(3)] for i in range(3)]))
    return interpolate(xs, ys)


def eigen_points(M) -> list[PPoint]:
    """Eigen-points of a 3x3 matrix over K with simple eigenvalues in K."""
    pts = []
    for lam in roots_in_K(_charpoly(M)):
        A = [[M[i][j] - (lam if i == j else ZERO) for j in range(3)] for i in range(3)]
        for r1, r2 in ((0, 1), (0, 2), (1, 2)):
            v = cross(A[r1], A[r2])
            if any(v):
                pts.append(PPoint(v))
                break
    return pts


def _collinear(p: PPoint, q: PPoint, r: PPoint) -> bool:
    return not determinant([list(p.coords), list(q.coords), list(r.coords)])


def labelled_eigen_points() -> dict[str, list[PPoint]]:
    """Eigen-points of M10, M11, M12; for M11 and M12 the point collinear
    with v0 and h0 comes first."""
    Ms = theta_matrices()
    v0, h0 = PPoint(1, 0, 0), PPoint(1, 1, 1)
    out = {}
    for name, key in (("h", "M10"), ("delta", "M11"), ("gamma", "M12")):
        pts = sorted(eigen_points(Ms[key]), key=PPoint.sort_key)
        if name == "h":
            first = [p for p in pts if p == h0]
        else:
            first = [p for p in pts if _collinear(v0, h0, p)]
        if len(first) != 1:
            raise ArithmeticError(f"no unique first eigen-point for {key}")
        out[name] = first + [p for p in pts if p != first[0]]
    return out


# ---------------------------------------------------------------------------
# certificate


def verify_abelian() -> Certificate:
    cert = Certificate("abelian verify")
    fixed = sigma_fixed_points()
    pij = {(i, j): fixed_point(i, j) for i in range(3) for j in range(3)}
    cert.check("sigma has 9 fixed points p_ij", set(fixed) == set(pij.values()) and len(fixed) == 9)
    cert.check("fixed points form a subgroup", all(p + q in set(fixed) for p in fixed for q in fixed))
    cert.check("p10 + p20 = p00", pij[1, 0] + pij[2, 0] == pij[0, 0])

    V, H, D, G = (phi(k) for k in ("V", "H", "Delta", "Gamma"))
    cert.check("phi_{Delta+Gamma} = phi_Delta + phi_Gamma", phi("Delta+Gamma") == D + G)
    cert.check("phi_M = phi_V + phi_H + phi_Delta + phi_Gamma", phi("M") == V + H + D + G)
    cert.check("phi_N = phi_H + phi_Delta + phi_Gamma - phi_V", phi("N") == H + D + G - V)
    cert.check("phi_{Delta+Gamma} is invertible (det 1)", phi("Delta+Gamma").det() == E1)
    cert.check("phi_Delta = g^ phi_H g", G_HAT @ H @ G_MAP == D)
    cert.check("phi_Gamma = h^ phi_H h", H_HAT @ H @ H_MAP == G)

    cert.check(
        "psi(p_ij, p_kl) = p_il for all 81 pairs",
        all(psi(pij[i, j], pij[k, l]) == pij[i, l] for i, j, k, l in product(range(3), repeat=4)),
    )
    six = [Eisenstein(Fraction(a, 6), Fraction(c, 6)) for a, c in product(range(6), repeat=2)]
    pts6 = [APoint(x, y) for x, y in product(six[::5], six[::7])]
    cert.check(
        "psi identity on 6-division points",
        all(psi_identity_holds(x, y) for x in pts6 for y in pts6),
    )
    cert.check("all 9 fixed points lie in K(M)", all(kernel_check(p) for p in fixed))
    cert.check("(1/2, 0) is not in K(M)", not kernel_check(APoint(Fraction(1, 2), 0)))

    C = CLASSES
    expected = {
        ("V", "H"): 1, ("V", "Delta"): 1, ("V", "Gamma"): 1, ("H", "Delta"): 1,
        ("H", "Gamma"): 1, ("Delta", "Gamma"): 1, ("N", "V"): 3, ("N", "H"): 1,
        ("N", "Delta"): 1, ("N", "Gamma"): 1,
    }
    for (a, b), n in expected.items():
        cert.check(f"{a}.{b} = {n}", intersection_number(C[a], C[b]) == n)
    cert.check(
        "self-intersections vanish",
        all(intersection_number(c, c) == 0 for c in C.values()),
    )
    cert.check(
        "(V+H+Delta+Gamma)^2 = 12",
        class_square([(1, C[k]) for k in ("V", "H", "Delta", "Gamma")]) == 12,
    )
    cert.check("(Delta+Gamma)^2 = 2", class_square([(1, C["Delta"]), (1, C["Gamma"])]) == 2)
    cert.check(
        "N^2 = (H+Delta+Gamma-V)^2 = 0",
        class_square([(1, C["H"]), (1, C["Delta"]), (1, C["Gamma"]), (-1, C["V"])]) == 0,
    )

    tr = translates()
    on = {name: {k for k, p in pij.items() if curve_membership(c, p)} for name, c in tr.items()}
    cert.check("each translate contains 3 fixed points", all(len(s) == 3 for s in on.values()))
    cert.check(
        "each fixed point lies on 4 translates",
        all(sum(k in s for s in on.values()) == 4 for k in pij),
    )
    V0 = tr["V0"]
    cert.check(
        "N ∩ V0 = {p00, p01, p02}",
        curve_intersect_torsion(C["N"], V0, 6) == {pij[0, 0], pij[0, 1], pij[0, 2]},
    )
    Ns = n_curves()
    divisors = {
        "D0": [tr["V1"], tr["V2"], Ns["N12"]],
        "D1": [tr["V0"], tr["V2"], Ns["N02"]],
        "D2": [tr["V0"], tr["V1"], Ns["N01"]],
    }
    for name, parts in divisors.items():
        cert.check(
            f"{name} passes through all 9 fixed points",
            all(any(curve_membership(c, p) for c in parts) for p in pij.values()),
        )

    eig = labelled_eigen_points()
    hesse = {t: [VERTICES[(t, u)] for u in (0, 1, "inf")] for t in ("h", "delta", "gamma")}
    for t in ("h", "delta", "gamma"):
        cert.check(f"eigen-points for {t} are the three {t} vertices", set(eig[t]) == set(hesse[t]))
        cert.check(f"first eigen-point for {t} is {t}_0", eig[t][0] == hesse[t][0])
    twelve = {p for pts in eig.values() for p in pts} | {PPoint(1, 0, 0), PPoint(0, 1, 0), PPoint(0, 0, 1)}
    cert.check("9 eigen-points and 3 coordinate points give the 12 vertices", twelve == set(VERTICES.values()))
    return cert.finish()
