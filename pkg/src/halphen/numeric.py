"""Weierstrass wp' of the lattice Z[zeta] in arbitrary precision (mpmath).

wp'(z) is invariant under z -> zeta^2 z, so it is the degree 3 quotient map
T -> P^1 branched over the three fixed points.  Its values on 3m-torsion
points, moved by a Moebius map sending the branch values to 0, 1, inf, give
P^1[3m] for any m.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .numfield import embed_complex
from .torsion import p1_torsion_exact

__all__ = [
    "WeierstrassEngine",
    "PrecisionError",
    "wp_and_wp_prime",
    "branch_values",
    "p1_torsion_numeric",
    "exact_set_distance",
    "s3_closure_defect",
]

DEFAULT_DIGITS = 60


class PrecisionError(ArithmeticError):
    """Torsion values could not be separated at the working precision."""


@dataclass(frozen=True)
class WeierstrassEngine:
    """wp for periods 1 and zeta (a rescaling of Z[zeta] by 1, so the same lattice).

    wp(z) = (pi th2 th3 th4(pi z) / th1(pi z))^2 - pi^2 (th2^4 + th3^4) / 3
    with theta constants at the nome q = exp(i pi zeta).
    """

    digits: int = DEFAULT_DIGITS

    def _ctx(self):
        ctx = mpmath.mp.clone()
        ctx.dps = self.digits + 15
        return ctx

    def _constants(self, ctx):
        zeta = ctx.expjpi(ctx.mpf(1) / 3)
        q = ctx.expjpi(zeta)
        t2 = ctx.jtheta(2, 0, q)
        t3 = ctx.jtheta(3, 0, q)
        return zeta, q, t2, t3

    def zeta(self):
        return self._constants(self._ctx())[0]

    def lattice_reduce(self, z):
        """Translate z into the fundamental parallelogram of 1, zeta."""
        ctx = self._ctx()
        zeta = self._constants(ctx)[0]
        c = z.imag / zeta.imag
        a = z.real - c * zeta.real
        return (a - ctx.floor(a)) + (c - ctx.floor(c)) * zeta

    def is_lattice_point(self, z) -> bool:
        ctx = self._ctx()
        w = self.lattice_reduce(ctx.mpc(z))
        zeta = self._constants(ctx)[0]
        tol = ctx.mpf(10) ** (-self.digits)
        return any(abs(w - corner) < tol for corner in (0, 1, zeta, 1 + zeta))

    def evaluate(self, z):
        """(wp(z), wp'(z)) as mpc values at working precision."""
        ctx = self._ctx()
        z = ctx.mpc(z)
        if self.is_lattice_point(z):
            raise ValueError("wp has a pole at lattice points")
        _, q, t2, t3 = self._constants(ctx)
        v = ctx.pi * z
        th1 = ctx.jtheta(1, v, q)
        th4 = ctx.jtheta(4, v, q)
        d1 = ctx.jtheta(1, v, q, 1)
        d4 = ctx.jtheta(4, v, q, 1)
        A = (ctx.pi * t2 * t3) ** 2
        r = th4 / th1
        wp = A * r * r - ctx.pi**2 * (t2**4 + t3**4) / 3
        # d/dz = pi d/dv
        wpp = 2 * A * r * (d4 * th1 - th4 * d1) / th1**2 * ctx.pi
        return wp, wpp

    def g3(self):
        """g3 = 4 wp^3 - wp'^2 (g2 = 0), read off at a generic point."""
        wp, wpp = self.evaluate(mpmath.mpc("0.2137", "0.1311"))
        return 4 * wp**3 - wpp**2


def wp_and_wp_prime(z, digits: int = DEFAULT_DIGITS):
    wp, wpp = WeierstrassEngine(digits).evaluate(z)
    return mpmath.mpc(wp), mpmath.mpc(wpp)


def _fixed_points(engine: WeierstrassEngine):
    zeta = engine.zeta()
    return [k * (1 + zeta) / 3 for k in range(3)]


def branch_values(digits: int = DEFAULT_DIGITS) -> dict:
    """wp' at the three fixed points of zeta^2; the one at 0 is infinite.

    The finite pair is +-i*c for a real c > 0, returned as well.
    """
    engine = WeierstrassEngine(digits)
    p = _fixed_points(engine)
    finite = [engine.evaluate(z)[1] for z in p[1:]]
    c = abs(finite[0])
    return {"values": [mpmath.inf] + finite, "finite": finite, "c": c}


def _moebius(b0, b1):
    """u with u(b0) = 0, u(b1) = 1, u(inf) = inf."""
    return lambda w: (w - b0) / (b1 - b0)


def _cluster(values, radius):
    clusters: list[list] = []
    for v in values:
        for c in clusters:
            if abs(c[0] - v) < radius:
                c.append(v)
                break
        else:
            clusters.append([v])
    return clusters


def p1_torsion_numeric(m: int, digits: int = DEFAULT_DIGITS) -> list:
    """The 3m^2 - 1 values of P^1[3m] as mpc numbers, sorted by (re, im)."""
    if m < 1:
        raise ValueError("m must be positive")
    engine = WeierstrassEngine(digits)
    zeta = engine.zeta()
    n = 3 * m
    b = branch_values(digits)["finite"]
    u = _moebius(b[0], b[1])
    values = []
    for a in range(n):
        for c in range(n):
            if a == 0 and c == 0:
                continue
            values.append(engine.evaluate((a + c * zeta) / n)[1])
    radius = mpmath.mpf(10) ** (-(digits // 2))
    clusters = _cluster(values, radius * max(1, abs(b[0])))
    branch = [cl for cl in clusters if min(abs(cl[0] - bv) for bv in b) < radius * abs(b[0])]
    rest = [cl for cl in clusters if cl not in branch]
    if any(len(cl) != 3 for cl in rest) or len(rest) != 3 * m * m - 1:
        raise PrecisionError(
            f"could not separate the torsion values at {digits} digits; try {2 * digits}"
        )
    out = [u(sum(cl) / 3) for cl in rest]
    return sorted(out, key=lambda w: (float(w.real), float(w.imag)))


def _set_distance(A, B) -> float:
    if len(A) != len(B):
        return float("inf")
    return max(max(min(abs(a - b) for b in B) for a in A), max(min(abs(a - b) for a in A) for b in B))


def exact_set_distance(m: int, digits: int = DEFAULT_DIGITS):
    """Hausdorff distance between the numeric set and the embedded exact one
    (m = 1, 2), using the principal embedding of K."""
    num = p1_torsion_numeric(m, digits)
    exact = [embed_complex(x, digits + 10) for x in p1_torsion_exact(m)]
    return _set_distance(num, exact)


def s3_closure_defect(values) -> float:
    """How far u -> 1/u and u -> 1-u are from permuting ``values``."""
    inv = [1 / v for v in values]
    flip = [1 - v for v in values]
    return max(_set_distance(values, inv), _set_distance(values, flip))
