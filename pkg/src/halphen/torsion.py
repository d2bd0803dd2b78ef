"""Equianharmonic torsion parameters P^1[3m] for m = 1, 2.

Lines through v1 = (0:1:0) are written in the basis L0 = e*z - x,
Linf = z - e*x (so L0 + Linf is a multiple of z - x).  Projecting
x^3 + y^3 - z^3 from v1 is the degree 3 map whose branch values are 0, 1, inf;
the images of the 3m-torsion points, minus those, are P^1[3m].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .elliptic import TORSION_CURVE, TORSION_ORIGIN, CubicGroup, flexes_of, six_torsion
from .numfield import EPS, ONE, ZERO, KElem, to_kelem
from .plane import INF, PPoint

__all__ = [
    "ParamSet",
    "V1",
    "project_from_vertex",
    "p1_torsion_exact",
    "s3_orbit",
    "s3_images",
    "tau",
    "BRANCH_VALUES",
]

V1 = PPoint(0, 1, 0)
BRANCH_VALUES = (ZERO, ONE, INF)


def tau() -> KElem:
    """-e (b e^2 - 1) / (b e - 1)."""
    from .numfield import B

    e2 = EPS * EPS
    return -EPS * (B * e2 - 1) / (B * EPS - 1)


def project_from_vertex(p: PPoint):
    """Parameter u = beta/alpha of the line through p and v1, written as
    alpha*L0 + beta*Linf; INF when alpha = 0."""
    if p == V1:
        raise ValueError("cannot project v1 from itself")
    # line through p and (0,1,0) is a x + c z with (a, c) = (-p_z, p_x)
    a, c = -p[2], p[0]
    # alpha*(-1, e) + beta*(-e, 1) = (a, c)
    alpha = (a + EPS * c) / (EPS * EPS - 1)
    beta = c - EPS * alpha
    if not alpha:
        return INF
    return beta / alpha


def s3_images(u) -> list:
    """u, 1/u, 1-u, 1/(1-u), (u-1)/u, u/(u-1) (INF-aware)."""

    def inv(x):
        if x == INF:
            return ZERO
        if not x:
            return INF
        return ONE / x

    def one_minus(x):
        return INF if x == INF else ONE - x

    return [
        u,
        inv(u),
        one_minus(u),
        inv(one_minus(u)),
        one_minus(inv(u)),
        inv(one_minus(inv(u))),
    ]


def s3_orbit(u) -> frozenset:
    if u == INF or u in (ZERO, ONE):
        raise ValueError("s3_orbit is defined for u outside {0, 1, inf}")
    return frozenset(s3_images(to_kelem(u)))


@dataclass(frozen=True)
class ParamSet:
    order: int
    values: tuple[KElem, ...]

    def __contains__(self, u) -> bool:
        return u in self.values

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def is_s3_invariant(self) -> bool:
        vals = set(self.values)
        return all(set(s3_images(u)) <= vals for u in vals)


@lru_cache(maxsize=None)
def p1_torsion_exact(m: int) -> ParamSet:
    if m == 1:
        pts = flexes_of(TORSION_CURVE)
    elif m == 2:
        pts = six_torsion(CubicGroup(TORSION_CURVE, TORSION_ORIGIN))
    else:
        raise ValueError("exact torsion parameters are available for m = 1, 2 only")
    vals = {project_from_vertex(p) for p in pts}
    vals = {u for u in vals if u not in BRANCH_VALUES}
    return ParamSet(m, tuple(sorted(vals, key=KElem.sort_key)))
