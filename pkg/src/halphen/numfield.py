"""Exact arithmetic in K = Q(e, b) with e^2 + e + 1 = 0 and b^3 = 2.

Elements are stored as six integer numerators over one positive common
denominator, in the basis (1, e, b, e*b, b^2, e*b^2).  The representation is
kept reduced, so structural equality is field equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Sequence

import mpmath

__all__ = [
    "KElem",
    "ZERO",
    "ONE",
    "EPS",
    "B",
    "to_kelem",
    "minimal_polynomial",
    "automorphisms",
    "apply_automorphism",
    "galois_conjugates",
    "embed_complex",
    "kelem_to_json",
    "kelem_from_json",
]

BASIS_NAMES = ("1", "e", "b", "e*b", "b^2", "e*b^2")


def _reduce(nums, den):
    if den < 0:
        nums = tuple(-n for n in nums)
        den = -den
    g = gcd(*nums, den)
    if g != 1:
        nums = tuple(n // g for n in nums)
        den //= g
    return nums, den


def _emul(p, q, r, s):
    # (p + q e)(r + s e) with e^2 = -1 - e
    qs = q * s
    return p * r - qs, p * s + q * r - qs


def _mul_int(a, c):
    a0, a1, a2, a3, a4, a5 = a
    c0, c1, c2, c3, c4, c5 = c
    # b-degree 0..4 coefficients, each in Q(e)
    d0 = _emul(a0, a1, c0, c1)
    t1 = _emul(a0, a1, c2, c3)
    t2 = _emul(a2, a3, c0, c1)
    t3 = _emul(a0, a1, c4, c5)
    t4 = _emul(a2, a3, c2, c3)
    t5 = _emul(a4, a5, c0, c1)
    t6 = _emul(a2, a3, c4, c5)
    t7 = _emul(a4, a5, c2, c3)
    d4 = _emul(a4, a5, c4, c5)
    d3 = (t6[0] + t7[0], t6[1] + t7[1])
    return (
        d0[0] + 2 * d3[0],
        d0[1] + 2 * d3[1],
        t1[0] + t2[0] + 2 * d4[0],
        t1[1] + t2[1] + 2 * d4[1],
        t3[0] + t4[0] + t5[0],
        t3[1] + t4[1] + t5[1],
    )


class KElem:
    """Immutable element of K."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, coords: Iterable = (0, 0, 0, 0, 0, 0)):
        fr = [Fraction(c) for c in coords]
        if len(fr) != 6:
            raise ValueError("KElem needs exactly 6 coordinates")
        den = lcm(*(f.denominator for f in fr))
        nums = tuple(f.numerator * (den // f.denominator) for f in fr)
        self.num, self.den = _reduce(nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, nums, den):
        obj = object.__new__(cls)
        obj.num, obj.den = _reduce(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, q) -> "KElem":
        q = Fraction(q)
        return cls._raw((q.numerator, 0, 0, 0, 0, 0), q.denominator)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.num)

    # pickling: slots only
    def __getstate__(self):
        return (self.num, self.den)

    def __setstate__(self, state):
        self.num, self.den = state
        self._hash = None

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __eq__(self, other):
        if isinstance(other, KElem):
            return self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self == to_kelem(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def sort_key(self):
        return self.coords

    def __lt__(self, other):
        # lexicographic on coordinates; a total order used only for determinism
        return self.sort_key() < to_kelem(other).sort_key()

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return KElem._raw(tuple(x + y for x, y in zip(self.num, other.num)), self.den)
        d1, d2 = self.den, other.den
        return KElem._raw(
            tuple(x * d2 + y * d1 for x, y in zip(self.num, other.num)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(KElem)
        obj.num = tuple(-x for x in self.num)
        obj.den = self.den
        obj._hash = None
        return obj

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return KElem._raw(tuple(x * other for x in self.num), self.den)
        if isinstance(other, Fraction):
            return KElem._raw(
                tuple(x * other.numerator for x in self.num), self.den * other.denominator
            )
        if not isinstance(other, KElem):
            return NotImplemented
        return KElem._raw(_mul_int(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "KElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        n0, n1, n2, n3, n4, n5 = self.num
        a0, a1, a2 = (n0, n1), (n2, n3), (n4, n5)

        def m(u, v):
            return _emul(u[0], u[1], v[0], v[1])

        def lin(*terms):
            return (sum(c * t[0] for c, t in terms), sum(c * t[1] for c, t in terms))

        a0a0, a1a1, a2a2 = m(a0, a0), m(a1, a1), m(a2, a2)
        a0a1, a0a2, a1a2 = m(a0, a1), m(a0, a2), m(a1, a2)
        # adjugate over Q(e) for the cubic extension b^3 = 2
        c0 = lin((1, a0a0), (-2, a1a2))
        c1 = lin((2, a2a2), (-1, a0a1))
        c2 = lin((1, a1a1), (-1, a0a2))
        norm = lin((1, m(a0a0, a0)), (2, m(a1a1, a1)), (4, m(a2a2, a2)), (-6, m(a0a1, a2)))
        p, q = norm
        # 1/(p + q e) = ((p - q) - q e) / (p^2 - p q + q^2)
        conj = (p - q, -q)
        nq = p * p - p * q + q * q
        r0, r1, r2 = m(c0, conj), m(c1, conj), m(c2, conj)
        nums = (r0[0], r0[1], r1[0], r1[1], r2[0], r2[1])
        return KElem._raw(tuple(x * self.den for x in nums), nq)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"KElem({str(self)!r})"

    def __str__(self):
        return format_kelem(self)


def _coerce(x) -> KElem | None:
    if isinstance(x, KElem):
        return x
    if isinstance(x, (int, Fraction)):
        return KElem.from_rational(x)
    return None


def to_kelem(x) -> KElem:
    """Coerce ints, Fractions and 'p/q' strings to KElem."""
    if isinstance(x, KElem):
        return x
    if isinstance(x, str):
        return KElem.from_rational(Fraction(x))
    y = _coerce(x)
    if y is None:
        raise TypeError(f"cannot convert {type(x).__name__} to KElem")
    return y


ZERO = KElem()
ONE = KElem((1, 0, 0, 0, 0, 0))
EPS = KElem((0, 1, 0, 0, 0, 0))
B = KElem((0, 0, 1, 0, 0, 0))


def format_kelem(a: KElem) -> str:
    """Render as a sum of terms in e and b, e.g. ``-e``, ``1/2``, ``2*e*b^2-1``."""
    if a.is_zero():
        return "0"
    parts = []
    for name, c in zip(BASIS_NAMES, a.coords):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if name == "1":
            body = str(mag)
        elif mag == 1:
            body = name
        elif mag.denominator == 1:
            body = f"{mag}*{name}"
        else:
            body = f"{mag.numerator}*{name}/{mag.denominator}"
        parts.append((sign, body))
    out = "".join(s + t for s, t in parts)
    return out[1:] if out.startswith("+") else out


# ---------------------------------------------------------------------------
# linear algebra over Q (small, exact)


def _rational_kernel_relation(vectors: Sequence[Sequence[Fraction]]):
    """Return coefficients c with sum c_i v_i = 0 and c_last = 1, if the last
    vector is in the span of the others; otherwise None."""
    n = len(vectors)
    dim = len(vectors[0])
    # solve sum_{i<n-1} c_i v_i = -v_last
    rows = [[vectors[i][r] for i in range(n - 1)] + [-vectors[-1][r]] for r in range(dim)]
    ncols = n - 1
    piv_cols = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, dim) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, dim):
        if rows[i][-1] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(piv_cols):
        sol[col] = rows[i][-1]
    return sol + [Fraction(1)]


def minimal_polynomial(a: KElem) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of ``a`` over Q, coefficients low to high."""
    powers = [ONE.coords]
    p = ONE
    for _ in range(6):
        p = p * a
        powers.append(p.coords)
        rel = _rational_kernel_relation(powers)
        if rel is not None:
            return tuple(rel)
    raise AssertionError("degree exceeded 6; arithmetic is broken")


def solve_rational(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system over Q by Gauss-Jordan elimination."""
    n = len(matrix)
    rows = [[Fraction(x) for x in matrix[i]] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return [rows[i][n] for i in range(n)]


def multiplication_matrix(a: KElem) -> list[list[Fraction]]:
    """Columns are a * basis_j in coordinates."""
    cols = []
    for j in range(6):
        e = [0] * 6
        e[j] = 1
        cols.append((a * KElem(e)).coords)
    return [[cols[j][i] for j in range(6)] for i in range(6)]


def inverse_by_linear_system(a: KElem) -> KElem:
    """Inverse via the 6x6 'multiply by a' system; slow reference route."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in K")
    return KElem(solve_rational(multiplication_matrix(a), [1, 0, 0, 0, 0, 0]))


# ---------------------------------------------------------------------------
# Galois action


def apply_automorphism(a: KElem, e_power: int, b_twist: int) -> KElem:
    """Image under e -> e^e_power (1 or 2) and b -> e^b_twist * b."""
    if e_power not in (1, 2):
        raise ValueError("e_power must be 1 or 2")
    e_img = EPS if e_power == 1 else EPS * EPS
    b_img = (EPS ** (b_twist % 3)) * B
    c = a.coords
    out = ZERO
    bp = ONE
    for i in range(3):
        out = out + bp * (c[2 * i] + c[2 * i + 1] * e_img)
        bp = bp * b_img
    return out


def automorphisms() -> list[Callable[[KElem], KElem]]:
    """The six automorphisms of K in a fixed order (identity first)."""
    return [
        (lambda a, j=j, k=k: apply_automorphism(a, j, k))
        for j in (1, 2)
        for k in (0, 1, 2)
    ]


def galois_conjugates(a: KElem) -> list[KElem]:
    """Distinct images of ``a`` under Gal(K/Q), in automorphism order."""
    seen: list[KElem] = []
    for sigma in automorphisms():
        img = sigma(a)
        if img not in seen:
            seen.append(img)
    return seen


# ---------------------------------------------------------------------------
# complex embedding


def embed_complex(a: KElem, digits: int = 30) -> mpmath.mpc:
    """Value of ``a`` at e = exp(2 pi i/3), b = real cube root of 2."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with mpmath.workdps(digits + 10):
        e = mpmath.mpc(-0.5, mpmath.sqrt(3) / 2)
        b = mpmath.cbrt(2)
        basis = (1, e, b, e * b, b * b, e * b * b)
        val = mpmath.fsum(mpmath.mpf(n) * v for n, v in zip(a.num, basis)) / a.den
        return +val


# ---------------------------------------------------------------------------
# JSON


def kelem_to_json(a: KElem) -> list[str]:
    return [f"{c.numerator}/{c.denominator}" for c in a.coords]


def kelem_from_json(data: Sequence[str]) -> KElem:
    if len(data) != 6:
        raise ValueError("KElem JSON must have 6 entries")
    return KElem(Fraction(s) for s in data)
