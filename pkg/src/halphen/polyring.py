"""Polynomials over K: ternary forms, univariate polynomials, covariants."""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Mapping, Sequence

from .numfield import EPS, B, ONE, ZERO, KElem, to_kelem

__all__ = [
    "Form",
    "TernaryCubic",
    "cubic_from_coeffs",
    "monomials",
    "CUBIC_MONOMIALS",
    "X",
    "Y",
    "Z",
    "parse_form",
    "evaluate",
    "gradient",
    "hessian_det",
    "UPoly",
    "upoly_gcd_divrem",
    "upoly_gcd",
    "upoly_inverse_mod",
    "roots_in_K",
    "determinant",
    "interpolate",
    "resultant_elim",
    "resultant_upoly",
    "aronhold_S",
    "CommonFactorError",
]

VARS = ("x", "y", "z")


class CommonFactorError(ValueError):
    """Two curves share a component."""


def monomials(d: int) -> list[tuple[int, int, int]]:
    """Exponent triples of degree d in the fixed order x^d, x^{d-1}y, ..., z^d."""
    return sorted(
        ((i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)), reverse=True
    )


CUBIC_MONOMIALS = monomials(3)


class Form:
    """Homogeneous polynomial in x, y, z over K."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[tuple[int, int, int], object], degree: int | None = None):
        clean = {}
        for mono, c in terms.items():
            c = to_kelem(c)
            if c:
                clean[tuple(mono)] = c
        degs = {sum(m) for m in clean}
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        if degree is None:
            if not degs:
                raise ValueError("degree of the zero form must be given")
            degree = degs.pop()
        elif degs and degs.pop() != degree:
            raise ValueError("declared degree does not match terms")
        self.terms = clean
        self.degree = degree

    def __getstate__(self):
        return (self.terms, self.degree)

    def __setstate__(self, state):
        self.terms, self.degree = state

    @classmethod
    def zero(cls, degree: int) -> "Form":
        return cls({}, degree)

    @classmethod
    def linear(cls, a, b, c) -> "Form":
        return cls({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}, 1)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mono) -> KElem:
        return self.terms.get(tuple(mono), ZERO)

    def coeffs(self) -> list[KElem]:
        return [self.coeff(m) for m in monomials(self.degree)]

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if other.degree != self.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError("cannot add forms of different degree")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        deg = self.degree if self.terms else other.degree
        return Form(out, deg)

    def __neg__(self):
        return Form({m: -c for m, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "Form":
        s = to_kelem(s)
        return Form({m: c * s for m, c in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, Form):
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                    p = c1 * c2
                    out[m] = out[m] + p if m in out else p
            return Form(out, self.degree + other.degree)
        if isinstance(other, (KElem, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (KElem, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = Form({(0, 0, 0): ONE}, 0)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, p: Sequence) -> KElem:
        return evaluate(self, p)

    def partial(self, var: int) -> "Form":
        out = {}
        for m, c in self.terms.items():
            k = m[var]
            if k:
                mm = list(m)
                mm[var] -= 1
                out[tuple(mm)] = c * k
        return Form(out, max(self.degree - 1, 0))

    def substitute(self, matrix: Sequence[Sequence]) -> "Form":
        """f(M (x, y, z)^T): each variable x_i replaced by sum_j M[i][j] x_j."""
        lins = [Form.linear(*(to_kelem(v) for v in row)) for row in matrix]
        powers = [[Form({(0, 0, 0): ONE}, 0)] for _ in range(3)]
        for i in range(3):
            for _ in range(self.degree):
                powers[i].append(powers[i][-1] * lins[i])
        out = Form.zero(self.degree)
        for m, c in self.terms.items():
            out = out + (powers[0][m[0]] * powers[1][m[1]] * powers[2][m[2]]).scale(c)
        return out

    def divide_exact(self, divisor: "Form") -> "Form":
        """Exact quotient self / divisor; raises ValueError if not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero form")
        lead = max(divisor.terms)
        lc_inv = divisor.terms[lead].inverse()
        rem = dict(self.terms)
        quot: dict = {}
        qdeg = self.degree - divisor.degree
        if qdeg < 0:
            if rem:
                raise ValueError("not divisible")
            return Form.zero(0)
        while rem:
            m = max(rem)
            if any(a < b for a, b in zip(m, lead)):
                raise ValueError("not divisible")
            qm = tuple(a - b for a, b in zip(m, lead))
            qc = rem[m] * lc_inv
            quot[qm] = qc
            for dm, dc in divisor.terms.items():
                t = tuple(a + b for a, b in zip(qm, dm))
                v = rem.get(t, ZERO) - qc * dc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Form(quot, qdeg)

    def normalized(self) -> "Form":
        """Scalar multiple whose first nonzero coefficient (monomial order) is 1."""
        for m in monomials(self.degree):
            c = self.terms.get(m)
            if c is not None:
                return self.scale(c.inverse())
        raise ValueError("cannot normalize the zero form")

    def proportional(self, other: "Form") -> bool:
        if self.degree != other.degree or self.is_zero() or other.is_zero():
            return False
        return self.normalized() == other.normalized()

    def to_string(self, order: Sequence | None = None) -> str:
        if self.is_zero():
            return "0"
        out = []
        for m in order or monomials(self.degree):
            c = self.terms.get(tuple(m))
            if c is None:
                continue
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(VARS, m) if k
            )
            cs = str(c)
            single = sum(1 for n in c.num if n) == 1
            if not mono:
                term = cs if single else f"({cs})"
            elif c == ONE:
                term = mono
            elif c == -ONE:
                term = "-" + mono
            elif single:
                term = f"{cs}*{mono}"
            else:
                term = f"({cs})*{mono}"
            if out and not term.startswith("-"):
                out.append("+")
            out.append(term)
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Form({self.to_string()!r})"


# TernaryCubic is a degree-3 Form; the alias documents intent at call sites.
TernaryCubic = Form


def cubic_from_coeffs(coeffs: Sequence) -> Form:
    if len(coeffs) != 10:
        raise ValueError("a ternary cubic has 10 coefficients")
    return Form(dict(zip(CUBIC_MONOMIALS, coeffs)), 3)


X = Form.linear(1, 0, 0)
Y = Form.linear(0, 1, 0)
Z = Form.linear(0, 0, 1)


# ---------------------------------------------------------------------------
# parsing "x^2*y - e*b*z^3 + ..." into a Form (safe: walks the AST)


_NAMES = {"x": X, "y": Y, "z": Z, "e": EPS, "b": B}


def _to_form(v):
    if isinstance(v, Form):
        return v
    return Form({(0, 0, 0): to_kelem(v)}, 0)


def _ev(node):
    if isinstance(node, ast.Expression):
        return _ev(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return KElem.from_rational(node.value)
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.UnaryOp):
        v = _ev(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        left, right = _ev(node.left), _ev(node.right)
        op = node.op
        if isinstance(op, ast.Pow):
            if not (isinstance(right, KElem) and right.is_rational()):
                raise ValueError("exponent must be an integer")
            k = right.rational()
            if k.denominator != 1 or k < 0:
                raise ValueError("exponent must be a nonnegative integer")
            return left ** int(k)
        if isinstance(op, ast.Div):
            if isinstance(right, Form):
                raise ValueError("cannot divide by a polynomial")
            return left / right if isinstance(left, KElem) else left.scale(right.inverse())
        if isinstance(op, ast.Mult):
            if isinstance(left, KElem) and isinstance(right, KElem):
                return left * right
            return _to_form(left) * _to_form(right)
        if isinstance(op, (ast.Add, ast.Sub)):
            if isinstance(left, KElem) and isinstance(right, KElem):
                return left + right if isinstance(op, ast.Add) else left - right
            lf, rf = _to_form(left), _to_form(right)
            if lf.degree != rf.degree:
                if lf.is_zero():
                    lf = Form.zero(rf.degree)
                elif rf.is_zero():
                    rf = Form.zero(lf.degree)
            return lf + rf if isinstance(op, ast.Add) else lf - rf
    raise ValueError(f"unsupported syntax: {ast.dump(node)}")


def parse_form(text: str) -> Form:
    """Parse a polynomial in x, y, z with coefficients in e (eps) and b."""
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    return _to_form(_ev(tree))


# ---------------------------------------------------------------------------
# evaluation and covariants


def evaluate(f: Form, p: Sequence) -> KElem:
    p = [to_kelem(c) for c in p]
    pw = [[ONE] for _ in range(3)]
    for i in range(3):
        for _ in range(f.degree):
            pw[i].append(pw[i][-1] * p[i])
    total = ZERO
    for (i, j, k), c in f.terms.items():
        total = total + c * pw[0][i] * pw[1][j] * pw[2][k]
    return total


def gradient(f: Form, p: Sequence) -> tuple[KElem, KElem, KElem]:
    return tuple(evaluate(f.partial(i), p) for i in range(3))


def hessian_det(f: Form) -> Form:
    """det of the matrix of second partials (a form of degree 3(d-2))."""
    h = [[f.partial(i).partial(j) for j in range(3)] for i in range(3)]
    return (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )


# ---------------------------------------------------------------------------
# univariate polynomials over K


class UPoly:
    """Univariate polynomial over K; coefficients low to high, trimmed."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_kelem(a) for a in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.c = c

    def __getstate__(self):
        return self.c

    def __setstate__(self, state):
        self.c = state

    @classmethod
    def monomial(cls, k: int, a=ONE) -> "UPoly":
        return cls([ZERO] * k + [to_kelem(a)])

    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.c

    def lc(self) -> KElem:
        return self.c[-1]

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(tuple(self.c))

    def __add__(self, other):
        n = max(len(self.c), len(other.c))
        a = self.c + [ZERO] * (n - len(self.c))
        b = other.c + [ZERO] * (n - len(other.c))
        return UPoly(x + y for x, y in zip(a, b))

    def __neg__(self):
        return UPoly(-x for x in self.c)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (KElem, int, Fraction)):
            s = to_kelem(other)
            return UPoly(x * s for x in self.c)
        if not (self.c and other.c):
            return UPoly()
        out = [ZERO] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(other.c):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __call__(self, x) -> KElem:
        x = to_kelem(x)
        acc = ZERO
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def derivative(self) -> "UPoly":
        return UPoly(a * i for i, a in enumerate(self.c) if i)

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self * self.lc().inverse()

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.c)
        dg = other.degree
        inv = other.lc().inverse()
        q = [ZERO] * max(len(rem) - dg, 0)
        for k in range(len(rem) - 1, dg - 1, -1):
            coef = rem[k]
            if not coef:
                continue
            t = coef * inv
            q[k - dg] = t
            for j, b in enumerate(other.c):
                if b:
                    rem[k - dg + j] = rem[k - dg + j] - t * b
        return UPoly(q), UPoly(rem[:dg])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def to_string(self, var: str = "x") -> str:
        return _upoly_str(self, var)

    def __repr__(self):
        return f"UPoly({_upoly_str(self, 'x')!r})"


def _upoly_str(p: UPoly, var: str) -> str:
    out = []
    for k in range(p.degree, -1, -1):
        a = p.c[k]
        if not a:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = str(a)
        single = sum(1 for n in a.num if n) == 1
        if not mono:
            term = cs if single else f"({cs})"
        elif a == ONE:
            term = mono
        elif a == -ONE:
            term = "-" + mono
        else:
            term = (cs if single else f"({cs})") + "*" + mono
        if out and not term.startswith("-"):
            out.append("+")
        out.append(term)
    return "".join(out)


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def upoly_gcd_divrem(f: UPoly, g: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """(monic gcd(f, g), quotient f // g, remainder f % g)."""
    q, r = f.divmod(g)
    return upoly_gcd(f, g), q, r


def upoly_inverse_mod(a: UPoly, m: UPoly) -> UPoly:
    """Inverse of a modulo m by the extended Euclidean algorithm."""
    r0, r1 = m, a % m
    s0, s1 = UPoly(), UPoly([ONE])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("not invertible modulo m")
    return (s0 * r0.lc().inverse()) % m


# ---------------------------------------------------------------------------
# exact linear algebra over K


def determinant(matrix: Sequence[Sequence[KElem]]) -> KElem:
    """Determinant by Gaussian elimination over K."""
    a = [list(row) for row in matrix]
    n = len(a)
    det = ONE
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pv = a[col][col]
        det = det * pv
        inv = pv.inverse()
        for i in range(col + 1, n):
            if a[i][col]:
                f = a[i][col] * inv
                row_c = a[col]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], row_c)]
    return det


def interpolate(xs: Sequence, ys: Sequence[KElem]) -> UPoly:
    """Newton interpolation over K."""
    xs = [to_kelem(x) for x in xs]
    coef = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * UPoly([-xs[i], ONE]) + UPoly([coef[i]])
    return p


def _z_coeffs(f: Form, var: int, xv: KElem, yv: KElem) -> list[KElem]:
    """Coefficients (low to high) of f as a polynomial in variable ``var``,
    with the other two variables (in order) specialised to xv, yv."""
    others = [i for i in range(3) if i != var]
    out = [ZERO] * (f.degree + 1)
    for m, c in f.terms.items():
        out[m[var]] = out[m[var]] + c * (xv ** m[others[0]]) * (yv ** m[others[1]])
    return out


def _var_degree(f: Form, var: int) -> int:
    return max((m[var] for m in f.terms), default=0)


def _sylvester(fc: Sequence[KElem], gc: Sequence[KElem]) -> list[list[KElem]]:
    """Sylvester matrix of polynomials given low-to-high with fixed degrees."""
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [ZERO] * size
        for k, a in enumerate(reversed(fc)):
            row[i + k] = a
        rows.append(row)
    for i in range(m):
        row = [ZERO] * size
        for k, a in enumerate(reversed(gc)):
            row[i + k] = a
        rows.append(row)
    return rows


def resultant_upoly(f: Form, g: Form, var: int = 2) -> tuple[UPoly, int]:
    """Res_var(f, g) dehomogenised: returns (R(t, 1), homogeneous degree), where
    t is the first remaining variable and the second remaining one is set to 1.

    Computed by evaluating the Sylvester determinant at degree+1 rational
    points and interpolating, so it is exact.
    """
    e1, e2 = _var_degree(f, var), _var_degree(g, var)
    deg = f.degree * g.degree - (f.degree - e1) * (g.degree - e2)
    xs = list(range(deg + 1))
    ys = []
    for xv in xs:
        fc = _z_coeffs(f, var, to_kelem(xv), ONE)[: e1 + 1]
        gc = _z_coeffs(g, var, to_kelem(xv), ONE)[: e2 + 1]
        if e1 == 0 and e2 == 0:
            ys.append(ONE)
        else:
            ys.append(determinant(_sylvester(fc, gc)))
    return interpolate(xs, ys), deg


def resultant_elim(f: Form, g: Form, var: int | str = "z") -> Form:
    """Sylvester resultant eliminating ``var``; a binary form in the other two
    variables (returned as a ternary Form not involving ``var``)."""
    if isinstance(var, str):
        var = VARS.index(var)
    r, deg = resultant_upoly(f, g, var)
    if r.is_zero():
        raise CommonFactorError("the curves share a common component")
    others = [i for i in range(3) if i != var]
    terms = {}
    for k, a in enumerate(r.c):
        m = [0, 0, 0]
        m[others[0]] = k
        m[others[1]] = deg - k
        terms[tuple(m)] = a
    return Form(terms, deg)


# ---------------------------------------------------------------------------
# Aronhold invariant S


def _symmetric_tensor_monos():
    """For each index triple (i, j, k), the cubic monomial and 1/multinomial."""
    table = {}
    for i in range(3):
        for j in range(3):
            for k in range(3):
                e = [0, 0, 0]
                for t in (i, j, k):
                    e[t] += 1
                mult = factorial(3) // (factorial(e[0]) * factorial(e[1]) * factorial(e[2]))
                table[(i, j, k)] = (tuple(e), Fraction(1, mult))
    return table


@lru_cache(maxsize=None)
def _aronhold_polynomial() -> tuple:
    """S as an integer-coefficient polynomial in the 10 cubic coefficients,
    from the symbolic expression (abc)(abd)(acd)(bcd), scaled so that
    S(a x^3 + b y^3 + c z^3 + 6 d xyz) = a b c d - d^4."""
    tens = _symmetric_tensor_monos()
    perms = []
    for p in permutations(range(3)):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        perms.append((p, -1 if inv % 2 else 1))
    index = {m: n for n, m in enumerate(CUBIC_MONOMIALS)}
    poly: dict = {}
    for s1, g1 in perms:
        for s2, g2 in perms:
            for s3, g3 in perms:
                for s4, g4 in perms:
                    # letters a, b, c, d; each bracket picks one index per letter
                    a = (s1[0], s2[0], s3[0])
                    b = (s1[1], s2[1], s4[0])
                    c = (s1[2], s3[1], s4[1])
                    d = (s2[2], s3[2], s4[2])
                    coef = Fraction(g1 * g2 * g3 * g4)
                    key = []
                    for letter in (a, b, c, d):
                        mono, w = tens[tuple(sorted(letter))]
                        coef *= w
                        key.append(index[mono])
                    key = tuple(sorted(key))
                    poly[key] = poly.get(key, 0) + coef
    poly = {k: v for k, v in poly.items() if v}
    # calibrate: a=b=c=d=1 on the Hesse form gives abcd - d^4 = 0, so use
    # a=b=c=1, d=2 (xyz coefficient 12): target 2 - 16 = -14
    probe = [0] * 10
    probe[index[(3, 0, 0)]] = probe[index[(0, 3, 0)]] = probe[index[(0, 0, 3)]] = 1
    probe[index[(1, 1, 1)]] = 12
    raw = sum(v * probe[k[0]] * probe[k[1]] * probe[k[2]] * probe[k[3]] for k, v in poly.items())
    scale = Fraction(-14) / raw
    return tuple(sorted((k, v * scale) for k, v in poly.items()))


def aronhold_S(f: Form) -> KElem:
    """Degree-4 Aronhold invariant, normalised by
    S(a x^3 + b y^3 + c z^3 + 6 d xyz) = a b c d - d^4."""
    if f.degree != 3:
        raise ValueError("aronhold_S needs a cubic")
    c = f.coeffs()
    total = ZERO
    for key, v in _aronhold_polynomial():
        t = c[key[0]] * c[key[1]]
        if not t:
            continue
        t = t * c[key[2]] * c[key[3]]
        if t:
            total = total + t * v
    return total


# ---------------------------------------------------------------------------
# roots in K


def _embedded_roots(f: UPoly, sigma, digits: int):
    import mpmath

    from .numfield import embed_complex

    coeffs = [embed_complex(sigma(a), digits) for a in reversed(f.c)]
    with mpmath.workdps(digits):
        return mpmath.polyroots(coeffs, maxsteps=200, extraprec=2 * digits)


def roots_in_K(f: UPoly, digits: int = 40) -> list[KElem]:
    """All roots of f that lie in K, found exactly.

    Each candidate root r is pinned down by its six complex images under the
    embeddings of K; the coordinates of r are then read off from a 6x6 linear
    system, rounded to rationals and confirmed by exact substitution.
    """
    import itertools

    import mpmath

    from .numfield import automorphisms, embed_complex

    f = UPoly(f.c)
    if f.degree < 1:
        return []
    # strip the root 0 so polyroots never sees a vanishing constant term
    found: list[KElem] = []
    while f.c and not f.c[0]:
        if ZERO not in found:
            found.append(ZERO)
        f = UPoly(f.c[1:])
    if f.degree < 1:
        return found
    g = f.monic()
    # automorphisms() lists (e->e, b->e^k b) for k = 0, 1, 2 first; the other
    # three are these followed by complex conjugation: conj o s_{1,k} = s_{2,2k}
    sigmas = automorphisms()
    basis = [KElem(tuple(1 if i == k else 0 for i in range(6))) for k in range(6)]
    with mpmath.workdps(digits):
        mat = mpmath.matrix(
            [[embed_complex(s(bv), digits) for bv in basis] for s in sigmas]
        )
        root_lists = [_embedded_roots(g, s, digits) for s in sigmas[:3]]
        for combo in itertools.product(*root_lists):
            rhs = list(combo) + [mpmath.conj(combo[(2 * j) % 3]) for j in range(3)]
            try:
                sol = mpmath.lu_solve(mat, mpmath.matrix(rhs))
            except ZeroDivisionError:
                continue
            if any(abs(mpmath.im(v)) > mpmath.mpf(10) ** (-digits // 3) for v in sol):
                continue
            coords = []
            for v in sol:
                fr = Fraction(str(mpmath.nstr(mpmath.re(v), digits))).limit_denominator(10**9)
                coords.append(fr)
            r = KElem(coords)
            if r not in found and g(r).is_zero():
                found.append(r)
            if len(found) >= f.degree + (1 if ZERO in found else 0):
                break
    return found
