"""Halphen cubics of order m and reconciliation with the printed lists."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .hesse import PENCILS, PRINTED_SINGULAR_MEMBERS, base_points, pencil_member
from .numfield import EPS, KElem, format_kelem, kelem_to_json
from .plane import INF
from .polyring import CUBIC_MONOMIALS, Form, aronhold_S, evaluate, gradient, parse_form
from .torsion import p1_torsion_exact, tau

__all__ = [
    "HalphenSet",
    "halphen_cubics",
    "normalize_cubic",
    "parse_typeset",
    "printed_list",
    "match_paper_list",
    "cubic_to_latex",
    "cubic_to_plain",
    "DISPLAY_ORDER",
    "kelem_to_latex",
    "PRINTED_ORDER1",
    "PRINTED_ORDER2",
]

# ---------------------------------------------------------------------------
# printed lists, as typeset (\eps written out); labels are parameter names

PRINTED_ORDER1 = [
    ("v", "-e", r"x^3+\eps^2y^3+\eps z^3"),
    ("v", "-e^2", r"x^3+\eps y^3+\eps^2z^3"),
    ("h", "-e", r"x^2y+y^2z+xz^2"),
    ("h", "-e^2", r"xy^2+x^2z+yz^2"),
    ("delta", "-e", r"x^2y+\eps^2y^2z+\eps xz^2"),
    ("delta", "-e^2", r"xy^2+\eps^2x^2z+\eps yz^2"),
    ("gamma", "-e", r"x^2y+\eps y^2z+\eps^2xz^2"),
    ("gamma", "-e^2", r"xy^2+\eps x^2z+\eps^2yz^2"),
]

PRINTED_ORDER2 = [
    ("v", "t", r"(b-\eps)x^3+\eps^2(b-1)y^3+(b\eps-1)z^3"),
    ("h", "t", r"x^2y-\eps^2bxy^2-\eps^2bx^2z+y^2z+xz^2-\eps^2byz^2"),
    ("delta", "t", r"x^2y-bxy^2-\eps ^2bx^2z+\eps ^2y^2z+\eps xz^2-\eps byz^2"),
    ("gamma", "t", r"x^2y-\eps ^2bxy^2-bx^2z+\eps y^2z+\eps ^2xz^2-\eps byz^2"),
    ("v", "1/(1-t)", r"\eps(b\eps-1)x^3+\eps(b-\eps) y^3+(b-1)z^3"),
    ("h", "1/(1-t)", r"x^2y-\eps bxy^2-\eps bx^2z+y^2z+xz^2-\eps byz^2"),
    ("delta", "1/(1-t)", r"x^2y-\eps ^2bxy^2-\eps bx^2z+\eps ^2y^2z+\eps xz^2-byz^2"),
    ("gamma", "1/(1-t)", r"x^2y-\eps bxy^2-\eps ^2bx^2z+\eps y^2z+\eps ^2xz^2-byz^2"),
    ("v", "1-1/t", r"\eps(b-1) x^3 +(b-\eps^2) y^3+ (b\eps^2-1)z^3"),
    ("h", "1-1/t", r"x^2y-bxy^2-bx^2z+y^2z+xz^2-byz^2"),
    ("delta", "1-1/t", r"x^2y-\eps bxy^2-bx^2z+\eps ^2y^2z+\eps xz^2-\eps ^2byz^2"),
    ("gamma", "1-1/t", r"x^2y-bxy^2-\eps bx^2z+\eps y^2z+\eps ^2xz^2-\eps ^2byz^2"),
    ("v", "1/t", r"(b-\eps^2) x^3+\eps(b-1) y^3 + (b\eps^2 -1) z^3"),
    ("h", "1/t", r"2x^2y-\eps^2b^2xy^2-\eps^2b^2x^2z+2y^2z+2xz^2-\eps^2b^2yz^2"),
    ("delta", "1/t", r"2x^2y-b^2xy^2-\eps ^2b^2x^2z+2\eps ^2y^2z+2\eps xz^2-\eps b^2yz^2"),
    ("gamma", "1/t", r"2x^2y-\eps ^2b^2xy^2-b^2x^2z+2\eps y^2z+2\eps ^2xz^2-\eps b^2yz^2"),
    ("v", "1/(1-1/t)", r"\eps(b-\eps)x^3+\eps(b\eps-1) y^3+(b-1)z^3"),
    ("h", "1/(1-1/t)", r"2x^2y-\eps b^2xy^2-\eps b^2x^2z+2y^2z+2xz^2-\eps b^2yz^2"),
    ("delta", "1/(1-1/t)", r"2x^2y-\eps ^2b^2xy^2-\eps b^2x^2z+2\eps ^2y^2z+2\eps xz^2-b^2yz^2"),
    ("gamma", "1/(1-1/t)", r"2x^2y-\eps b^2xy^2-\eps ^2b^2x^2z+2\eps y^2z+2\eps ^2xz^2-b^2yz^2"),
    # this block repeats the label of the second block
    ("v", "1/(1-t)", r"\eps^2(b-1) x^3+(b-\eps) y^3+(b\eps-1)z^3"),
    ("h", "1/(1-t)", r"2x^2y-b^2xy^2-b^2x^2z+2y^2z+2xz^2-b^2yz^2"),
    ("delta", "1/(1-t)", r"2x^2y-\eps b^2xy^2-b^2x^2z+2\eps ^2y^2z+2\eps xz^2-\eps ^2b^2yz^2"),
    ("gamma", "1/(1-t)", r"2x^2y-b^2xy^2-\eps b^2x^2z+2\eps y^2z+2\eps ^2xz^2-\eps ^2b^2yz^2"),
    ("v", "-1", r"x^3-2 y^3+z^3"),
    ("h", "-1", r"x^2y+\eps^2xy^2+\eps^2x^2z+y^2z+xz^2+\eps^2yz^2"),
    ("delta", "-1", r"x^2y+xy^2+\eps ^2x^2z+\eps ^2y^2z+\eps xz^2+\eps yz^2"),
    ("gamma", "-1", r"x^2y+\eps xy^2+x^2z+\eps y^2z+\eps^2 xz^2+\eps yz^2"),
    ("v", "1/2", r"x^3+y^3-2z^3"),
    ("h", "1/2", r"x^2y+\eps xy^2+\eps x^2z+y^2z+xz^2+\eps yz^2"),
    ("delta", "1/2", r"x^2y+\eps ^2xy^2+\eps x^2z+\eps ^2y^2z+\eps xz^2+yz^2"),
    ("gamma", "1/2", r"x^2y+\eps xy^2+\eps ^2x^2z+\eps y^2z+\eps ^2xz^2+yz^2"),
    ("v", "2", r"2x^3-y^3-z^3"),
    ("h", "2", r"x^2z+xz^2+x^2y+z^2y+xy^2+zy^2"),
    ("delta", "2", r"x^2y+\eps xy^2+x^2z+\eps ^2y^2z+\eps xz^2+\eps ^2yz^2"),
    ("gamma", "2", r"x^2y+xy^2+\eps x^2z+\eps y^2z+\eps ^2xz^2+\eps ^2yz^2"),
]

_TOKEN = re.compile(r"\s*(\\eps|\d+|[xyzbe]|\^|[()+\-*/])")


def parse_typeset(text: str) -> Form:
    """Parse a typeset polynomial with implicit products, e.g. '\\eps^2bxy^2'."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        tok = m.group(1)
        tokens.append("e" if tok == r"\eps" else tok)
        pos = m.end()
    out = []
    prev = None
    for tok in tokens:
        # juxtaposition is a product; "^" never ends a factor, so exponents
        # stay attached
        if prev is not None and (prev == ")" or prev.isalnum()) and (tok == "(" or tok.isalnum()):
            out.append("*")
        out.append(tok)
        prev = tok
    return parse_form("".join(out))


_LABEL_VALUES = {
    "-e": lambda t: -EPS,
    "-e^2": lambda t: -EPS * EPS,
    "t": lambda t: t,
    "1/(1-t)": lambda t: 1 / (1 - t),
    "1-1/t": lambda t: 1 - 1 / t,
    "1/t": lambda t: 1 / t,
    "1/(1-1/t)": lambda t: 1 / (1 - 1 / t),
    "1-t": lambda t: 1 - t,
    "-1": lambda t: KElem.from_rational(-1),
    "1/2": lambda t: KElem.from_rational(Fraction(1, 2)),
    "2": lambda t: KElem.from_rational(2),
}


def label_value(label: str) -> KElem:
    return _LABEL_VALUES[label](tau())


def printed_list(m: int) -> list[tuple[str, str, Form]]:
    """(pencil, label, cubic) for the printed cubics of order <= m."""
    if m == 1:
        rows = PRINTED_ORDER1
    elif m == 2:
        rows = PRINTED_ORDER1 + PRINTED_ORDER2
    else:
        raise ValueError("printed lists exist for m = 1, 2")
    return [(t, lab, parse_typeset(txt)) for t, lab, txt in rows]


# ---------------------------------------------------------------------------
# generation


def normalize_cubic(C: Form) -> Form:
    """First nonzero coefficient 1, then denominators cleared and integer
    content removed (a fixed representative of the curve)."""
    if C.is_zero():
        raise ValueError("cannot normalize the zero form")
    f = C.normalized()
    den = 1
    for c in f.terms.values():
        den = lcm(den, c.den)
    g = 0
    for c in f.terms.values():
        for n in c.num:
            g = gcd(g, n * (den // c.den))
    return f.scale(Fraction(den, g))


@dataclass
class HalphenSet:
    order: int
    cubics: dict = field(default_factory=dict)  # pencil -> {u: Form}

    def items(self):
        for t in PENCILS:
            for u, C in sorted(self.cubics[t].items(), key=lambda kv: kv[0].sort_key()):
                yield t, u, C

    def __len__(self):
        return sum(len(v) for v in self.cubics.values())

    def to_json(self) -> list:
        return [
            {
                "pencil": t,
                "parameter": kelem_to_json(u),
                "coeffs": [kelem_to_json(c) for c in C.coeffs()],
            }
            for t, u, C in self.items()
        ]


@lru_cache(maxsize=None)
def halphen_cubics(m: int) -> HalphenSet:
    params = p1_torsion_exact(m)
    out = HalphenSet(m, {t: {} for t in PENCILS})
    for t in PENCILS:
        pts = base_points(t)
        for u in params:
            if u in (KElem.from_rational(0), KElem.from_rational(1)) or u == INF:
                raise ValueError("a torsion parameter hit a singular member")
            C = normalize_cubic(pencil_member(t, u))
            for p in pts:
                if evaluate(C, p.coords) or not any(gradient(C, p.coords)):
                    raise ArithmeticError(f"{t}_{u}: base point {p} not a smooth point")
            out.cubics[t][u] = C
    return out


# ---------------------------------------------------------------------------
# reconciliation


def _printed_pencil_member(t: str, u: KElem) -> Form:
    P = PRINTED_SINGULAR_MEMBERS
    return P[(t, 0)] + P[(t, INF)].scale(u)


def _diagnose(t: str, lab: str, C: Form, gen_norm: dict) -> dict:
    """Why a printed cubic has no partner: base points it misses and the
    generated cubic differing from it in the fewest coefficients."""
    missed = sum(1 for p in base_points(t) if evaluate(C, p.coords))
    best = min(
        gen_norm,
        key=lambda G: sum(a != b for a, b in zip(G.coeffs(), C.coeffs())),
    )
    diff = [
        {"monomial": "x^%d*y^%d*z^%d" % mono, "printed": str(a), "generated": str(b)}
        for mono, a, b in zip(CUBIC_MONOMIALS, C.coeffs(), best.coeffs())
        if a != b
    ]
    return {
        "pencil": t,
        "label": lab,
        "base_points_missed": missed,
        "nearest_generated_parameter": str(gen_norm[best]),
        "coefficient_differences": diff,
    }


def match_paper_list(m: int) -> dict:
    """Per pencil, match generated cubics with printed ones up to scalar."""
    gen = halphen_cubics(m)
    printed = printed_list(m)
    report = {"order": m, "pencils": {}, "unmatched_generated": [], "unmatched_printed": []}
    label_audit = []
    for t in PENCILS:
        gen_norm = {normalize_cubic(C): u for u, C in gen.cubics[t].items()}
        rows = [(lab, normalize_cubic(C)) for s, lab, C in printed if s == t]
        matched = 0
        for lab, C in rows:
            if C in gen_norm:
                matched += 1
            else:
                report["unmatched_printed"].append(_diagnose(t, lab, C, gen_norm))
        printed_set = {C for _, C in rows}
        for C, u in gen_norm.items():
            if C not in printed_set:
                report["unmatched_generated"].append({"pencil": t, "parameter": str(u)})
        report["pencils"][t] = {"generated": len(gen_norm), "printed": len(rows), "matched": matched}
        for lab, C in rows:
            u = label_value(lab)
            by_def = normalize_cubic(pencil_member(t, u)) == C
            by_typeset = normalize_cubic(_printed_pencil_member(t, u)) == C
            actual = gen_norm.get(C)
            if not by_def:
                label_audit.append(
                    {
                        "pencil": t,
                        "label": lab,
                        "generated_parameter": None if actual is None else str(actual),
                        "agrees_with_typeset_singular_members": by_typeset,
                    }
                )
    labels = [(t, lab) for t, lab, _ in printed]
    report["duplicate_labels"] = sorted(
        {f"{t}:{lab}" for t, lab in labels if labels.count((t, lab)) > 1}
    )
    report["label_discrepancies"] = label_audit
    report["total_generated"] = len(gen)
    report["total_printed"] = len(printed)
    report["all_matched"] = not report["unmatched_generated"] and not report["unmatched_printed"]
    report["aronhold_S_zero"] = all(aronhold_S(C).is_zero() for _, _, C in gen.items())
    return report


# ---------------------------------------------------------------------------
# display


def kelem_to_latex(a: KElem) -> str:
    return format_kelem(a).replace("e", r"\eps").replace("*", "")


# order used by the printed lists: x^3, y^3, z^3, x^2y, xy^2, x^2z, y^2z, xz^2, yz^2
DISPLAY_ORDER = [
    (3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (1, 2, 0),
    (2, 0, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1),
]


def cubic_to_plain(C: Form) -> str:
    return C.to_string(DISPLAY_ORDER)


def cubic_to_latex(C: Form) -> str:
    s = cubic_to_plain(C)
    return s.replace("e", r"\eps ").replace("*", "")


def cubic_monomial_order() -> list:
    """Coefficient order used by the JSON output."""
    return list(CUBIC_MONOMIALS)
