"""Command line front end: ``halphen <command> [options]``.

Exit status is 0 when every check passes, 1 when a check fails and 2 for
usage errors.  Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .certificate import Certificate, canonical_json
from .numfield import format_kelem, kelem_to_json, minimal_polynomial

STATED_SEXTIC = (1, -3, 0, 5, 0, -3, 1)  # x^6-3x^5+5x^3-3x+1, low to high


def _fmt_poly(coeffs) -> str:
    """Monic rational polynomial, coefficients low to high, as text."""
    deg = len(coeffs) - 1
    parts = []
    for k in range(deg, -1, -1):
        c = Fraction(coeffs[k])
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and abs(c) == 1:
            s = mono
        else:
            s = f"{abs(c)}{'*' + mono if mono else ''}"
        parts.append(("-" if c < 0 else "+") + s)
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def _kelem_latex(a) -> str:
    from .cubics import kelem_to_latex

    return kelem_to_latex(a)


# ---------------------------------------------------------------------------
# commands; each returns (certificate, plain lines, latex lines)


def cmd_cubics(args):
    from .cubics import cubic_to_latex, cubic_to_plain, halphen_cubics, match_paper_list

    H = halphen_cubics(args.order)
    cert = Certificate("cubics", {"order": args.order})
    k = 3 * args.order**2 - 1
    cert.check(f"{4 * k} cubics", len(H) == 4 * k, len(H))
    rows = []
    for t, u, C in H.items():
        rows.append({"pencil": t, "parameter": kelem_to_json(u), "polynomial": cubic_to_plain(C),
                     "coeffs": [kelem_to_json(c) for c in C.coeffs()]})
    cert.data["cubics"] = rows
    if args.compare:
        report = match_paper_list(args.order)
        cert.data["comparison"] = report
        cert.check("generated set matches the printed list", report["all_matched"],
                   report["unmatched_printed"])
    plain = [r["polynomial"] for r in rows]
    latex = [
        f"C_{{{t}_{{{_kelem_latex(u)}}}}} &=& {cubic_to_latex(C)} \\\\" for t, u, C in H.items()
    ]
    return cert.finish(), plain, latex


def cmd_params(args):
    from .torsion import p1_torsion_exact

    cert = Certificate("params", {"order": args.order, "numeric": args.numeric})
    m = args.order
    plain, latex = [], []
    if args.numeric:
        import mpmath

        from .numeric import exact_set_distance, p1_torsion_numeric, s3_closure_defect

        vals = p1_torsion_numeric(m, args.digits)
        cert.check(f"{3 * m * m - 1} values", len(vals) == 3 * m * m - 1, len(vals))
        tol = mpmath.mpf(10) ** (10 - args.digits)
        cert.check("S3-closed", s3_closure_defect(vals) < tol)
        if m in (1, 2):
            d = exact_set_distance(m, args.digits)
            cert.check("agrees with the exact set", d < tol, mpmath.nstr(d, 5))
        strs = [mpmath.nstr(v, args.digits) for v in vals]
        cert.data["values"] = strs
        plain = latex = strs
        return cert.finish(), plain, latex
    if m not in (1, 2):
        raise UsageError("exact parameters are available for --order 1 or 2 (use --numeric)")
    P = p1_torsion_exact(m)
    cert.check(f"{3 * m * m - 1} values", len(P) == 3 * m * m - 1, len(P))
    cert.check("S3-invariant", P.is_s3_invariant())
    rational = [u for u in P if u.is_rational()]
    p3 = set(p1_torsion_exact(1)) if m == 2 else set()
    irrational = [u for u in P if not u.is_rational() and u not in p3]
    polys = sorted({minimal_polynomial(u) for u in irrational})
    cert.data["values"] = [kelem_to_json(u) for u in P]
    cert.data["rational"] = sorted(str(u.rational()) for u in rational)
    cert.data["minimal_polynomials"] = [_fmt_poly(p) for p in polys]
    if m == 2:
        cert.check("3 rational values -1, 1/2, 2",
                   sorted(u.rational() for u in rational) == [-1, Fraction(1, 2), 2])
        cert.check("6 irrational values share one minimal polynomial of degree 6",
                   len(irrational) == 6 and len(polys) == 1 and len(polys[0]) == 7)
        cert.check("contains P^1[3]", p3 <= set(P))
        cert.data["matches_stated_sextic"] = polys == [tuple(Fraction(c) for c in STATED_SEXTIC)]
    plain = [format_kelem(u) for u in P]
    latex = [_kelem_latex(u) for u in P]
    return cert.finish(), plain, latex


def cmd_census(args):
    from .audit import census

    if args.order not in (1, 2):
        raise UsageError("the census is available for --order 1 or 2")
    report, cert = census(args.order, seed=args.seed, jobs=args.jobs)
    d = report.to_dict()
    plain = [
        f"order {report.order} (n = {report.n})",
        f"vertex multiplicities: {sorted({v['multiplicity'] for v in d['vertices']})}",
        f"triple points: {d['triple_total']}",
        f"quadruple points: {d['quadruple_total']}",
        f"pair patterns: {d['pair_patterns']}",
        f"Harbourne index: {d['harbourne_index']}",
    ]
    return cert, plain, plain


def cmd_hindex(args):
    from .audit import harbourne_index

    cert = Certificate("hindex", {"n": args.n, "table": args.table})
    if args.table:
        try:
            lo, hi = (int(s) for s in args.table.split(".."))
        except ValueError as exc:
            raise UsageError("--table expects N1..N2") from exc
        ns = [n for n in range(lo, hi + 1) if n > 0 and n % 3 == 0]
    else:
        if args.n is None:
            raise UsageError("hindex needs --n or --table")
        ns = [args.n]
    try:
        values = {n: harbourne_index(n) for n in ns}
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cert.data["values"] = {str(n): str(h) for n, h in values.items()}
    if len(ns) == 1:
        plain = [str(values[ns[0]])]
    else:
        plain = [f"{n} {h} {float(h):.6f}" for n, h in values.items()]
    latex = [f"h({n}) = {_frac_latex(h)}" for n, h in values.items()]
    return cert.finish(), plain, latex


def _frac_latex(h: Fraction) -> str:
    if h.denominator == 1:
        return str(h.numerator)
    sign = "-" if h < 0 else ""
    return f"{sign}\\frac{{{abs(h.numerator)}}}{{{h.denominator}}}"


def cmd_hesse(args):
    from .hesse import verify_dual_hesse, verify_flexes, verify_pencils, verify_printed_members

    cert = Certificate("hesse verify")
    for sub, prefix in ((verify_dual_hesse(), "dual Hesse: "), (verify_flexes(), "flexes: "),
                        (verify_pencils(), "pencils: ")):
        cert.merge(sub, prefix)
    cert.data["printed_singular_members"] = _jsonable(verify_printed_members())
    return cert.finish(), _check_lines(cert), _check_lines(cert)


def cmd_abelian(args):
    from .abelian import verify_abelian

    cert = verify_abelian()
    return cert, _check_lines(cert), _check_lines(cert)


def cmd_crosscheck(args):
    import mpmath

    from .numeric import branch_values, exact_set_distance, p1_torsion_numeric, s3_closure_defect

    cert = Certificate("crosscheck", {"digits": args.digits, "order": args.order})
    tol = mpmath.mpf(10) ** (10 - args.digits)
    for m in (1, 2):
        d = exact_set_distance(m, args.digits)
        cert.check(f"m={m}: numeric set = embedded exact set", d < tol, mpmath.nstr(d, 5))
    m = args.order or 3
    vals = p1_torsion_numeric(m, args.digits)
    cert.check(f"m={m}: {3 * m * m - 1} values", len(vals) == 3 * m * m - 1, len(vals))
    cert.check(f"m={m}: S3-closed", s3_closure_defect(vals) < tol)
    bv = branch_values(args.digits)
    fin = bv["finite"]
    cert.check("finite branch values are +-i c",
               all(abs(v.real) < tol * bv["c"] for v in fin) and abs(fin[0] + fin[1]) < tol * bv["c"])
    cert.data["branch_constant_c"] = mpmath.nstr(bv["c"], 30)
    return cert.finish(), _check_lines(cert), _check_lines(cert)


def _check_lines(cert: Certificate) -> list[str]:
    return [f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}" for c in cert.checks]


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return str(v)


# ---------------------------------------------------------------------------


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    from .audit import default_jobs

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    common.add_argument("--json", action="store_const", const="json", dest="format",
                        help="same as --format json")
    common.add_argument("--jobs", type=int, default=default_jobs(),
                        help="worker processes (default: $HALPHEN_JOBS or 1)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--digits", type=int, default=60)

    p = argparse.ArgumentParser(prog="halphen", description="Halphen cubics and their verification.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cubics", parents=[common], help="list the Halphen cubics of order m")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--compare", action="store_true", help="compare with the printed lists")
    c.set_defaults(func=cmd_cubics)

    c = sub.add_parser("params", parents=[common], help="torsion parameters P^1[3m]")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--numeric", action="store_true")
    c.set_defaults(func=cmd_params)

    c = sub.add_parser("census", parents=[common], help="singularity census of H_m")
    c.add_argument("--order", type=int, required=True)
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("hindex", parents=[common], help="Harbourne index of H(n)")
    c.add_argument("--n", type=int)
    c.add_argument("--table", metavar="N1..N2")
    c.set_defaults(func=cmd_hindex)

    for name, func, text in (("hesse", cmd_hesse, "Hesse configuration"),
                             ("abelian", cmd_abelian, "calculus on T x T")):
        c = sub.add_parser(name, help=f"verify the {text}")
        s = c.add_subparsers(dest="action", required=True)
        v = s.add_parser("verify", parents=[common])
        v.set_defaults(func=func)

    c = sub.add_parser("crosscheck", parents=[common], help="numeric versus exact parameters")
    c.add_argument("--order", type=int, default=None, help="extra order checked numerically")
    c.set_defaults(func=cmd_crosscheck)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1 or args.digits < 10:
        parser.error("--jobs must be positive and --digits at least 10")
    if getattr(args, "order", None) is not None and args.order < 1:
        parser.error("--order must be positive")
    try:
        cert, plain, latex = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    if args.format == "json":
        out = cert.to_dict()
        if args.command == "census":
            out = dict(cert.data["report"], certificate={k: v for k, v in out.items() if k != "data"})
        print(canonical_json(out))
    else:
        print("\n".join(latex if args.format == "latex" else plain))
    if not cert.passed:
        print(json.dumps({"failures": cert.failures()}, default=str), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
