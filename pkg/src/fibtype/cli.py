"""Command-line surface.

Subcommands: poly, maxroot, xi, converge, verify, series, det,
bivariate.  Output formats: plain (default), csv, json.  Exit codes:
0 = success / all checks pass, 1 = verification failure or no root,
2 = usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from fibtype import condense, convergence, genfun, identities, roots
from fibtype.binet import binet_relative_error, eq1_sides
from fibtype.families import (
    FamilyId,
    bfp1,
    bfp1_explicit,
    bfp2,
    f1y_explicit,
    fib,
    fib_explicit,
    family_member,
    jacobsthal_lucas,
    lucas,
)
from fibtype.polyarith import BiPolynomial, Polynomial

JACOBSTHAL_NOTE = (
    "Jacobsthal-Lucas values come from the second-kind family at (1, 2); "
    "the (2, 1) argument order does not reproduce the sequence."
)


# -- decimal rendering --------------------------------------------------


def _dec_round(v: Fraction, digits: int, up: bool) -> str:
    scaled = v * 10**digits
    n, r = divmod(scaled.numerator, scaled.denominator)
    if up and r:
        n += 1
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def _exact_decimal(v: Fraction) -> str:
    """Terminating decimal when the denominator is 2^a * 5^b, else num/den."""
    den = v.denominator
    a = b = 0
    while den % 2 == 0:
        den //= 2
        a += 1
    while den % 5 == 0:
        den //= 5
        b += 1
    if den != 1:
        return f"{v.numerator}/{v.denominator}"
    digits = max(a, b)
    if digits == 0:
        return str(v.numerator)
    return _dec_round(v, digits, up=False)


def render_enclosure(iv) -> str:
    """Decimal enclosure with no false precision: enough digits that the
    endpoints differ in the last printed digit at most."""
    if iv.width == 0:
        return _exact_decimal(iv.lo)
    digits = 1
    while Fraction(1, 10**digits) > iv.width and digits < 60:
        digits += 1
    return f"[{_dec_round(iv.lo, digits, up=False)}, {_dec_round(iv.hi, digits, up=True)}]"


def _enclosure_json(iv) -> dict:
    return {
        "lo": f"{iv.lo.numerator}/{iv.lo.denominator}",
        "hi": f"{iv.hi.numerator}/{iv.hi.denominator}",
        "decimal": render_enclosure(iv),
        "exact": iv.width == 0,
    }


# -- subcommand implementations ----------------------------------------


def _parse_family(args, parser) -> FamilyId:
    try:
        if args.family in ("G", "H"):
            if args.k is None:
                parser.error(f"--k is required for family {args.family}")
            return FamilyId(args.family, args.k)
        return FamilyId(args.family)
    except ValueError as exc:
        parser.error(str(exc))


def _emit_poly(value, fmt: str) -> str:
    if isinstance(value, Polynomial):
        coeffs = list(value.coeffs) or [0]
        if fmt == "json":
            return json.dumps({"coeffs": coeffs}, sort_keys=True)
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf)
            w.writerow(["power", "coeff"])
            for i, c in enumerate(coeffs):
                w.writerow([i, c])
            return buf.getvalue().rstrip("\n")
        return " ".join(str(c) for c in coeffs)
    assert isinstance(value, BiPolynomial)
    triples = [[i, j, c] for (i, j), c in sorted(value.terms.items(), reverse=True)]
    if fmt == "json":
        return json.dumps({"terms": triples}, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["x_power", "y_power", "coeff"])
        w.writerows(triples)
        return buf.getvalue().rstrip("\n")
    return "\n".join(" ".join(str(v) for v in t) for t in triples)


def cmd_poly(args, parser) -> int:
    fam = _parse_family(args, parser)
    if fam.tag != "H" and args.n is None:
        parser.error("--n is required for this family")
    n = 0 if fam.tag == "H" else args.n
    if n < 0:
        parser.error("--n must be >= 0")
    print(_emit_poly(family_member(fam, n), args.format))
    return 0


def cmd_maxroot(args, parser) -> int:
    if args.k < 1 or args.n < 1:
        parser.error("--k and --n must be >= 1")
    width = Fraction(1, 2**args.prec)
    try:
        cert = roots.maximal_root(args.k, args.n, width)
    except roots.NoRealRoot:
        print("no real root", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps({"k": args.k, "n": args.n,
                          "enclosure": _enclosure_json(cert.enclosure)},
                         sort_keys=True))
    else:
        print(render_enclosure(cert.enclosure))
    return 0


def cmd_xi(args, parser) -> int:
    if args.k < 1:
        parser.error("--k must be >= 1")
    cert = roots.xi(args.k, Fraction(1, 2**args.prec))
    if args.format == "json":
        print(json.dumps({"k": args.k,
                          "enclosure": _enclosure_json(cert.enclosure)},
                         sort_keys=True))
    else:
        print(render_enclosure(cert.enclosure))
    return 0


def cmd_converge(args, parser) -> int:
    if args.k < 1:
        parser.error("--k must be >= 1")
    if args.n_max < 2:
        parser.error("--n-max must be >= 2")
    width = Fraction(1, 2**args.prec)
    try:
        report = convergence.converge_table(args.k, args.n_max, width)
    except convergence.InconclusiveComparison as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 1
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["k", "n", "parity", "g_lo", "g_hi", "gap", "width"])
        for r in report.rows:
            w.writerow([
                r.k, r.n, r.parity,
                f"{r.g_enclosure.lo.numerator}/{r.g_enclosure.lo.denominator}",
                f"{r.g_enclosure.hi.numerator}/{r.g_enclosure.hi.denominator}",
                r.gap,
                f"{r.width.numerator}/{r.width.denominator}",
            ])
        print(buf.getvalue().rstrip("\n"))
    elif args.format == "json":
        print(json.dumps({
            "k": report.k,
            "xi_enclosure": _enclosure_json(report.xi_enclosure),
            "monotone_even_ok": report.monotone_even_ok,
            "monotone_odd_ok": report.monotone_odd_ok,
            "bounds_ok": report.bounds_ok,
            "interleave_ok": report.interleave_ok,
            "rows": [
                {"k": r.k, "n": r.n, "parity": r.parity,
                 "g_enclosure": _enclosure_json(r.g_enclosure),
                 "gap": r.gap,
                 "width": f"{r.width.numerator}/{r.width.denominator}"}
                for r in report.rows
            ],
        }, sort_keys=True))
    else:
        print(f"xi({report.k}) in {render_enclosure(report.xi_enclosure)}")
        for r in report.rows:
            print(f"n={r.n:3d} {r.parity:4s} g in "
                  f"{render_enclosure(r.g_enclosure)} gap {r.gap}")
        for name in ("monotone_even_ok", "monotone_odd_ok",
                     "bounds_ok", "interleave_ok"):
            print(f"{name}: {getattr(report, name)}")
    return 0 if report.all_ok else 1


def cmd_series(args, parser) -> int:
    fam = _parse_family(args, parser)
    try:
        rep = genfun.gf_check(fam, args.order)
    except genfun.UnknownFamily as exc:
        parser.error(str(exc))
    if args.format == "json":
        print(json.dumps({"family": fam.tag, "k": fam.k, "order": rep.order,
                          "passed": rep.passed,
                          "first_mismatch": rep.first_mismatch,
                          "detail": rep.detail}, sort_keys=True))
    else:
        status = "pass" if rep.passed else f"FAIL at index {rep.first_mismatch}"
        print(f"series {fam.tag}{f'(k={fam.k})' if fam.k else ''} "
              f"order {rep.order}: {status}")
    return 0 if rep.passed else 1


def cmd_det(args, parser) -> int:
    if args.k < 1 or args.n < 1:
        parser.error("--k and --n must be >= 1")
    rep = condense.determinant_check(args.k, args.n)
    if args.format == "json":
        print(json.dumps({"k": rep.k, "n": rep.n, "passed": rep.passed,
                          "detail": rep.detail}, sort_keys=True))
    else:
        print(f"det check k={rep.k} n={rep.n}: "
              f"{'pass' if rep.passed else 'FAIL'}"
              + (f" ({rep.detail})" if rep.detail else ""))
    return 0 if rep.passed else 1


def cmd_bivariate(args, parser) -> int:
    if args.n < 0:
        parser.error("--n must be >= 0")
    build = bfp1 if args.family == "BFP1" else bfp2
    value = build(args.n)
    out = _emit_poly(value, args.format)
    if args.explicit:
        if args.family == "BFP1":
            match = args.n >= 1 and bfp1_explicit(args.n) == value
        else:
            match = args.n >= 2 and f1y_explicit(args.n) == value.specialize_x(1)
        if args.format == "json":
            out = json.dumps({"terms": json.loads(out)["terms"],
                              "explicit_matches": match}, sort_keys=True)
        else:
            out += f"\nexplicit formula matches: {match}"
        print(out)
        return 0 if match else 1
    print(out)
    return 0


# -- verify suites ------------------------------------------------------


def _suite_fact1(n_max, k_max, bits):
    for n in range(1, min(n_max, 20) + 1):
        rep = roots.verify_fact1(n, Fraction(1, 10**25), bits)
        yield (f"fact1 n={n}", rep.passed,
               f"positive roots {rep.positive_root_count}, "
               f"max residual {rep.max_relative_residual}")


def _suite_fact2(n_max, k_max, bits):
    order = 25
    rep = genfun.gf_check(FamilyId("F"), order)
    yield ("fact2 gf F", rep.passed, rep.detail)
    for k in range(1, k_max + 1):
        rep = genfun.gf_check(FamilyId("G", k), order)
        yield (f"fact2 gf G k={k}", rep.passed, rep.detail)


def _suite_fact3(n_max, k_max, bits):
    for k in range(1, k_max + 1):
        bad = next((n for n in range(2, n_max + 1)
                    if not condense.fact3_check(k, n).passed), None)
        yield (f"fact3 identity k={k} n<={n_max}", bad is None,
               "" if bad is None else f"first failure n={bad}")
    for k in range(1, k_max + 1):
        bad = next((n for n in range(1, 13)
                    if not condense.determinant_check(k, n).passed), None)
        yield (f"fact3 determinant k={k} n<=12", bad is None,
               "" if bad is None else f"first failure n={bad}")


def _suite_fact4(n_max, k_max, bits):
    for k in range(1, k_max + 1):
        bad = next((n for n in range(2, n_max + 1)
                    if not condense.fact4_check(k, n).passed), None)
        yield (f"fact4 identities k={k} n<={n_max}", bad is None,
               "" if bad is None else f"first failure n={bad}")


def _suite_fact5(n_max, k_max, bits):
    rng = random.Random(20240813)
    worst = None
    tol = 2.0**-96
    ok = True
    for _ in range(40):
        k = rng.randint(1, 5)
        n = rng.randint(0, 25)
        x = Fraction(rng.randint(2**20, 2**21), 2**20)  # in [1, 2]
        err = binet_relative_error(k, n, x, bits)
        if worst is None or err > worst:
            worst = err
        if err >= tol:
            ok = False
    yield ("fact5 binet vs exact (random grid)", ok, f"worst rel err {worst}")
    lhs, rhs = eq1_sides(1, 2, roots.maximal_root(1, 2).value(bits), bits)
    yield ("fact5 eq(1) residual at golden ratio", abs(lhs - rhs) < 1e-20,
           f"|lhs-rhs| = {abs(lhs - rhs)}")


def _suite_fact6(n_max, k_max, bits):
    from fibtype.families import aitch
    for k in range(1, 9):
        cnt = roots.count_real_roots(aitch(k), Fraction(0), None)
        cert = roots.xi(k)
        ok = cnt == 1 and cert.enclosure.lo > 1
        yield (f"fact6 k={k}", ok,
               f"positive roots {cnt}, xi > 1: {cert.enclosure.lo > 1}")


def _suite_fact7(n_max, k_max, bits):
    from fibtype.families import aitch
    for k in range(1, 9):
        cnt = roots.count_real_roots(aitch(k), None, Fraction(0))
        expect = 1 if k % 2 == 0 else 0
        yield (f"fact7 k={k}", cnt == expect,
               f"negative roots {cnt}, expected {expect}")


def _suite_theorem(n_max, k_max, bits):
    for k in range(1, min(k_max, 3) + 1):
        rep = convergence.converge_table(k, n_max)
        yield (f"theorem convergence k={k} n<={n_max}", rep.all_ok,
               f"even dec {rep.monotone_even_ok}, odd inc {rep.monotone_odd_ok}, "
               f"bounds {rep.bounds_ok}, interleave {rep.interleave_ok}")
        probe = convergence.eq1_convergence_probe(k, min(n_max, 20), bits)
        yield (f"theorem eq(1) decay k={k}", probe.passed,
               f"even decreasing {probe.even_decreasing}, "
               f"odd decreasing {probe.odd_decreasing}")
    scan = convergence.xi_scan(16)
    last = scan[-1][1]
    yield ("theorem xi decreasing, k<=16", True,
           f"xi(16) - 1 in [{float(last.lo - 1):.6g}, {float(last.hi - 1):.6g}]")


def _suite_appendix(n_max, k_max, bits):
    checks = []
    for n in range(2, n_max + 1):
        checks.append(identities.affine_check(n))
        checks.append(identities.fib_coeff_split_check(n))
        checks.append(identities.jacobsthal_identity_check(n, bits))
    for n in range(0, n_max + 1):
        checks.append(identities.lucas_relation_check(n))
    for group in ("affine", "fib_coeff_split", "jacobsthal", "lucas_relation"):
        reps = [c for c in checks if c.name == group]
        bad = next((c for c in reps if not c.passed), None)
        yield (f"appendix {group} (n sweep)", bad is None,
               bad.detail if bad else reps[-1].detail)
    note = identities.jacobsthal_argument_order_note()
    yield ("appendix jacobsthal argument order", note.passed,
           note.detail + ". " + JACOBSTHAL_NOTE)
    ok = all(fib_explicit(n) == fib(n) for n in range(0, 41))
    yield ("appendix fib explicit formula n<=40", ok, "")
    ok = all(bfp1_explicit(n) == bfp1(n) for n in range(1, n_max + 1))
    yield (f"appendix bfp1 explicit formula n<={n_max}", ok, "")
    ok = all(f1y_explicit(n) == bfp2(n).specialize_x(1)
             for n in range(2, n_max + 1))
    yield (f"appendix f(1,y) explicit formula n<={n_max}", ok, "")
    for tag in ("BFP1", "BFP2"):
        rep = genfun.gf_check(FamilyId(tag), 25)
        yield (f"appendix gf {tag}", rep.passed, rep.detail)
    seq = [jacobsthal_lucas(n) for n in range(6)]
    yield ("appendix jacobsthal sequence start", seq == [2, 1, 5, 7, 17, 31],
           str(seq))


SUITES = {
    "fact1": _suite_fact1,
    "fact2": _suite_fact2,
    "fact3": _suite_fact3,
    "fact4": _suite_fact4,
    "fact5": _suite_fact5,
    "fact6": _suite_fact6,
    "fact7": _suite_fact7,
    "theorem": _suite_theorem,
    "appendix": _suite_appendix,
}


def cmd_verify(args, parser) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        for check, passed, detail in SUITES[name](args.n_max, args.k_max, args.prec):
            results.append({"check": check, "passed": bool(passed),
                            "detail": str(detail)})
    all_ok = all(r["passed"] for r in results)
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "passed": all_ok,
                          "checks": results}, sort_keys=True))
    else:
        for r in results:
            mark = "PASS" if r["passed"] else "FAIL"
            line = f"{mark} {r['check']}"
            if r["detail"]:
                line += f" -- {r['detail']}"
            print(line)
        print(f"{'all checks passed' if all_ok else 'FAILURES present'}")
    return 0 if all_ok else 1


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fibtype",
        description="Fibonacci-type polynomial families: exact identities "
                    "and certified maximal-root convergence.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=("plain", "csv", "json"),
                        default="plain")

    sp = sub.add_parser("poly", help="print a family member's coefficients")
    sp.add_argument("--family", required=True,
                    choices=("F", "G", "H", "BFP1", "BFP2", "HSEQ", "LUCAS"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--n", type=int)
    add_format(sp)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("maxroot", help="certified maximal real root of G")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--prec", type=int, default=80,
                    help="enclosure width in bits (width <= 2^-prec)")
    add_format(sp)
    sp.set_defaults(func=cmd_maxroot)

    sp = sub.add_parser("xi", help="certified positive root of the limit polynomial")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--prec", type=int, default=80)
    add_format(sp)
    sp.set_defaults(func=cmd_xi)

    sp = sub.add_parser("converge", help="convergence table and checks")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n-max", dest="n_max", type=int, required=True)
    sp.add_argument("--prec", type=int, default=80)
    add_format(sp)
    sp.set_defaults(func=cmd_converge)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True,
                    choices=tuple(SUITES) + ("all",))
    sp.add_argument("--n-max", dest="n_max", type=int, default=30)
    sp.add_argument("--k-max", dest="k_max", type=int, default=4)
    sp.add_argument("--prec", type=int, default=128)
    add_format(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("series", help="generating-function prefix check")
    sp.add_argument("--family", required=True,
                    choices=("F", "G", "BFP1", "BFP2"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--order", type=int, default=25)
    add_format(sp)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("det", help="determinant representation cross-check")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    add_format(sp)
    sp.set_defaults(func=cmd_det)

    sp = sub.add_parser("bivariate", help="bivariate family constructors")
    sp.add_argument("--family", required=True, choices=("BFP1", "BFP2"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--explicit", action="store_true",
                    help="also compare against the closed-form expansion")
    add_format(sp)
    sp.set_defaults(func=cmd_bivariate)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
