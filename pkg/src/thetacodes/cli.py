"""
Command-line front end.

    thetacodes coset-theta --level 7 --coset G --prec 10
    thetacodes code-theta --code c32.json --level 63 --prec 24
    thetacodes compare-levels --code c32.json --level 79 --level2 63
    thetacodes recover --code c32.json --level 7 --search
    thetacodes identities --level 3 7 11 15 --prec 40

Precision is given in whole powers of q: coefficients below q^prec are printed.
Exit codes: 0 ok, 1 a check failed, 2 bad input or level, 3 inconsistent
target, 4 insufficient precision.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import code_theta as ct
from .coset_theta import (CosetLabel, check_alpha_recomposition, check_coset_sum_identity,
                          coset_theta_enumerate, coset_theta_formula)
from .errors import InconsistentTarget, InsufficientPrecision, ThetaCodesError
from .exactq import Q4, from_json, has_order_term, parse_text, to_json, to_text
from .quadfield import make_level
from .recovery import RecoveryProblem, recover, search_codes_for_theta
from .ringcodes import load_code

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_INCONSISTENT, EXIT_PRECISION = 0, 1, 2, 3, 4


class UsageError(ThetaCodesError):
    code = "USAGE"


def default_prec(n: int, d: int) -> int:
    return max(40, n * d + 8)


def _level(args, ell=None):
    ell = args.level if ell is None else ell
    lv = make_level(ell, strict=args.strict_squarefree)
    if not lv.squarefree:
        print("warning: level %d is not squarefree" % lv.ell, file=sys.stderr)
    return lv


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def _mark(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_coset_theta(args) -> int:
    lv = _level(args)
    prec = Q4 * (args.prec or 40)
    series = coset_theta_formula(lv, args.coset, prec)
    ok = True
    if args.oracle:
        other = coset_theta_enumerate(lv, args.coset, prec)
        ok = series.agrees(other)
    if args.format == "json":
        obj = {"level": lv.ell, "coset": args.coset, "series": to_json(series)}
        if args.oracle:
            obj["enumeration"] = to_json(other)
            obj["agree"] = ok
        _emit(args, _dump(obj))
    elif args.oracle:
        _emit(args, "formula:     %s\nenumeration: %s\n%s"
              % (to_text(series), to_text(other), "PASS" if ok else "FAIL"))
    else:
        _emit(args, to_text(series))
    return EXIT_OK if ok else EXIT_CHECK


def cmd_code_theta(args) -> int:
    code = load_code(args.code)
    lv = _level(args)
    prec = Q4 * (args.prec or default_prec(code.length, lv.d))
    res = ct.theta_of_code(code, lv, prec)
    ok = True
    if args.oracle:
        other = ct.theta_of_code_enumerate(code, lv, prec)
        ok = res.series.agrees(other.series)
    if args.format == "json":
        obj = {"level": lv.ell, "code": code.describe(), "series": to_json(res.series)}
        if args.oracle:
            obj["agree"] = ok
        _emit(args, _dump(obj))
    else:
        text = to_text(res.series)
        if args.oracle:
            text += "\nenumeration: %s" % ("PASS" if ok else "FAIL")
        _emit(args, text)
    return EXIT_OK if ok else EXIT_CHECK


def cmd_compare_levels(args) -> int:
    if args.level2 is None or args.level == args.level2:
        raise UsageError("compare-levels needs --level and a different --level2")
    hi, lo = max(args.level, args.level2), min(args.level, args.level2)
    code = load_code(args.code)
    lv1, lv2 = _level(args, hi), _level(args, lo)
    prec = Q4 * (args.prec or default_prec(code.length, lv1.d))
    cmp = ct.compare_levels(code, lv1, lv2, prec)
    _emit(args, _dump(cmp.to_json()) if args.format == "json" else cmp.to_text())
    return EXIT_OK if cmp.passed else EXIT_CHECK


def _read_series(path: str, prec_q: int):
    with open(path) as f:
        text = f.read().strip()
    if text.startswith("{"):
        try:
            return from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise UsageError("series file is not valid JSON: %s" % exc) from exc
    # a bare polynomial is taken as exact: every unlisted coefficient is 0
    return parse_text(text, None if has_order_term(text) else prec_q)


def cmd_recover(args) -> int:
    lv = _level(args)
    if args.code:
        code = load_code(args.code)
        n = args.n or code.length
        prec = Q4 * (args.prec or default_prec(n, lv.d))
        target = ct.theta_of_code(code, lv, prec).series
    elif args.series:
        if not args.n:
            raise UsageError("--n is required with --series")
        n = args.n
        target = _read_series(args.series, args.prec or default_prec(n, lv.d))
    else:
        raise UsageError("recover needs --code or --series")
    outcome = recover(RecoveryProblem(n, lv, target))
    matches = search_codes_for_theta(target, n, lv) if args.search else None
    if args.format == "text":
        lines = ["n=%d l=%d regime=%s delta=%d delta_lower_bound=%d"
                 % (n, lv.ell, outcome.regime.value, outcome.delta, outcome.delta_lower_bound)]
        poly = outcome.unique_polynomial()
        if poly is not None:
            lines.append("swe = %s" % poly)
        for c in matches or []:
            lines.append("match: %s" % c)
        _emit(args, "\n".join(lines))
    else:
        _emit(args, _dump(outcome.to_json(matches)))
    return EXIT_OK


def cmd_identities(args) -> int:
    levels = [make_level(ell, strict=args.strict_squarefree) for ell in args.level]
    prec = Q4 * (args.prec or 40)
    failed = False
    rows = []
    for lv in levels:
        if not lv.squarefree:
            print("warning: level %d is not squarefree" % lv.ell, file=sys.stderr)
        coset_sum = check_coset_sum_identity(lv, prec)
        oracle = {lab.value: coset_theta_formula(lv, lab, prec).agrees(coset_theta_enumerate(lv, lab, prec))
                  for lab in CosetLabel}
        alpha = {lab.value: v for lab, v in check_alpha_recomposition(lv, prec).items()}
        ok = coset_sum and all(oracle.values()) and all(alpha.values())
        failed |= not ok
        rows.append({"level": lv.ell, "coset_sum": coset_sum, "oracle": oracle, "alpha": alpha, "pass": ok})
    if args.format == "json":
        _emit(args, _dump(rows))
    else:
        out = []
        for r in rows:
            out.append("level %d: coset sum %s; cosets %s; alpha %s; %s" % (
                r["level"], _mark(r["coset_sum"]),
                " ".join("%s=%s" % (k, _mark(v)) for k, v in r["oracle"].items()),
                " ".join("%s=%s" % (k, _mark(v)) for k, v in r["alpha"].items()),
                _mark(r["pass"])))
        _emit(args, "\n".join(out))
    return EXIT_CHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thetacodes", description="Theta series of codes over rings of size four.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, multi_level=False):
        if multi_level:
            sp.add_argument("--level", type=int, nargs="+", required=True)
        else:
            sp.add_argument("--level", type=int, required=True)
        sp.add_argument("--prec", type=int, help="precision in powers of q")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--strict-squarefree", action="store_true")
        sp.add_argument("--out")

    sp = sub.add_parser("coset-theta", help="theta series of one coset of 2O_K")
    common(sp)
    sp.add_argument("--coset", choices=[c.value for c in CosetLabel], required=True)
    sp.add_argument("--oracle", action="store_true", help="also enumerate lattice points and compare")
    sp.set_defaults(func=cmd_coset_theta)

    sp = sub.add_parser("code-theta", help="theta series of the lattice of a code")
    common(sp)
    sp.add_argument("--code", required=True)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_code_theta)

    sp = sub.add_parser("compare-levels", help="first q-power where two levels differ")
    common(sp)
    sp.add_argument("--level2", type=int, required=True)
    sp.add_argument("--code", required=True)
    sp.set_defaults(func=cmd_compare_levels)

    sp = sub.add_parser("recover", help="weight enumerators compatible with a theta series")
    common(sp)
    sp.set_defaults(format="json")
    sp.add_argument("--code")
    sp.add_argument("--series")
    sp.add_argument("--n", type=int)
    sp.add_argument("--search", action="store_true", help="list codes of length n with this theta")
    sp.set_defaults(func=cmd_recover)

    sp = sub.add_parser("identities", help="check the coset theta identities")
    common(sp, multi_level=True)
    sp.set_defaults(func=cmd_identities)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InconsistentTarget as exc:
        print("error: %s: %s" % (exc.code, exc), file=sys.stderr)
        return EXIT_INCONSISTENT
    except InsufficientPrecision as exc:
        print("error: %s: %s" % (exc.code, exc), file=sys.stderr)
        return EXIT_PRECISION
    except ThetaCodesError as exc:
        print("error: %s: %s" % (exc.code, exc), file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
