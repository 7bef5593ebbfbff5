"""Command-line interface: ``orbit-hikita check|suite|ideal|list``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks
from .groebner import INFINITE, Limits, LimitExceeded, limits_scope, read_ideal_file
from .poly import DEGLEX, GREVLEX, LEX, ParseError, parse_poly
from .report import build_report, emit_report

ORDERS = {"grevlex": GREVLEX, "lex": LEX, "deglex": DEGLEX}


def _limits(args) -> Limits:
    return Limits(max_degree=args.max_degree, max_pairs=args.max_pairs, time_limit=args.time_limit)


def _add_limit_args(p):
    p.add_argument("--time-limit", type=float, default=120.0, help="seconds per check (default 120)")
    p.add_argument("--max-degree", type=int, default=40)
    p.add_argument("--max-pairs", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true", help="DISCREPANCY and SKIP also give a nonzero exit code")
    p.add_argument("--no-timing", action="store_true", help="report millis as 0 (byte-stable output)")


def _parse_params(items) -> dict:
    params = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise checks.InvalidParams(f"parameter {item!r} is not k=v")
        params[key.strip()] = checks.parse_value(val)
    return params


def cmd_check(args) -> int:
    limits = _limits(args)
    res = checks.run_check(args.name, _parse_params(args.param), limits, args.seed)
    rep = build_report([res], args.seed, limits)
    sys.stdout.buffer.write(emit_report(rep, "json" if args.json else "text", not args.no_timing))
    return rep.exit_code(args.strict)


def cmd_suite(args) -> int:
    limits = _limits(args)

    def progress(r):
        if args.verbose:
            print(f"{r.status:<11} {r.id}", file=sys.stderr)

    results = checks.run_suite(args.suite, limits, args.seed, args.workers, progress)
    rep = build_report(results, args.seed, limits)
    timing = not args.no_timing
    if args.out:
        Path(args.out).write_bytes(emit_report(rep, "json", timing))
        sys.stdout.buffer.write(emit_report(rep, "text", timing) if args.format == "text" else b"")
        s = rep.summary
        print(f"wrote {args.out}: pass={s['pass']} fail={s['fail']} discrepancy={s['discrepancy']} skip={s['skip']}")
    else:
        sys.stdout.buffer.write(emit_report(rep, args.format, timing))
    return rep.exit_code(args.strict)


def _fmt_dim(d):
    return "infinite" if d == INFINITE else str(d)


def cmd_ideal(args) -> int:
    I = read_ideal_file(Path(args.file).read_text())
    order = ORDERS[args.order]
    with limits_scope(Limits(time_limit=args.time_limit)):
        if args.op == "gb":
            for g in I.groebner_basis(order):
                print(g)
        elif args.op == "dim":
            print(_fmt_dim(I.quotient_dimension()))
        elif args.op == "hilbert":
            h = I.hilbert_function(args.dmax)
            print(" ".join(map(str, h.counts)))
            print("dimension", _fmt_dim(h.dimension))
        elif args.op == "standard":
            for e in I.standard_monomials(max_degree=args.dmax):
                print(I.ring.monomial(e))
        elif args.op == "initial":
            for g in I.initial_form_ideal(order).groebner_basis(order):
                print(g)
        elif args.op in ("nf", "member"):
            if not args.poly:
                raise SystemExit("nf/member need --poly")
            f = parse_poly(args.poly, I.ring)
            nf = I.normal_form(f, order)
            print(nf if args.op == "nf" else ("true" if not nf else "false"))
        elif args.op == "equal":
            if not args.other:
                raise SystemExit("equal needs --other FILE")
            J = read_ideal_file(Path(args.other).read_text())
            if J.ring.names != I.ring.names:
                raise SystemExit("ideal files use different variables")
            print("true" if I.equals(J) else "false")
    return 0


def cmd_list(args) -> int:
    for name, spec in checks.CATALOG.items():
        params = ",".join(spec.params)
        print(f"{name:<14} {params:<18} {spec.paper_ref}")
    print()
    for s in checks.SUITES:
        print(f"suite {s}: {len(checks.suite_entries(s))} checks")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orbit-hikita", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="run one named check")
    p.add_argument("name")
    p.add_argument("--param", action="append", metavar="K=V", help="check parameter, e.g. b=3,1")
    p.add_argument("--json", action="store_true")
    _add_limit_args(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("suite", help="run a suite of checks")
    p.add_argument("suite", choices=checks.SUITES)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-v", "--verbose", action="store_true")
    _add_limit_args(p)
    p.set_defaults(fn=cmd_suite)

    p = sub.add_parser("ideal", help="Groebner and dimension queries on an ideal file")
    p.add_argument("op", choices=("gb", "dim", "hilbert", "standard", "initial", "nf", "member", "equal"))
    p.add_argument("file")
    p.add_argument("--order", choices=tuple(ORDERS), default="grevlex")
    p.add_argument("--poly")
    p.add_argument("--other")
    p.add_argument("--dmax", type=int, default=10)
    p.add_argument("--time-limit", type=float, default=120.0)
    p.set_defaults(fn=cmd_ideal)

    p = sub.add_parser("list", help="list checks and suites")
    p.set_defaults(fn=cmd_list)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (checks.UnknownCheck, checks.InvalidParams, ParseError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"orbit-hikita: error: {msg}", file=sys.stderr)
        return 2
    except LimitExceeded as e:
        print(f"orbit-hikita: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
