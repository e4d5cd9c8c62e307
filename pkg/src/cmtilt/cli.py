"""Command line front end.

Exit codes: 0 all checks pass, 1 some check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import silting_tilting_table
from .errors import (CmtiltError, NotHomogeneous, ParseError,
                     SmallCharUnsupported, UnsupportedFactorization)
from .fields import FieldSpec
from .report import analyze, run_catalog

INPUT_ERRORS = (ParseError, NotHomogeneous, UnsupportedFactorization,
                SmallCharUnsupported, ValueError)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmtilt",
        description="Exact tilting-theoretic invariants of graded curve "
                    "hypersurface rings k[x,y]/(f).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one weighted-homogeneous polynomial")
    pa.add_argument("--field", default="fp:101", help="q or fp:<prime> (default fp:101)")
    pa.add_argument("--f", required=True, help="polynomial, e.g. 'x^5-y^3'")
    pa.add_argument("--wx", type=int, required=True, help="weight of x")
    pa.add_argument("--wy", type=int, required=True, help="weight of y")
    pa.add_argument("--json", action="store_true", help="emit a JSON report")
    pa.add_argument("--max-window", type=int, default=None,
                    help="override the Hom-oracle window bound")
    pa.add_argument("--seed", type=int, default=1, help="seed for randomized searches")
    pa.add_argument("--skip-oracle", action="store_true",
                    help="skip the entrywise graded-Hom oracle")

    pc = sub.add_parser("catalog", help="run the built-in example catalog")
    pc.add_argument("--filter", default=None, help="only entries whose name contains this")
    pc.add_argument("--field", default="fp:101", help="q or fp:<prime> (default fp:101)")
    pc.add_argument("--json", action="store_true")
    pc.add_argument("--seed", type=int, default=1)
    pc.add_argument("--skip-oracle", action="store_true")

    pn = sub.add_parser("negative", help="negative-a workflow for the square-zero family")
    pn.add_argument("--n", type=int, required=True, help="degree of x (period of the model)")
    pn.add_argument("--json", action="store_true")
    return parser


def _cmd_analyze(args) -> int:
    field = FieldSpec.from_text(args.field)
    report = analyze(
        field, args.f, args.wx, args.wy,
        seed=args.seed, max_window=args.max_window,
        with_oracle=not args.skip_oracle,
    )
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=False))
    else:
        print(report.render_text())
    return 0 if report.ok else 1


def _cmd_catalog(args) -> int:
    field = FieldSpec.from_text(args.field)
    rows, all_ok = run_catalog(
        field=field, name_filter=args.filter, seed=args.seed,
        with_oracle=not args.skip_oracle,
    )
    if not rows:
        print(f"no catalog entries match {args.filter!r}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({"entries": rows, "ok": all_ok}, indent=2))
    else:
        for row in rows:
            print(
                f"{row['name']:>4}  f={row['f']:<22} w=({row['weights'][0]},{row['weights'][1]})"
                f"  a={row['a']:>2} p={row['p']} m={row['m']} rank={row['rank']}"
                f"  {row['status'].upper()}"
            )
            for pb in row["problems"]:
                print(f"      {pb}")
        print("CATALOG:", "PASS" if all_ok else "FAIL")
    return 0 if all_ok else 1


def _cmd_negative(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    rep = silting_tilting_table(args.n)
    table = {str(s): v for s, v in sorted(rep["table"].items())}
    if args.json:
        print(json.dumps({
            "n": rep["n"],
            "window": rep["window"],
            "hom_table": table,
            "silting": rep["silting"],
            "tilting": rep["tilting"],
        }, indent=2))
    else:
        print(f"square-zero family, n = {rep['n']} (window |s| <= {rep['window']})")
        nonzero = {s: v for s, v in sorted(rep["table"].items()) if v}
        print(f"nonzero Hom(M, M[s]) dimensions: {nonzero}")
        print(f"silting: {rep['silting']}   tilting: {rep['tilting']}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "catalog":
            return _cmd_catalog(args)
        if args.command == "negative":
            return _cmd_negative(args)
        parser.error("unknown command")
    except INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except CmtiltError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
