"""Command line front end.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 invalid input data.
"""

import argparse
import json
import sys

from . import bijection, oracle, tables, verify
from .oracle import CapExceeded
from .paths import InvalidPath, LatticePath
from .perms import InvalidPermutation, parse_permutation, stats
from .series import NAMED_SERIES, build_named_series


def _parse_pattern(text: str):
    values = tuple(int(c) for c in text) if text.isdigit() else ()
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"not a pattern: {text!r}")
    return values


def _cmd_perm_stats(args) -> int:
    record = stats(parse_permutation(args.perm))
    print(json.dumps(record))
    return 0


def _cmd_phi(args) -> int:
    print(bijection.phi(parse_permutation(args.perm)))
    return 0


def _cmd_phi_inv(args) -> int:
    print(bijection.phi_inverse(LatticePath(args.path)))
    return 0


def _cmd_enumerate(args) -> int:
    spec = oracle.ClassSpec(
        args.len,
        centrosymmetric=args.centro,
        avoid=_parse_pattern(args.avoid) if args.avoid else None,
        subclass=args.subclass,
    )
    members = list(oracle.enumerate_class(spec))
    if args.format == "lines":
        for p in members:
            print(p)
    elif args.format == "csv":
        for p in members:
            print(",".join(str(v) for v in p.values))
    else:
        payload = {
            "length": args.len,
            "count": len(members),
            "members": [str(p) for p in members],
        }
        print(json.dumps(payload))
    return 0


def _build_table(args) -> tables.DescentTable:
    if args.source == "recurrence":
        return tables.build_table(args.family, args.max_n)
    if args.source == "series":
        return tables.series_table(args.family, args.max_n)
    return tables.oracle_table(args.family, args.max_n)


def _cmd_table(args) -> int:
    table = _build_table(args)
    if args.format == "csv":
        sys.stdout.write(tables.table_to_csv(table))
    else:
        width = table.width()
        payload = {
            "family": table.family,
            "max_n": table.max_n,
            "source": args.source,
            "rows": [
                [str(table.cell(n, d)) for d in range(width)]
                for n in range(table.max_n + 1)
            ],
        }
        print(json.dumps(payload))
    return 0


def _cmd_series(args) -> int:
    series = build_named_series(args.name, args.order)
    payload = {
        "name": args.name,
        "order": args.order,
        "coeffs": [[str(c) for c in row] for row in series.integer_rows()],
    }
    print(json.dumps(payload))
    return 0


def _cmd_verify(args) -> int:
    reports = verify.run_suite(args.suite, args.max_n, seed=args.seed)
    for report in reports:
        print(report.render())
    ok = all(r.ok for r in reports)
    print("all suites passed" if ok else "verification FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="censym",
        description=(
            "Pattern-avoiding centrosymmetric permutations: statistics, the "
            "path bijection, enumeration, descent tables, and series."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perm-stats", help="statistics of one permutation")
    p.add_argument("perm", help="space/comma-separated 1-based values")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_perm_stats)

    p = sub.add_parser("phi", help="map a member to its Dyck prefix")
    p.add_argument("perm")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("phi-inv", help="map a Dyck prefix back to the member")
    p.add_argument("path", help="U/D string")
    p.set_defaults(func=_cmd_phi_inv)

    p = sub.add_parser("enumerate", help="list a permutation class")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--centro", action="store_true")
    p.add_argument("--avoid", help="pattern such as 123 or 132")
    p.add_argument("--subclass", choices=oracle.SUBCLASSES)
    p.add_argument("--format", choices=("lines", "json", "csv"), default="lines")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("table", help="descent table of a family")
    p.add_argument("--family", choices=tables.FAMILIES, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--source",
        choices=("recurrence", "series", "oracle"),
        default="recurrence",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("series", help="coefficients of a named series")
    p.add_argument("--name", choices=NAMED_SERIES, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (InvalidPermutation, InvalidPath, CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
