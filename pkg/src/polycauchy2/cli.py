"""Command-line front end: triangle tables, sequence tables, series dumps, verification.

Exit codes are the machine contract: 0 success (or identity pass), 1 identity
failure, 2 usage error. All numbers are printed in canonical rational text,
so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cache import CacheSession
from .convolution import IDENTITY_NAMES, verify_identity
from .exact import rational_to_text
from .polycauchy import DEFAULT_SERIES_ORDER, PolyCauchyTable
from .series import BUILTIN_SERIES_NAMES, builtin_series
from .stirling import level2_by_recurrence

__all__ = ["build_parser", "main", "entry"]

_FIELD_SEPARATORS = {"csv": ",", "tsv": "\t"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "tsv", "json"), default="csv", help="output format"
    )
    common.add_argument("--cache", metavar="PATH", default=None, help="JSON cache file")
    common.add_argument(
        "--jobs", type=int, default=None, metavar="N", help="parallel workers for sweeps"
    )
    common.add_argument(
        "--order",
        type=int,
        default=DEFAULT_SERIES_ORDER,
        metavar="M",
        help="truncation order for series output",
    )
    common.add_argument(
        "--stats", action="store_true", help="print cache statistics to stderr"
    )

    parser = argparse.ArgumentParser(
        prog="polycauchy2",
        description="Exact tables and identity checks for the level-2 poly-Cauchy sequence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling2", parents=[common], help="level-2 triangle rows")
    p.add_argument("--nmax", type=int, default=12, help="last row to print")
    p.add_argument(
        "--signed", action="store_true", help="apply the sign (-1)^(n-m) to each entry"
    )
    p.set_defaults(handler=cmd_stirling2)

    p = sub.add_parser("polycauchy", parents=[common], help="sequence values C_{2n}^(k)")
    p.add_argument("--k", type=int, default=1, help="weight index, any integer")
    p.add_argument("--nmax", type=int, default=12, help="last index to print")
    p.add_argument(
        "--route",
        choices=("formula", "series", "both"),
        default="formula",
        help="computation route; 'both' prints the two side by side",
    )
    p.set_defaults(handler=cmd_polycauchy)

    p = sub.add_parser("series", parents=[common], help="ordinary coefficients of a builtin series")
    p.add_argument("name", choices=BUILTIN_SERIES_NAMES)
    p.add_argument("--k", type=int, default=None, help="weight for the lif families")
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="sweep one identity and report")
    p.add_argument("identity", nargs="?", choices=IDENTITY_NAMES)
    p.add_argument(
        "--identity", dest="identity_flag", choices=IDENTITY_NAMES, help="alias for the positional"
    )
    p.add_argument("--nmax", type=int, default=12, help="sweep bound")
    p.set_defaults(handler=cmd_verify)

    return parser


def _emit_table(fmt: str, header: list[str], rows: list[list[str]], json_payload: dict) -> None:
    if fmt == "json":
        print(json.dumps(json_payload))
        return
    sep = _FIELD_SEPARATORS[fmt]
    print(sep.join(header))
    for row in rows:
        print(sep.join(row))


def cmd_stirling2(args: argparse.Namespace, cache: CacheSession) -> int:
    rows = cache.get_triangle_rows(args.nmax)
    if rows is None:
        triangle = level2_by_recurrence(args.nmax)
        rows = [list(triangle.row(n)) for n in range(args.nmax + 1)]
        cache.put_triangle_rows(rows)
    if args.signed:
        rows = [
            [value if (n - m) % 2 == 0 else -value for m, value in enumerate(row)]
            for n, row in enumerate(rows)
        ]
    text_rows = [[str(value) for value in row] for row in rows]
    if args.format == "json":
        print(json.dumps({"nmax": args.nmax, "signed": args.signed, "rows": text_rows}))
        return 0
    value_sep = _FIELD_SEPARATORS[args.format]
    print("n:values")
    for n, row in enumerate(text_rows):
        print(f"{n}:{value_sep.join(row)}")
    return 0


def cmd_polycauchy(args: argparse.Namespace, cache: CacheSession) -> int:
    if args.route == "both":
        # Both routes are always recomputed; caching one would collapse the
        # comparison this mode exists to display.
        formula = PolyCauchyTable.build(args.nmax, args.k, "formula")
        series = PolyCauchyTable.build(args.nmax, args.k, "series")
        pairs = [
            (
                rational_to_text(formula.value(n, args.k)),
                rational_to_text(series.value(n, args.k)),
            )
            for n in range(args.nmax + 1)
        ]
        _emit_table(
            args.format,
            ["n", "formula", "series"],
            [[str(n), f, s] for n, (f, s) in enumerate(pairs)],
            {
                "k": args.k,
                "nmax": args.nmax,
                "route": "both",
                "values": [
                    {"n": n, "formula": f, "series": s} for n, (f, s) in enumerate(pairs)
                ],
            },
        )
        return 0
    values = cache.get_values(args.k, args.nmax)
    if values is None:
        table = PolyCauchyTable.build(args.nmax, args.k, args.route)
        values = [table.value(n, args.k) for n in range(args.nmax + 1)]
        cache.put_values(args.k, values)
    texts = [rational_to_text(value) for value in values]
    _emit_table(
        args.format,
        ["n", "value"],
        [[str(n), text] for n, text in enumerate(texts)],
        {
            "k": args.k,
            "nmax": args.nmax,
            "route": args.route,
            "values": [{"n": n, "value": text} for n, text in enumerate(texts)],
        },
    )
    return 0


def cmd_series(args: argparse.Namespace, cache: CacheSession) -> int:
    series = builtin_series(args.name, args.order, k=args.k)
    texts = [rational_to_text(series.coefficient(i)) for i in range(args.order + 1)]
    _emit_table(
        args.format,
        ["i", "coefficient"],
        [[str(i), text] for i, text in enumerate(texts)],
        {
            "name": args.name,
            "order": args.order,
            "k": args.k,
            "coefficients": [{"i": i, "value": text} for i, text in enumerate(texts)],
        },
    )
    return 0


def cmd_verify(args: argparse.Namespace, cache: CacheSession) -> int:
    identity = args.identity or args.identity_flag
    if identity is None:
        raise ValueError("an identity name is required (positional or --identity)")
    if args.identity and args.identity_flag and args.identity != args.identity_flag:
        raise ValueError("conflicting identity names given")
    report = verify_identity(identity, args.nmax, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(report.to_text())
    return 0 if report.status == "pass" else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    nmax = getattr(args, "nmax", 0)
    if nmax < 0:
        parser.error("--nmax must be >= 0")
    if args.order < 0:
        parser.error("--order must be >= 0")
    if args.jobs is not None and args.jobs < 1:
        parser.error("--jobs must be >= 1")
    cache = CacheSession(args.cache)
    try:
        code = args.handler(args, cache)
    except ValueError as exc:
        parser.error(str(exc))
    cache.save()
    if args.stats:
        print(cache.stats_line(), file=sys.stderr)
    return code


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
