"""Command-line interface: bound, construct, verify, table, product."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from .bounds import Registry, best_bounds, bound_record
from .codes import ConstraintKind, ParamError, CodeParams, read_code, write_code
from .lexicode import construct, register_result
from .products import product_witness
from .reproduce import DEFAULT_BUDGET, run_table
from .verify import verify_text
from .words import Factored, Single, WordError, parse_hex

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CSV_COLUMNS = ["n", "d", "w", "constraint", "lower", "upper", "method_lower", "method_upper", "exact"]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _params(args) -> CodeParams:
    return CodeParams(args.n, args.d, args.w, ConstraintKind.parse(args.constraint))


def cmd_bound(args) -> int:
    kind = ConstraintKind.parse(args.constraint)
    registry = Registry()
    for path in args.register or []:
        register_result(read_code(path), registry)
    if args.construct and args.n <= 12:
        params = _params(args)
        for ordering in range(1, 7):
            register_result(construct(params, Single(0, ordering)), registry)
    lower, upper = best_bounds(args.n, args.d, args.w, kind, registry)
    rec = bound_record(args.n, args.d, args.w, kind, lower, upper)
    if args.format == "json":
        rec["lower_chain"] = lower.chain()
        rec["upper_chain"] = upper.chain()
        text = json.dumps(rec) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerow(rec)
        text = buf.getvalue()
    else:
        text = (
            f"n={args.n} d={args.d} w={args.w} constraint={kind.value}\n"
            f"lower {lower.value}  via {lower.chain()}\n"
            f"upper {upper.value}  via {upper.chain()}\n"
            f"{'exact' if rec['exact'] else 'gap ' + str(upper.value - lower.value)}\n"
        )
    _emit(text, args.out)
    return EXIT_OK


def _offset_spec(args):
    if args.factored:
        parts = args.factored.replace("⊙", ",").split(",")
        if len(parts) != 2:
            raise WordError("--factored takes two base-16 offsets, e.g. 0,0")
        return Factored(parse_hex(parts[0]), parse_hex(parts[1]))
    return Single(parse_hex(args.offset), args.ordering)


def cmd_construct(args) -> int:
    params = _params(args)
    spec = _offset_spec(args)
    code = construct(params, spec, method=args.method)
    text = write_code(code)
    _emit(text, args.out)
    logging.getLogger(__name__).info("constructed %d words", len(code))
    if args.out:
        print(f"{len(code)} words written to {args.out}")
    return EXIT_OK


def cmd_product(args) -> int:
    code = product_witness(args.n, args.d, args.w, ConstraintKind.parse(args.constraint))
    text = write_code(code)
    _emit(text, args.out)
    if args.out:
        print(f"{len(code)} words written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_text(Path(args.file).read_text())
    print(report.to_json() if args.format == "json" else report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_table(args) -> int:
    entry = None
    if args.entry:
        n, d = (int(v) for v in args.entry.split(","))
        entry = (n, d)
    results = run_table(args.reproduce, args.include_slow, entry, args.jobs, args.budget)
    if args.format == "json":
        rows = [
            {
                "n": r.entry.n,
                "d": r.entry.d,
                "w": r.entry.w,
                "constraint": r.entry.kind.value,
                "offset": r.entry.offset_text,
                "expected": r.entry.expected_size,
                "size": r.size,
                "status": r.status,
                "seconds": round(r.seconds, 3),
                "note": r.note,
            }
            for r in results
        ]
        _emit(json.dumps(rows, indent=1) + "\n", args.out)
    else:
        _emit("".join(r.line() + "\n" for r in results), args.out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def _common(p: argparse.ArgumentParser, need_params: bool = True) -> None:
    if need_params:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--w", type=int, required=True)
        p.add_argument("--constraint", choices=["gc", "gcrc", "gcr"], default="gc")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--out", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dnagc", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="best lower and upper bounds")
    _common(p)
    p.add_argument("--register", nargs="*", metavar="FILE", help="code files to count as lower bounds")
    p.add_argument("--construct", action="store_true", help="also build zero-offset lexicodes (n <= 12)")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="greedy lexicographic code")
    _common(p)
    p.add_argument("--ordering", type=int, choices=range(1, 7), default=1)
    p.add_argument("--offset", default="0", help="base-16 rank to start from")
    p.add_argument("--factored", metavar="HEX,HEX", help="factored ordering with two offsets")
    p.add_argument("--method", choices=["auto", "scan", "mark"], default="auto")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("product", help="product-code witness")
    _common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="check a code file")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="reproduce a published table")
    p.add_argument("--reproduce", type=int, choices=[1, 2], required=True)
    p.add_argument("--include-slow", action="store_true")
    p.add_argument("--entry", metavar="N,D")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET, help="seconds per entry")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ParamError, WordError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
