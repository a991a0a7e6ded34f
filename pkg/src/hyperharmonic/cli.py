"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 divergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import List, Optional, Sequence

from . import oracle, verify
from .combinatorics import hyperharmonic
from .errors import DivergenceError
from .summation import convergent, s_rm

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DIVERGENT = 3

DEFAULT_DIGITS = 10
MAX_DIGITS = 14
DIV = "div"
CSV_FIELDS = ("r", "m", "closed_form", "approx_value", "oracle_value", "discrepancy")


def format_sig(x: float | Fraction | Decimal, digits: int = DEFAULT_DIGITS) -> str:
    """Fixed-point text with exactly ``digits`` significant digits, round-half-even."""
    if isinstance(x, Fraction):
        ctx = Context(prec=digits + 30)
        d = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    else:
        d = Decimal(x)
    if d == 0:
        return "0." + "0" * (digits - 1) if digits > 1 else "0"
    for _ in range(2):
        quantum = Decimal(1).scaleb(d.adjusted() - digits + 1)
        rounded = d.quantize(quantum, rounding=ROUND_HALF_EVEN)
        if rounded.adjusted() == d.adjusted():
            break
        # rounding carried into a new leading digit, e.g. 9.99.. -> 10.0..
        d = rounded
    return f"{rounded:f}"


@dataclass
class OutputRecord:
    r: int
    m: int
    closed_form: str
    closed_form_zeta: str
    approx_value: str
    oracle_value: Optional[float] = None
    discrepancy: Optional[float] = None

    @property
    def divergent(self) -> bool:
        return self.approx_value == DIV

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "closed_form": (
                DIV if self.divergent else {"pi_power": self.closed_form, "zeta_only": self.closed_form_zeta}
            ),
            "approx_value": DIV if self.divergent else float(self.approx_value),
            "oracle_value": self.oracle_value,
            "discrepancy": self.discrepancy,
        }

    def to_csv_row(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "closed_form": self.closed_form,
            "approx_value": self.approx_value,
            "oracle_value": "" if self.oracle_value is None else repr(self.oracle_value),
            "discrepancy": "" if self.discrepancy is None else repr(self.discrepancy),
        }


def build_record(r: int, m: int, digits: int = DEFAULT_DIGITS, oracle_terms: int = 0) -> OutputRecord:
    if not convergent(r, m):
        return OutputRecord(r, m, DIV, DIV, DIV)
    expr = s_rm(r, m)
    value = expr.evaluate()
    rec = OutputRecord(r, m, expr.render("pi-power"), expr.render("zeta-only"), format_sig(value, digits))
    if oracle_terms:
        rec.oracle_value = oracle.accelerated_sum(r, m, oracle_terms)
        rec.discrepancy = abs(value - rec.oracle_value)
    return rec


def parse_range(text: str) -> List[int]:
    """``"3..10"`` -> [3, ..., 10]; ``"4"`` -> [4]; ``"2,5"`` -> [2, 5]."""
    out: List[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            a, b = int(lo), int(hi)
            if b < a:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(a, b + 1))
        else:
            out.append(int(part))
    return out


def _range_arg(text: str) -> List[int]:
    try:
        values = parse_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; use N, A..B or a comma list")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("range values must be >= 1")
    return values


def _digits_arg(text: str) -> int:
    d = int(text)
    if not 1 <= d <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"--digits must be in 1..{MAX_DIGITS}")
    return d


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperharmonic",
        description="Hyperharmonic numbers and closed forms of sum H_n^(r)/n^m.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=_digits_arg, default=DEFAULT_DIGITS,
                        help=f"significant digits for decimals (max {MAX_DIGITS})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hh", parents=[common], help="print H_n^(r) exactly")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("sum", parents=[common], help="closed form of S(r,m)")
    p.add_argument("r", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--exact", action="store_true", help="print the closed form")
    p.add_argument("--numeric", action="store_true", help="print its value")
    p.add_argument("--oracle", type=_positive_int, metavar="N",
                   help="compare with N-term direct summation plus tail estimate")
    p.add_argument("--tolerance", type=float, default=1e-6,
                   help="max allowed oracle discrepancy before exiting 1")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("table", parents=[common], help="table of S(r,m) values")
    p.add_argument("--r", dest="r_range", type=_range_arg, required=True, help="orders, e.g. 2 or 2..4")
    p.add_argument("--m", dest="m_range", type=_range_arg, required=True, help="powers, e.g. 3..10")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--oracle-terms", type=int, default=0, metavar="N",
                   help="also run the N-term oracle per cell (0 disables)")

    p = sub.add_parser("verify", help="run the property checks")
    p.add_argument("level", choices=("quick", "full"))
    return parser


def _cmd_hh(args, out, err) -> int:
    if args.n < 1 or args.r < 1:
        err.write("usage error: hh needs n >= 1 and r >= 1\n")
        return EXIT_USAGE
    value = hyperharmonic(args.n, args.r)
    if args.format == "json":
        json.dump({"n": args.n, "r": args.r, "numerator": value.numerator,
                   "denominator": value.denominator, "decimal": format_sig(value, args.digits)}, out)
        out.write("\n")
    elif value.denominator == 1:
        out.write(f"{value.numerator}\n")
    else:
        out.write(f"{value} ≈ {format_sig(value, args.digits)}\n")
    return EXIT_OK


def _cmd_sum(args, out, err) -> int:
    r, m = args.r, args.m
    if r < 1 or m < 1:
        err.write("usage error: sum needs r >= 1 and m >= 1\n")
        return EXIT_USAGE
    try:
        expr = s_rm(r, m)
    except DivergenceError:
        err.write(f"divergent: requires m ≥ r+1 (got r={r}, m={m})\n")
        return EXIT_DIVERGENT
    show_exact = args.exact or not (args.numeric or args.oracle)
    show_numeric = args.numeric or not (args.exact or args.oracle)
    value = expr.evaluate()
    payload: dict = {"r": r, "m": m}
    lines: List[str] = []
    if show_exact:
        payload["pi_power"] = expr.render("pi-power")
        payload["zeta_only"] = expr.render("zeta-only")
        lines += [f"pi-power: {payload['pi_power']}", f"zeta-only: {payload['zeta_only']}"]
    if show_numeric:
        payload["value"] = format_sig(value, args.digits)
        lines.append(payload["value"] if not (show_exact or args.oracle) else f"value: {payload['value']}")
    status = EXIT_OK
    if args.oracle:
        start = time.perf_counter()
        partial = oracle.direct_sum(r, m, args.oracle)
        tail = oracle.tail_estimate(r, m, args.oracle)
        elapsed = time.perf_counter() - start
        acc = partial + tail
        gap = abs(value - acc)
        payload.update(closed_value=value, partial_sum=partial, tail_estimate=tail,
                       oracle_value=acc, discrepancy=gap, terms=args.oracle, seconds=elapsed)
        lines += [
            f"closed: {format_sig(value, args.digits)}",
            f"partial sum ({args.oracle} terms): {format_sig(partial, args.digits)}",
            f"tail estimate: {tail:.3e}",
            f"oracle: {format_sig(acc, args.digits)}",
            f"discrepancy: {gap:.3e}",
        ]
        if gap >= args.tolerance:
            err.write(f"oracle discrepancy {gap:.3e} exceeds tolerance {args.tolerance:.1e}\n")
            status = EXIT_FAIL
    if args.format == "json":
        json.dump(payload, out, ensure_ascii=False)
        out.write("\n")
    else:
        out.write("\n".join(lines) + "\n")
    return status


def _text_table(records: Sequence[OutputRecord], with_oracle: bool) -> str:
    header = ["r", "m", "approx_value", "closed_form"]
    if with_oracle:
        header[3:3] = ["oracle_value", "discrepancy"]
    rows = []
    for rec in records:
        row = [str(rec.r), str(rec.m), rec.approx_value]
        if with_oracle:
            row += ["" if rec.oracle_value is None else f"{rec.oracle_value:.12f}",
                    "" if rec.discrepancy is None else f"{rec.discrepancy:.2e}"]
        row.append(rec.closed_form)
        rows.append(row)
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def _cmd_table(args, out, err) -> int:
    records = [
        build_record(r, m, args.digits, args.oracle_terms)
        for r in sorted(set(args.r_range))
        for m in sorted(set(args.m_range))
    ]
    if args.format == "json":
        json.dump([rec.to_json() for rec in records], out, ensure_ascii=False, indent=2)
        out.write("\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow(rec.to_csv_row())
        out.write(buf.getvalue())
    else:
        out.write(_text_table(records, bool(args.oracle_terms)))
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    outcomes = verify.run(args.level)
    failed = [o for o in outcomes if not o.passed]
    for o in outcomes:
        line = f"{'PASS' if o.passed else 'FAIL'}  {o.name}"
        if o.detail:
            line += f"  ({o.detail})"
        out.write(line + "\n")
    out.write(f"{len(outcomes) - len(failed)}/{len(outcomes)} checks passed\n")
    if failed:
        err.write("failed: " + "; ".join(o.name for o in failed) + "\n")
        return EXIT_FAIL
    return EXIT_OK


COMMANDS = {"hh": _cmd_hh, "sum": _cmd_sum, "table": _cmd_table, "verify": _cmd_verify}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return COMMANDS[args.command](args, out, err)


def run() -> None:
    sys.exit(main())


__all__ = ["OutputRecord", "build_parser", "build_record", "format_sig", "main", "parse_range"]
