"""Command-line surface: counting queries, verification suites, sweeps.

Commands are deterministic (identical inputs give byte-identical output) and
print results to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import formulas, verify
from .hexagon import HexagonSpec, Parity, axis_positions, normalize


@dataclass
class SweepRow:
    """One sweep sample: exact proportion next to its arcsine limit.

    Floats are rounded through 15 significant digits at construction so that
    emitting and re-parsing a row reproduces it exactly.
    """

    n: int
    m: int
    l: int
    proportion_exact: Fraction
    proportion_float: float
    arcsine_value: float
    abs_error: float

    @classmethod
    def compute(cls, n: int, a_ratio: float, b_ratio: float) -> "SweepRow":
        m = max(1, round(a_ratio * n))
        l = min(max(1, round(b_ratio * n)), n)
        exact = formulas.proportion_nm(n, m, l)
        prop = _round15(float(exact))
        limit = _round15(formulas.arcsine_limit(a_ratio, b_ratio))
        return cls(n, m, l, exact, prop, limit, _round15(abs(prop - limit)))


def _round15(x: float) -> float:
    return float(f"{x:.15g}")


def _fmt15(x: float) -> str:
    return f"{x:.15g}"


SWEEP_HEADER = "N,m,l,proportion_exact,proportion_float,arcsine_value,abs_error"


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(
            f"{r.n},{r.m},{r.l},{r.proportion_exact.numerator}/"
            f"{r.proportion_exact.denominator},{_fmt15(r.proportion_float)},"
            f"{_fmt15(r.arcsine_value)},{_fmt15(r.abs_error)}"
        )
    return "\n".join(lines)


def rows_to_json(rows: Sequence[SweepRow]) -> str:
    payload = [
        {
            "N": r.n,
            "m": r.m,
            "l": r.l,
            "proportion_exact": f"{r.proportion_exact.numerator}/{r.proportion_exact.denominator}",
            "proportion_float": _round15(r.proportion_float),
            "arcsine_value": _round15(r.arcsine_value),
            "abs_error": _round15(r.abs_error),
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2)


def _row_from_record(rec: dict) -> SweepRow:
    num, den = rec["proportion_exact"].split("/")
    return SweepRow(
        int(rec["N"]), int(rec["m"]), int(rec["l"]),
        Fraction(int(num), int(den)),
        float(rec["proportion_float"]),
        float(rec["arcsine_value"]),
        float(rec["abs_error"]),
    )


def rows_from_json(text: str) -> List[SweepRow]:
    return [_row_from_record(rec) for rec in json.loads(text)]


def rows_from_csv(text: str) -> List[SweepRow]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != SWEEP_HEADER:
        raise ValueError("missing or malformed sweep CSV header")
    keys = SWEEP_HEADER.split(",")
    return [_row_from_record(dict(zip(keys, ln.split(",")))) for ln in lines[1:]]


def _cmd_count(args) -> int:
    side_a, side_m = args.sides
    spec = HexagonSpec(side_a, side_m)
    print(formulas.macmahon_count(spec.side_a, spec.side_a, spec.side_m))
    return 0


def _cmd_fixed(args) -> int:
    side_a, side_m = args.sides
    if side_m == 0:
        raise ValueError("fixed-rhombus counts are undefined for M=0")
    spec = HexagonSpec(side_a, side_m)
    params = normalize(spec)
    if params.n == 0:
        raise ValueError(
            f"hexagon ({side_a},{side_m}) has no rhombus on its symmetry axis"
        )
    positions = axis_positions(params)
    if not 1 <= args.l <= positions:
        raise ValueError(f"l must lie in 1..{positions}, got {args.l}")
    total = formulas.macmahon_count(side_a, side_a, side_m)
    if params.parity is Parity.EVEN:
        fixed = formulas.fixed_count_even(params.n, params.m, args.l)
    else:
        fixed = formulas.fixed_count_odd(params.n, params.m, args.l)
    print(f"total {total}")
    print(f"fixed {fixed}")
    print(f"proportion {Fraction(fixed, total)}")
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suite(
        args.suite,
        max_n=args.max_n,
        max_m=args.max_m,
        max_a=args.max_a,
        max_cells=args.max_cells,
    )
    failures = 0
    for res in results:
        line = f"{res.status} {res.name}"
        if res.detail:
            line += f" ({res.detail})"
        print(line)
        if not res.ok:
            failures += 1
    skipped = sum(1 for r in results if r.skipped)
    summary = f"{args.suite}: {len(results) - failures}/{len(results)} checks passed"
    if skipped:
        summary += f", {skipped} skipped"
    print(summary)
    if failures:
        print(f"{failures} checks FAILED", file=sys.stderr)
        return 1
    return 0


def _cmd_sweep(args) -> int:
    if not 0.0 < args.b < 1.0:
        raise ValueError("need 0 < b < 1")
    if args.a < 0.0:
        raise ValueError("need a >= 0")
    rows = [SweepRow.compute(n, args.a, args.b) for n in args.n]
    if args.format == "csv":
        print(rows_to_csv(rows))
    else:
        print(rows_to_json(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hextiling",
        description="Exact rhombus-tiling counts for semi-regular hexagons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="total number of tilings")
    p_count.add_argument("--sides", nargs=2, type=int, required=True,
                         metavar=("A", "M"), help="hexagon sides (A, M)")
    p_count.set_defaults(func=_cmd_count)

    p_fixed = sub.add_parser(
        "fixed", help="tilings containing the l-th axis rhombus")
    p_fixed.add_argument("--sides", nargs=2, type=int, required=True,
                         metavar=("A", "M"))
    p_fixed.add_argument("--l", type=int, required=True,
                         help="axis position, counted from 1")
    p_fixed.set_defaults(func=_cmd_fixed)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--max-m", type=int, default=None)
    p_verify.add_argument("--max-a", type=int, default=None)
    p_verify.add_argument("--max-cells", type=int, default=None,
                          help="override the oracle cell limit")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser(
        "sweep", help="exact proportions along m ~ a*N, l ~ b*N vs the arcsine limit")
    p_sweep.add_argument("--a", type=float, required=True, help="ratio m/N")
    p_sweep.add_argument("--b", type=float, required=True, help="ratio l/N")
    p_sweep.add_argument("--n", nargs="+", type=int, required=True,
                         help="values of N to sample")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
