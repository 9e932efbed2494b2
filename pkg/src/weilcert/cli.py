"""Command-line surface.

Subcommands cover the whole toolkit: quadruple searches (`find`, `scan`,
`table2`), the density experiment (`density`, `plot`), scalar reports
(`limit`, `classnum`), and certificate verification (`certify`). Output is
csv, json, or markdown; exit codes are 0 (success), 1 (check failure),
2 (argument error), 3 (resource limit or I/O failure).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import density as density_mod
from . import report
from .errors import ResourceLimitError
from .quadforms import class_number
from .weil import (
    DimensionParam,
    find_smallest,
    run_certificate_checks,
    scan_quadruples,
    solve_general_p1m,
    sophie_germain_list,
)

DEFAULT_FIND_PMAX = 100_000
DEFAULT_G_MAX = 509
DEFAULT_PLOT_XMAX = 10**6


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _parse_checkpoints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad checkpoint list {text!r}") from None


def cmd_find(args) -> int:
    g = DimensionParam(args.g)
    if args.p is not None and args.m is None:
        raise ValueError("--p requires --m (find searches the smallest p otherwise)")
    if args.m is not None:
        if args.p is None:
            raise ValueError("--m requires --p")
        sol = solve_general_p1m(g, args.p, args.m)
        if sol is None:
            print(
                f"no solution of a^2 - 4*{args.p}^{g.g - 2 * args.m} "
                f"= -{g.n}*s^2 with gcd(a, p) = 1",
                file=sys.stderr,
            )
            return 1
        a, s = sol
        text = report.emit_table(
            ["g", "p", "m", "a", "s"], [[g.g, args.p, args.m, a, s]], args.format
        )
        _write(text, args.out)
        return 0
    w = find_smallest(g, args.p_max)
    if w is None:
        print(f"no prime found with p <= {args.p_max} for g = {g.g}", file=sys.stderr)
        return 1
    text = report.emit_table(
        ["g", "p", "a", "s"], [[w.g.g, w.p, w.a, w.s]], args.format
    )
    _write(text, args.out)
    return 0


def cmd_scan(args) -> int:
    g = DimensionParam(args.g)
    rows = [[w.p, w.a, w.s] for w in scan_quadruples(g, args.p_max)]
    _write(report.emit_table(["p", "a", "s"], rows, args.format), args.out)
    return 0


def cmd_table2(args) -> int:
    if args.g_max < 5:
        raise ValueError(f"--g-max must be >= 5, got {args.g_max}")
    rows = []
    for g_val in sophie_germain_list(args.g_max):
        if g_val < 5:
            continue
        w = find_smallest(DimensionParam(g_val), args.p_max)
        if w is None:
            print(
                f"no prime found with p <= {args.p_max} for g = {g_val}",
                file=sys.stderr,
            )
            return 1
        rows.append([w.g.g, w.p, w.a, w.s])
    _write(report.emit_table(["g", "p", "a", "s"], rows, args.format), args.out)
    return 0


def cmd_density(args) -> int:
    g = DimensionParam(args.g)
    checkpoints = (
        _parse_checkpoints(args.checkpoints)
        if args.checkpoints
        else density_mod.DEFAULT_CHECKPOINTS
    )
    series = density_mod.density_series(g, checkpoints)
    rows = [
        [
            rec.x,
            rec.count_pg,
            rec.count_p,
            rec.f.numerator,
            rec.f.denominator,
            report.decimal_string(rec.f),
            report.decimal_string(rec.diff),
        ]
        for rec in series.records
    ]
    header = ["x", "count_pg", "count_p", "f_num", "f_den", "f_decimal", "diff_decimal"]
    _write(report.emit_table(header, rows, args.format), args.out)
    if args.series:
        primes, counts = density_mod.prime_series(g, checkpoints[-1])
        srows = []
        for i in range(len(primes)):
            f = Fraction(int(counts[i]), i + 1)
            srows.append(
                [int(primes[i]), f.numerator, f.denominator, report.decimal_string(f)]
            )
        stext = report.emit_table(
            ["p", "f_num", "f_den", "f_decimal"], srows, args.format
        )
        _write(stext, args.series)
    return 0


def cmd_limit(args) -> int:
    g = DimensionParam(args.g)
    h = class_number(-8 * g.g - 4)
    lim = density_mod.asymptotic_limit(g)
    rows = [[g.g, h, lim.numerator, lim.denominator, report.decimal_string(lim)]]
    header = ["g", "h", "limit_num", "limit_den", "limit_decimal"]
    _write(report.emit_table(header, rows, args.format), args.out)
    return 0


def cmd_classnum(args) -> int:
    rows = [[args.disc, class_number(args.disc)]]
    _write(report.emit_table(["disc", "h"], rows, args.format), args.out)
    return 0


def cmd_certify(args) -> int:
    g = DimensionParam(args.g)
    run = run_certificate_checks(g, args.p)
    if not run.passed:
        name, detail = run.failure()
        header = ["identity", "status", "detail"]
        rows = [
            [n, "pass" if ok else "fail", d.replace(",", ";")]
            for n, ok, d in run.checks
        ]
        _write(report.emit_table(header, rows, args.format), args.out)
        print(f"certificate failed [{name}]: {detail}", file=sys.stderr)
        return 1
    cert = run.certificate
    w, poly = run.quadruple, run.polynomial
    inv_low, inv_high = cert.invariants
    header = [
        "g", "p", "a", "s", "q", "weil_b", "weil_c",
        "cm_discriminant", "splitting_order",
        "inv_low_place", "inv_low_num", "inv_low_den",
        "inv_high_place", "inv_high_num", "inv_high_den",
        "oracle_val_plus", "oracle_val_minus",
        "degree_d", "center_degree_e", "dimension", "aut_order",
    ]
    row: list = [
        g.g, w.p, w.a, w.s, str(poly.q), str(poly.b), str(poly.c),
        cert.cm_discriminant, cert.splitting_order,
        inv_low.place, inv_low.value.numerator, inv_low.value.denominator,
        inv_high.place, inv_high.value.numerator, inv_high.value.denominator,
        run.oracle_valuations[0], run.oracle_valuations[1],
        cert.degree_d, cert.center_degree_e, cert.dimension, cert.aut_order,
    ]
    for name, ok, _ in run.checks:
        header.append("check_" + name.replace("-", "_"))
        row.append("pass" if ok else "fail")
    if args.format == "markdown":
        rows = [[k, v] for k, v in zip(header, row)]
        text = report.emit_table(["field", "value"], rows, "markdown")
    else:
        text = report.emit_table(header, [row], args.format)
    _write(text, args.out)
    return 0


def cmd_plot(args) -> int:
    g = DimensionParam(args.g)
    primes, counts = density_mod.prime_series(g, args.x_max)
    fs = counts / np.arange(1, len(primes) + 1, dtype=np.float64)
    svg = report.emit_svg(
        [int(p) for p in primes],
        [float(v) for v in fs],
        density_mod.asymptotic_limit(g),
        g.g,
        args.x_max,
    )
    _write(svg, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weilcert",
        description="Weil quadruple certificates and prime-density experiments "
        "for Sophie Germain prime dimensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=report.FORMATS, default="csv", help="output format"
        )
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("find", help="smallest-p quadruple for one g")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--p-max", type=int, default=DEFAULT_FIND_PMAX)
    p.add_argument("--p", type=int, default=None, help="with --m: solve at this p")
    p.add_argument(
        "--m",
        type=int,
        default=None,
        help="solve a^2 - 4p^(g-2m) = -(2g+1)s^2 at the given --p",
    )
    common(p)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("scan", help="all quadruples with p up to a bound")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("table2", help="smallest-p quadruple per dimension g")
    p.add_argument("--g-max", type=int, default=DEFAULT_G_MAX)
    p.add_argument("--p-max", type=int, default=DEFAULT_FIND_PMAX)
    common(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("density", help="exact counting function at checkpoints")
    p.add_argument("--g", type=int, required=True)
    p.add_argument(
        "--checkpoints", default=None, help="comma-separated ascending integers"
    )
    p.add_argument(
        "--series", default=None, help="also write the per-prime stream to this path"
    )
    common(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("limit", help="class number and density limit for one g")
    p.add_argument("--g", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("certify", help="verify all certificate identities")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("classnum", help="class number of a negative discriminant")
    p.add_argument("--disc", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_classnum)

    p = sub.add_parser("plot", help="SVG scatter of the counting function")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--x-max", type=int, default=DEFAULT_PLOT_XMAX)
    common(p)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
