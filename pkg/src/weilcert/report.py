"""Serialization helpers: exact decimal rendering, CSV/JSON/markdown
tables, and the SVG scatter plot.

Every numeric field is rendered from exact integers or rationals; binary
floating point only ever appears in SVG coordinates.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

Cell = int | str

FORMATS = ("csv", "json", "markdown")

DECIMAL_PLACES = 8
SVG_MAX_POINTS = 5000


def decimal_string(q: Fraction, places: int = DECIMAL_PLACES) -> str:
    """Fixed-point decimal of an exact rational, round-half-up at the
    digit after the last kept place (half away from zero for negatives)."""
    sign = "-" if q < 0 else ""
    n, d = abs(q.numerator), q.denominator
    quo, rem = divmod(n * 10**places, d)
    if 2 * rem >= d:
        quo += 1
    whole, frac = divmod(quo, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def emit_table(header: Sequence[str], rows: Sequence[Sequence[Cell]], fmt: str) -> str:
    """Render rows under a header as csv, json, or markdown.

    Cells are ints or already-canonical strings; JSON keeps ints as
    numbers and everything else as strings, so no float ever appears.
    """
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(c) for c in row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        objs = [
            {k: c for k, c in zip(header, row)}
            for row in rows
        ]
        return json.dumps(objs, indent=2) + "\n"
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "|".join(" --- " for _ in header) + "|")
        lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r} (expected one of {FORMATS})")


def parse_csv(text: str) -> tuple[list[str], list[list[str]]]:
    """Inverse of the csv emitter (fields never contain commas)."""
    lines = [ln for ln in text.split("\n") if ln != ""]
    header = lines[0].split(",")
    return header, [ln.split(",") for ln in lines[1:]]


def emit_svg(
    xs: Sequence[int],
    fs: Sequence[float],
    limit: Fraction,
    g: int,
    x_max: int,
    width: int = 840,
    height: int = 520,
) -> str:
    """Scatter of (x, f) points with a single dashed horizontal limit line.

    Series longer than SVG_MAX_POINTS are thinned to every k-th point; the
    decimation factor and raw point count are recorded in the <desc>
    metadata element.
    """
    if len(xs) != len(fs):
        raise ValueError("xs and fs must have equal length")
    total = len(xs)
    step = max(1, -(-total // SVG_MAX_POINTS))  # ceil division
    xs_kept = list(xs[::step])
    fs_kept = list(fs[::step])

    margin_l, margin_r, margin_t, margin_b = 70, 20, 20, 50
    plot_w = width - margin_l - margin_r
    plot_h = height - margin_t - margin_b
    limit_f = limit.numerator / limit.denominator
    y_top = max([limit_f] + fs_kept) * 1.1 or 1.0

    def sx(x: float) -> float:
        return margin_l + plot_w * x / x_max

    def sy(y: float) -> float:
        return margin_t + plot_h * (1 - y / y_top)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f"<desc>points={total} kept={len(xs_kept)} decimation={step} "
        f"limit={limit.numerator}/{limit.denominator}</desc>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        # axes
        f'<line x1="{margin_l}" y1="{sy(0)}" x2="{width - margin_r}" '
        f'y2="{sy(0)}" stroke="black" stroke-width="1"/>',
        f'<line x1="{margin_l}" y1="{margin_t}" x2="{margin_l}" '
        f'y2="{sy(0)}" stroke="black" stroke-width="1"/>',
    ]
    for i in range(5):
        xt = x_max * (i + 1) / 5
        parts.append(
            f'<line x1="{sx(xt)}" y1="{sy(0)}" x2="{sx(xt)}" y2="{sy(0) + 5}" '
            'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{sx(xt)}" y="{sy(0) + 20}" text-anchor="middle" '
            f'font-size="12">{int(xt)}</text>'
        )
        yt = y_top * (i + 1) / 5
        parts.append(
            f'<line x1="{margin_l - 5}" y1="{sy(yt)}" x2="{margin_l}" '
            f'y2="{sy(yt)}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{margin_l - 8}" y="{sy(yt) + 4}" text-anchor="end" '
            f'font-size="12">{yt:.3f}</text>'
        )
    parts.append(
        f'<text x="{margin_l + plot_w / 2}" y="{height - 10}" '
        'text-anchor="middle" font-size="14">x</text>'
    )
    parts.append(
        f'<text x="18" y="{margin_t + plot_h / 2}" text-anchor="middle" '
        f'font-size="14" transform="rotate(-90 18 {margin_t + plot_h / 2})">'
        f"f_{g}(x)</text>"
    )
    for x, f in zip(xs_kept, fs_kept):
        parts.append(
            f'<circle cx="{sx(x):.2f}" cy="{sy(f):.2f}" r="1.5" fill="red"/>'
        )
    parts.append(
        f'<line class="limit-line" x1="{margin_l}" y1="{sy(limit_f):.2f}" '
        f'x2="{width - margin_r}" y2="{sy(limit_f):.2f}" stroke="blue" '
        'stroke-width="1.5" stroke-dasharray="6 4"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
