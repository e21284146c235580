"""Minimal dependency-free SVG line plots.

Plots are a viewing convenience; the CSV files are the data contract.  Output
is deterministic for fixed input (fixed formatting, no timestamps).
"""
from __future__ import annotations

import math
from typing import List, Sequence, Tuple

_W, _H = 720, 480
_ML, _MR, _MT, _MB = 72, 24, 36, 56
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _ticks(lo: float, hi: float, n: int = 5) -> List[float]:
    if not math.isfinite(lo) or not math.isfinite(hi) or hi <= lo:
        return [lo]
    span = hi - lo
    step = 10.0 ** math.floor(math.log10(span / n))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if span / (step * mult) <= n:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + 1e-12 * span:
        out.append(t)
        t += step
    return out or [lo]


def polyline_plot(path: str, series: Sequence[Tuple[str, Sequence[float], Sequence[float]]],
                  xlabel: str, ylabel: str, title: str = "",
                  logy: bool = False) -> None:
    """Write a line plot of the given (label, xs, ys) series to an SVG file.

    ``logy`` plots log10 of the y values (non-positive and nan samples are
    dropped from the polylines either way).
    """
    pts = []
    for _, xs, ys in series:
        for x, y in zip(xs, ys):
            if math.isfinite(x) and math.isfinite(y) and (not logy or y > 0.0):
                pts.append((x, math.log10(y) if logy else y))
    if not pts:
        raise ValueError("nothing to plot: no finite samples")
    xlo = min(p[0] for p in pts)
    xhi = max(p[0] for p in pts)
    ylo = min(p[1] for p in pts)
    yhi = max(p[1] for p in pts)
    if xhi == xlo:
        xhi = xlo + 1.0
    if yhi == ylo:
        yhi = ylo + 1.0
    pad = 0.04 * (yhi - ylo)
    ylo -= pad
    yhi += pad

    def sx(x):
        return _ML + (x - xlo) / (xhi - xlo) * (_W - _ML - _MR)

    def sy(y):
        return _H - _MB - (y - ylo) / (yhi - ylo) * (_H - _MT - _MB)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
           f'viewBox="0 0 {_W} {_H}">',
           f'<rect width="{_W}" height="{_H}" fill="white"/>']
    # axes
    out.append(f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" y2="{_H - _MB}" '
               'stroke="black" stroke-width="1"/>')
    out.append(f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H - _MB}" '
               'stroke="black" stroke-width="1"/>')
    for t in _ticks(xlo, xhi):
        x = sx(t)
        out.append(f'<line x1="{_fmt(x)}" y1="{_H - _MB}" x2="{_fmt(x)}" '
                   f'y2="{_H - _MB + 5}" stroke="black"/>')
        out.append(f'<text x="{_fmt(x)}" y="{_H - _MB + 18}" font-size="11" '
                   f'text-anchor="middle">{_fmt(t)}</text>')
    for t in _ticks(ylo, yhi):
        y = sy(t)
        label = _fmt(t) if not logy else f"1e{_fmt(t)}"
        out.append(f'<line x1="{_ML - 5}" y1="{_fmt(y)}" x2="{_ML}" '
                   f'y2="{_fmt(y)}" stroke="black"/>')
        out.append(f'<text x="{_ML - 8}" y="{_fmt(y + 4)}" font-size="11" '
                   f'text-anchor="end">{label}</text>')
    out.append(f'<text x="{(_ML + _W - _MR) // 2}" y="{_H - 12}" font-size="13" '
               f'text-anchor="middle">{xlabel}</text>')
    out.append(f'<text x="16" y="{(_MT + _H - _MB) // 2}" font-size="13" '
               f'text-anchor="middle" transform="rotate(-90 16 '
               f'{(_MT + _H - _MB) // 2})">{ylabel}</text>')
    if title:
        out.append(f'<text x="{_W // 2}" y="22" font-size="14" '
                   f'text-anchor="middle">{title}</text>')
    # series
    for i, (label, xs, ys) in enumerate(series):
        color = _COLORS[i % len(_COLORS)]
        chunks: List[List[str]] = [[]]
        for x, y in zip(xs, ys):
            if math.isfinite(x) and math.isfinite(y) and (not logy or y > 0.0):
                yy = math.log10(y) if logy else y
                chunks[-1].append(f"{_fmt(sx(x))},{_fmt(sy(yy))}")
            elif chunks[-1]:
                chunks.append([])
        for chunk in chunks:
            if len(chunk) >= 2:
                out.append(f'<polyline points="{" ".join(chunk)}" fill="none" '
                           f'stroke="{color}" stroke-width="1.5"/>')
        out.append(f'<text x="{_W - _MR - 8}" y="{_MT + 16 + 16 * i}" '
                   f'font-size="12" text-anchor="end" fill="{color}">{label}</text>')
    out.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out) + "\n")
