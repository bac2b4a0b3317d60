"""Output rendering: delimited tables, native SVG scatter, matplotlib figures.

CSV carries 9 significant digits; JSON carries full float precision.  The
SVG zero scatter is hand-rolled (valid XML, one marker element per zero) so
it stays dependency-free and machine-checkable; the richer report figures
go through matplotlib onto PNG/PDF files next to the delimited output.
"""

from __future__ import annotations

import csv
import io
import json
import math
from xml.sax.saxutils import escape


def fmt9(x) -> str:
    """9-significant-digit rendering used in CSV cells."""
    if isinstance(x, complex):
        return f"{x.real:.9g}{x.imag:+.9g}j"
    if isinstance(x, float):
        return f"{x:.9g}"
    return str(x)


def rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt9(v) for v in row])
    return buf.getvalue()


def rows_to_json(config: dict, header, rows, diagnostics: dict) -> str:
    def jsonable(v):
        if isinstance(v, complex):
            return {"re": v.real, "im": v.imag}
        return v

    payload = {
        "config": config,
        "rows": [dict(zip(header, (jsonable(v) for v in row))) for row in rows],
        "diagnostics": diagnostics,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def zeros_svg(roots, title: str = "", width: int = 640, height: int = 420) -> str:
    """Scatter of complex zeros: complex-plane panel plus a real-axis rug.

    One <circle class="zero"> element per zero; axes as <line> elements.
    """
    pad = 40.0
    res = [r.real for r in roots]
    ims = [r.imag for r in roots]
    lo_x, hi_x = min(res), max(res)
    lo_y, hi_y = min(ims + [0.0]), max(ims + [0.0])
    span_x = (hi_x - lo_x) or 1.0
    span_y = (hi_y - lo_y) or 1.0
    lo_x -= 0.08 * span_x
    hi_x += 0.08 * span_x
    lo_y -= 0.15 * span_y
    hi_y += 0.15 * span_y

    def sx(x):
        return pad + (x - lo_x) / (hi_x - lo_x) * (width - 2 * pad)

    def sy(y):
        return (height - pad) - (y - lo_y) / (hi_y - lo_y) * (height - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{sy(0):.2f}" x2="{width - pad}" y2="{sy(0):.2f}" '
        'stroke="#888" stroke-width="1"/>',
    ]
    if lo_x <= 0 <= hi_x:
        parts.append(f'<line x1="{sx(0):.2f}" y1="{pad}" x2="{sx(0):.2f}" y2="{height - pad}" '
                     'stroke="#bbb" stroke-width="1"/>')
    if title:
        parts.append(f'<text x="{pad}" y="{pad - 16}" font-size="13" font-family="sans-serif">'
                     f"{escape(title)}</text>")
    for r in roots:
        real = abs(r.imag) < 1e-9 * (1 + abs(r.real))
        color = "#1f77b4" if real else "#d62728"
        parts.append(f'<circle class="zero" cx="{sx(r.real):.2f}" cy="{sy(r.imag):.2f}" '
                     f'r="4" fill="{color}" fill-opacity="0.8"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def sweep_svg(panels, width: int = 640, panel_height: int = 220) -> str:
    """Stacked zero-scatter panels, one per sweep grid point."""
    blocks = []
    total_h = panel_height * max(len(panels), 1)
    blocks.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
                  f'height="{total_h}" viewBox="0 0 {width} {total_h}">')
    for i, (label, roots) in enumerate(panels):
        inner = zeros_svg(roots, title=label, width=width, height=panel_height)
        body = inner.split("\n", 1)[1].rsplit("</svg>", 1)[0]
        blocks.append(f'<g transform="translate(0,{i * panel_height})">{body}</g>')
    blocks.append("</svg>")
    return "\n".join(blocks) + "\n"


def save_zero_figure(roots, path: str, title: str = "") -> None:
    """Matplotlib rendering of a zero set (complex plane + real-axis rug)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax, rug) = plt.subplots(
        2, 1, figsize=(7, 5), height_ratios=[4, 1], sharex=True, constrained_layout=True)
    res = [r.real for r in roots]
    ims = [r.imag for r in roots]
    real_mask = [abs(im) < 1e-9 * (1 + abs(re)) for re, im in zip(res, ims)]
    ax.scatter([x for x, m in zip(res, real_mask) if m], [y for y, m in zip(ims, real_mask) if m],
               marker="o", color="tab:blue", label="real")
    ax.scatter([x for x, m in zip(res, real_mask) if not m],
               [y for y, m in zip(ims, real_mask) if not m],
               marker="x", color="tab:red", label="complex")
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.set_ylabel("Im z")
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title)
    rug.eventplot([x for x, m in zip(res, real_mask) if m], colors="tab:blue", lineoffsets=0.0)
    rug.set_yticks([])
    rug.set_xlabel("Re z")
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_sweep_figure(panels, path: str) -> None:
    """Matplotlib grid of zero scatters, one panel per sweep point."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n = max(len(panels), 1)
    ncol = min(n, 2)
    nrow = math.ceil(n / ncol)
    fig, axes = plt.subplots(nrow, ncol, figsize=(6 * ncol, 3.2 * nrow),
                             constrained_layout=True, squeeze=False)
    for ax in axes.flat[n:]:
        ax.set_visible(False)
    for ax, (label, roots) in zip(axes.flat, panels):
        res = [r.real for r in roots]
        ims = [r.imag for r in roots]
        real_mask = [abs(im) < 1e-9 * (1 + abs(re)) for re, im in zip(res, ims)]
        ax.scatter([x for x, m in zip(res, real_mask) if m],
                   [0.0] * sum(real_mask), marker="o", color="tab:blue", s=18)
        ax.scatter([x for x, m in zip(res, real_mask) if not m],
                   [y for y, m in zip(ims, real_mask) if not m],
                   marker="x", color="tab:red", s=18)
        ax.axhline(0.0, color="0.6", lw=0.8)
        ax.set_title(label, fontsize=9)
    fig.savefig(path, dpi=150)
    plt.close(fig)
