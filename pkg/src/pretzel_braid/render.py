"""Deterministic SVG drawings of braid words.

Strands run top to bottom at x positions 1..s.  For a positive letter the
over strand goes from bottom-left to top-right; the under strand is drawn
with a gap where it passes beneath.
"""
from __future__ import annotations

import os

from .braid import BraidWord

DX = 40          # horizontal spacing of strand positions
DY = 40          # height of one letter row
PAD = 20
GAP = 0.22       # fraction of the under strand removed on each side of the middle

_STROKE = 'stroke="black" stroke-width="3" fill="none" stroke-linecap="round"'


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _line(x1: float, y1: float, x2: float, y2: float) -> str:
    return f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'


def svg_text(w: BraidWord) -> str:
    """SVG document for ``w``; identical words give identical bytes.

    >>> from .braid import word_from_seq
    >>> svg_text(word_from_seq([], 3)).count("<line")
    3
    """
    s, rows = w.strands, max(len(w), 1)
    width = 2 * PAD + DX * (s - 1)
    height = 2 * PAD + DY * rows
    x = [PAD + DX * k for k in range(s)]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<g {_STROKE}>',
    ]
    if not w.letters:
        out.extend(_line(xk, PAD, xk, height - PAD) for xk in x)
    for r, m in enumerate(w.letters):
        y0, y1 = PAD + DY * r, PAD + DY * (r + 1)
        i = abs(m) - 1
        for k in range(s):
            if k not in (i, i + 1):
                out.append(_line(x[k], y0, x[k], y1))
        # over strand runs SW-NE for positive letters, NW-SE for negative
        if m > 0:
            over = (x[i], y1, x[i + 1], y0)
            under = (x[i], y0, x[i + 1], y1)
        else:
            over = (x[i], y0, x[i + 1], y1)
            under = (x[i], y1, x[i + 1], y0)
        ux1, uy1, ux2, uy2 = under
        t = 0.5 - GAP
        cls = "pos" if m > 0 else "neg"
        out.append(f'<g class="crossing {cls}">')
        out.append(_line(ux1, uy1, ux1 + (ux2 - ux1) * t, uy1 + (uy2 - uy1) * t))
        out.append(_line(ux2 + (ux1 - ux2) * t, uy2 + (uy1 - uy2) * t, ux2, uy2))
        out.append(_line(*over))
        out.append("</g>")
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(w: BraidWord, path: str | os.PathLike) -> None:
    """Write the drawing of ``w`` to ``path`` (raises ``OSError`` if unwritable)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg_text(w))
