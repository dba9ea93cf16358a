"""Deterministic SVG rendering of plat diagrams.

Strands are drawn bottom-to-top with the word's first letter in the lowest
crossing band; cups close the bottom, caps the top.  The under-strand at
each crossing is drawn with a gap.  Element ids are stable and part of the
public contract: crossing-<k> (1-based word position), cup-<j>, cap-<j>.
Output is byte-identical for identical input and spec.
"""

from __future__ import annotations

from dataclasses import dataclass

from .plats import Plat


@dataclass(frozen=True)
class RenderSpec:
    width: int | None = None          # computed from strand count when None
    height: int | None = None         # computed from word length when None
    strand_spacing: int = 36
    crossing_gap: int = 6
    labels: bool = False
    margin: int = 24
    row_height: int = 36

    def __post_init__(self):
        for name in ("strand_spacing", "crossing_gap", "margin", "row_height"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.width is not None and self.width <= 0:
            raise ValueError("width must be positive")
        if self.height is not None and self.height <= 0:
            raise ValueError("height must be positive")

    @classmethod
    def from_json_dict(cls, data) -> "RenderSpec":
        allowed = {"width", "height", "strand_spacing", "crossing_gap",
                   "labels", "margin", "row_height"}
        return cls(**{k: v for k, v in dict(data).items() if k in allowed})


def _fmt(x: float) -> str:
    return f"{x:.1f}".rstrip("0").rstrip(".")


def render_svg(p: Plat, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    m = p.strands
    letters = p.word.letters
    length = len(letters)
    bands = length + 1  # crossing bands plus one plain band below the caps

    def x(col: int) -> float:
        return spec.margin + (col - 1) * spec.strand_spacing

    def y(level: int) -> float:
        # level 0 = bottom cups, level bands = top caps
        return spec.margin + (bands - level) * spec.row_height

    width = spec.width or int(2 * spec.margin + (m - 1) * spec.strand_spacing)
    height = spec.height or int(2 * spec.margin + bands * spec.row_height)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<g fill="none" stroke="#1a1a1a" stroke-width="2" '
        'stroke-linecap="round">',
    ]

    bulge = spec.strand_spacing * 0.75
    for j, (a, b) in enumerate(p.bottom.pairs, start=1):
        y0 = y(0)
        parts.append(
            f'<path id="cup-{j}" d="M {_fmt(x(a))} {_fmt(y0)} '
            f'C {_fmt(x(a))} {_fmt(y0 + bulge)} {_fmt(x(b))} {_fmt(y0 + bulge)} '
            f'{_fmt(x(b))} {_fmt(y0)}"/>')
    for j, (a, b) in enumerate(p.top.pairs, start=1):
        y1 = y(bands)
        parts.append(
            f'<path id="cap-{j}" d="M {_fmt(x(a))} {_fmt(y1)} '
            f'C {_fmt(x(a))} {_fmt(y1 - bulge)} {_fmt(x(b))} {_fmt(y1 - bulge)} '
            f'{_fmt(x(b))} {_fmt(y1)}"/>')

    def vline(col: int, lo: int, hi: int) -> str:
        return (f'<line x1="{_fmt(x(col))}" y1="{_fmt(y(lo))}" '
                f'x2="{_fmt(x(col))}" y2="{_fmt(y(hi))}"/>')

    for band in range(1, length + 1):
        letter = letters[band - 1]
        i = abs(letter)
        lo, hi = band - 1, band
        lines = [vline(c, lo, hi) for c in range(1, m + 1) if c not in (i, i + 1)]
        xa, xb = x(i), x(i + 1)
        ya, yb = y(lo), y(hi)
        cx, cy = (xa + xb) / 2, (ya + yb) / 2
        gap = spec.crossing_gap
        dx = (xb - xa) / 2
        dy = (yb - ya) / 2
        norm = (dx * dx + dy * dy) ** 0.5
        ux, uy = dx / norm * gap, dy / norm * gap
        # positive letter: the strand entering at column i passes over
        over_left = letter > 0
        over = f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}"/>'
        under = (
            f'<line x1="{_fmt(xb)}" y1="{_fmt(ya)}" x2="{_fmt(cx + ux)}" y2="{_fmt(cy - uy)}"/>'
            f'<line x1="{_fmt(cx - ux)}" y1="{_fmt(cy + uy)}" x2="{_fmt(xa)}" y2="{_fmt(yb)}"/>')
        if not over_left:
            over = f'<line x1="{_fmt(xb)}" y1="{_fmt(ya)}" x2="{_fmt(xa)}" y2="{_fmt(yb)}"/>'
            under = (
                f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(cx - ux)}" y2="{_fmt(cy - uy)}"/>'
                f'<line x1="{_fmt(cx + ux)}" y1="{_fmt(cy + uy)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}"/>')
        crossing = f'<g id="crossing-{band}">{under}{over}</g>'
        parts.append("".join(lines) + crossing)

    # plain band under the caps
    parts.append("".join(vline(c, length, bands) for c in range(1, m + 1)))

    if spec.labels:
        for c in range(1, m + 1):
            parts.append(
                f'<text x="{_fmt(x(c))}" y="{_fmt(y(0) + bulge + 14)}" '
                f'font-size="11" fill="#555" stroke="none" '
                f'text-anchor="middle">{c}</text>')

    parts.append("</g></svg>")
    return "".join(parts)
