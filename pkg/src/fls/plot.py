"""Two-panel SVG of a 2x2 system.

Left panel: the right-hand-side rectangle and its alpha-level boxes.
Right panel: the solution parallelogram and its alpha-level cuts.
Crisp points are drawn as filled dots. Output is deterministic.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .fuzzy_core import fuzzy_alpha_cut
from .solver import FuzzyLinearSystem, parametric_b_cr, system_cut, vertices

WIDTH, HEIGHT = 800, 400
PANEL = 400
MARGIN = 0.10
# alpha = 0 solid, then dotted, then dashed
STYLES = ["", "2,4", "8,4"]

# binary-counter vertex order -> boundary order
_RING = [0, 1, 3, 2]


class UnsupportedDimensionError(ValueError):
    pass


def _num(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Panel:
    def __init__(self, points: np.ndarray, x0: float):
        lo = points.min(axis=0)
        hi = points.max(axis=0)
        span = np.where(hi - lo > 0, hi - lo, 1.0)
        lo = lo - MARGIN * span
        hi = hi + MARGIN * span
        self.lo, self.hi, self.x0 = lo, hi, x0
        usable = PANEL - 40
        self.k = usable / max(hi - lo)  # equal scale on both axes
        self.off = (usable - self.k * (hi - lo)) / 2 + 20

    def map(self, p) -> tuple[float, float]:
        px = self.x0 + self.off[0] + self.k * (p[0] - self.lo[0])
        py = HEIGHT - (self.off[1] + self.k * (p[1] - self.lo[1]))
        return px, py


def _polygon(panel: _Panel, ring: np.ndarray, alpha: float, style: str, role: str) -> str:
    screen = " ".join(f"{_num(x)},{_num(y)}" for x, y in (panel.map(p) for p in ring))
    model = " ".join(f"{_num(p[0])},{_num(p[1])}" for p in ring)
    dash = f' stroke-dasharray="{style}"' if style else ""
    return (
        f'<polygon class="{role}" data-alpha="{_num(alpha)}" data-vertices="{model}" '
        f'points="{screen}" fill="none" stroke="black" stroke-width="1.5"{dash}/>'
    )


def _dot(panel: _Panel, p, role: str) -> str:
    x, y = panel.map(p)
    return f'<circle class="{role}" data-point="{_num(p[0])},{_num(p[1])}" cx="{_num(x)}" cy="{_num(y)}" r="4" fill="black"/>'


def render_svg(sys: FuzzyLinearSystem, alpha_levels: Sequence[float] = ()) -> str:
    if sys.n != 2:
        raise UnsupportedDimensionError(f"plotting needs a 2x2 system, got n={sys.n}")
    levels = [0.0] + [float(a) for a in alpha_levels if float(a) != 0.0]

    rhs_rings, sol_rings = [], []
    for alpha in levels:
        (l1, r1), (l2, r2) = (fuzzy_alpha_cut(f, alpha) for f in sys.rhs)
        rhs_rings.append(np.array([[l1, l2], [r1, l2], [r1, r2], [l1, r2]]))
        sol_rings.append(vertices(system_cut(sys, alpha))[_RING])

    if sys.is_parametric:
        b_cr = parametric_b_cr(sys)
    else:
        b_cr = np.array([f.c for f in sys.rhs])
    x_cr = system_cut(sys, 1.0).x_cr

    left = _Panel(np.vstack(rhs_rings + [b_cr[None, :]]), 0)
    right = _Panel(np.vstack(sol_rings + [x_cr[None, :]]), PANEL)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{PANEL}" y1="0" x2="{PANEL}" y2="{HEIGHT}" stroke="#999999"/>',
        '<text x="10" y="16" font-family="sans-serif" font-size="12">right-hand side</text>',
        f'<text x="{PANEL + 10}" y="16" font-family="sans-serif" font-size="12">solution</text>',
    ]
    for i, alpha in enumerate(levels):
        style = STYLES[0] if i == 0 else STYLES[1 + (i - 1) % 2]
        out.append(_polygon(left, rhs_rings[i], alpha, style, "rhs"))
        out.append(_polygon(right, sol_rings[i], alpha, style, "solution"))
    out.append(_dot(left, b_cr, "rhs-crisp"))
    out.append(_dot(right, x_cr, "solution-crisp"))
    out.append("</svg>")
    return "\n".join(out) + "\n"
