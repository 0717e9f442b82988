"""SVG 1.1 drawings of a scene and its escape path.

Output is a pure function of the inputs: coordinates carry six decimals and
elements are written in a fixed order, so equal inputs give equal bytes.
"""

from __future__ import annotations

import math
from typing import Optional

from .escape import EscapePlan
from .geometry import Circle
from .scene import Scene

MAX_MARKS = 500


def _f(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(scene: Scene, plan: Optional[EscapePlan] = None) -> str:
    curve = scene.curve
    x0, y0, x1, y1 = curve.bbox()
    extent = max(x1 - x0, y1 - y0)
    pad = 0.05 * extent
    stroke = 0.004 * extent
    # y is flipped by the group transform, so the view box spans -y
    view = (x0 - pad, -(y1 + pad), (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="{}" viewBox="{}">'.format(
            _f(800 * view[3] / view[2]), " ".join(_f(v) for v in view)),
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" '
        'orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="#c0392b"/></marker>',
        "</defs>",
        '<g transform="scale(1,-1)">',
    ]
    if isinstance(curve, Circle):
        cx, cy = curve.center.coords
        out.append(f'<circle class="boundary" cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(curve.radius)}" '
                   f'fill="none" stroke="#2c3e50" stroke-width="{_f(stroke)}"/>')
    else:
        pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in curve.vertices.tolist())
        out.append(f'<polygon class="boundary" points="{pts}" fill="none" stroke="#2c3e50" '
                   f'stroke-width="{_f(stroke)}"/>')

    magnets = scene.magnetized.magnets.points
    step = max(1, math.ceil(len(magnets) / MAX_MARKS))
    out.append(f'<g class="magnets" fill="#2980b9">')
    dot = _f(1.5 * stroke)
    for x, y in magnets[::step].tolist():
        out.append(f'<circle class="magnet" cx="{_f(x)}" cy="{_f(y)}" r="{dot}"/>')
    out.append("</g>")

    if scene.hiker is not None:
        hx, hy = scene.hiker.coords
        out.append(f'<circle class="hiker" cx="{_f(hx)}" cy="{_f(hy)}" r="{_f(4 * stroke)}" fill="#27ae60"/>')
    if plan is not None:
        (hx, hy), (ex, ey) = plan.hiker.coords, plan.exit_point.coords
        out.append(f'<path class="escape" d="M{_f(hx)},{_f(hy)} L{_f(ex)},{_f(ey)}" fill="none" '
                   f'stroke="#c0392b" stroke-width="{_f(stroke)}" marker-end="url(#arrow)"/>')
    out += ["</g>", "</svg>", ""]
    return "\n".join(out)
