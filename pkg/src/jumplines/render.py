"""Static SVG rendering of monoidal curves and configurations.

Display-only: coefficients are converted to floats and the zero contour is
traced with marching squares on a fixed grid in the affine chart x2 = 1.
Exact results never depend on this module.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import DegenerateInputError
from .forms import HForm, gamma_minors, monoidal_det, monomials
from .geom import PointConfig

# marching-squares segment table: per corner-sign case, pairs of cell edges
# (edges 0..3 = bottom, right, top, left) joined by a contour segment
_EDGES = {
    1: [(3, 0)], 2: [(0, 1)], 3: [(3, 1)], 4: [(1, 2)], 6: [(0, 2)], 7: [(3, 2)],
    8: [(2, 3)], 9: [(2, 0)], 11: [(2, 1)], 12: [(1, 3)], 13: [(1, 0)], 14: [(0, 3)],
}


def _affine_samples(f: HForm, x: float, y: float) -> float:
    acc = 0.0
    for (a, b, _c), coeff in zip(monomials(f.degree), f.coeffs):
        acc += float(coeff) * (x ** a) * (y ** b)
    return acc


def _cell_segments(x0, y0, step, v):
    """Contour segments of one grid cell from its corner values."""
    case = 0
    for i, val in enumerate(v):
        if val > 0:
            case |= 1 << i
    if case in (0, 15):
        return []
    corners = ((x0, y0), (x0 + step, y0), (x0 + step, y0 + step), (x0, y0 + step))

    def edge_point(e):
        a, b = e, (e + 1) % 4
        va, vb = v[a], v[b]
        t = 0.5 if va == vb else va / (va - vb)
        t = min(max(t, 0.0), 1.0)
        xa, ya = corners[a]
        xb, yb = corners[b]
        return (xa + t * (xb - xa), ya + t * (yb - ya))

    if case in (5, 10):
        center = sum(v) / 4.0
        if (center > 0) == (case == 5):
            pairs = [(3, 0), (1, 2)]
        else:
            pairs = [(0, 1), (2, 3)]
    else:
        pairs = _EDGES[case]
    return [(edge_point(a), edge_point(b)) for a, b in pairs]


def contour_segments(f: HForm, window, grid: int):
    """Marching-squares zero contour of f(x, y, 1) over a square window."""
    (xmin, xmax), (ymin, ymax) = window
    step_x = (xmax - xmin) / grid
    step_y = (ymax - ymin) / grid
    samples = [
        [_affine_samples(f, xmin + i * step_x, ymin + j * step_y) for j in range(grid + 1)]
        for i in range(grid + 1)
    ]
    segments = []
    for i in range(grid):
        for j in range(grid):
            v = (samples[i][j], samples[i + 1][j], samples[i + 1][j + 1], samples[i][j + 1])
            # cell coordinates use the true (possibly anisotropic) steps
            for (ax, ay), (bx, by) in _cell_segments(0.0, 0.0, 1.0, v):
                segments.append(
                    (
                        (xmin + (i + ax) * step_x, ymin + (j + ay) * step_y),
                        (xmin + (i + bx) * step_x, ymin + (j + by) * step_y),
                    )
                )
    return segments


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def render_svg(cfg: PointConfig, grid: int = 160, size: int = 640) -> str:
    """SVG picture of the configuration and its determinantal curves.

    Odd configurations get the monoidal curve; even ones get the overlaid
    extra-jumping minors (their common intersections locate the extra
    jumping points).  Needs a rational-field configuration: drawing requires
    an ordered field embedding.
    """
    if cfg.field.kind != "q":
        raise DegenerateInputError("rendering needs a rational-field configuration")
    affine = [(float(Fraction(p[0]) / p[2]), float(Fraction(p[1]) / p[2])) for p in cfg.points if p[2] != 0]
    if not affine:
        raise DegenerateInputError("no affine points to set a window")
    xs = [a for a, _ in affine]
    ys = [b for _, b in affine]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
    half = 0.75 * span
    window = ((cx - half, cx + half), (cy - half, cy + half))

    if len(cfg) % 2:
        curves = [(monoidal_det(cfg), _PALETTE[0])]
    else:
        curves = [(f, _PALETTE[i % len(_PALETTE)]) for i, f in enumerate(gamma_minors(cfg))]

    def to_px(x, y):
        (xmin, xmax), (ymin, ymax) = window
        px = (x - xmin) / (xmax - xmin) * size
        py = size - (y - ymin) / (ymax - ymin) * size
        return px, py

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for f, color in curves:
        for (ax, ay), (bx, by) in contour_segments(f, window, grid):
            x1, y1 = to_px(ax, ay)
            x2, y2 = to_px(bx, by)
            parts.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                f'stroke="{color}" stroke-width="1.2"/>'
            )
    for ax, ay in affine:
        x, y = to_px(ax, ay)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
