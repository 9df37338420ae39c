"""Deterministic SVG pictures for three-row matrices.

Arrangements are drawn in the plane chart (x2 - x1, x3 - x1) with the
y-axis pointing up; each column contributes one max-plus tropical line
(three rays from its apex) in its own stroke class.  Mixed pictures show
the dual subdivision of the dilated triangle with its lattice points
labeled.  All geometry is computed in exact rationals and only formatted
to decimals at the very end, so identical inputs give identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from math import sqrt
from typing import Iterable, Sequence

from .core import TropMatrix
from .errors import UnsupportedCaseError
from .poly import Exponent, arrangement_poly
from .polyhedral import interior_point, normal_complex

_PALETTE = (
    "#1b6ca8",
    "#c7402d",
    "#2e8540",
    "#8a3ffc",
    "#b8860b",
    "#0f7c8c",
    "#ad1457",
    "#5d4037",
)

_RAYS = ((Fraction(1), Fraction(1)), (Fraction(-1), Fraction(0)), (Fraction(0), Fraction(-1)))

SCALE = 60  # pixels per world unit
MARGIN = Fraction(1, 20)  # 5% of the content box on every side


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _require_three_rows(d: int) -> None:
    if d != 3:
        raise UnsupportedCaseError(
            f"plots are only drawn for 3-row matrices, got {d} rows"
        )


class _Canvas:
    """World-to-pixel mapping with the y-axis flipped."""

    def __init__(self, x0, x1, y0, y1):
        pad_x = (x1 - x0) * MARGIN
        pad_y = (y1 - y0) * MARGIN
        self.x0, self.x1 = x0 - pad_x, x1 + pad_x
        self.y0, self.y1 = y0 - pad_y, y1 + pad_y
        self.w = float((self.x1 - self.x0) * SCALE)
        self.h = float((self.y1 - self.y0) * SCALE)

    def pt(self, x, y) -> tuple[str, str]:
        px = float((Fraction(x) - self.x0) * SCALE)
        py = float((self.y1 - Fraction(y)) * SCALE)
        return _fmt(px), _fmt(py)


def _svg_document(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _ray_exit(apex, direction, box) -> tuple[Fraction, Fraction]:
    """Where the ray leaves the content box (apex is inside)."""
    x0, x1, y0, y1 = box
    t_best = None
    for a, u, lo, hi in (
        (apex[0], direction[0], x0, x1),
        (apex[1], direction[1], y0, y1),
    ):
        if u > 0:
            t = (hi - a) / u
        elif u < 0:
            t = (lo - a) / u
        else:
            continue
        if t_best is None or t < t_best:
            t_best = t
    return apex[0] + t_best * direction[0], apex[1] + t_best * direction[1]


def render_arrangement(v: TropMatrix) -> str:
    """Tropical lines of all columns plus cell labels at the dual lattice
    points of the arrangement's regions."""
    _require_three_rows(v.d)
    apexes = []
    for k in range(v.n):
        col = v.column(k)
        if not all(e.is_finite for e in col):
            raise UnsupportedCaseError("plotting needs finite columns")
        apexes.append(
            (col[1].value - col[0].value, col[2].value - col[0].value)
        )
    xs = [a for a, _ in apexes]
    ys = [b for _, b in apexes]
    pad = max(Fraction(2), (max(xs) - min(xs) + max(ys) - min(ys)) // 2 + 1)
    box = (min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad)
    canvas = _Canvas(*box)
    body = ["  <g fill=\"none\" stroke-width=\"2\">"]
    for k, apex in enumerate(apexes):
        color = _PALETTE[k % len(_PALETTE)]
        segments = []
        for direction in _RAYS:
            end = _ray_exit(apex, direction, box)
            ax, ay = canvas.pt(*apex)
            ex, ey = canvas.pt(*end)
            segments.append(f"M {ax} {ay} L {ex} {ey}")
        body.append(
            f'    <path class="h{k + 1}" stroke="{color}" d="{" ".join(segments)}"/>'
        )
    body.append("  </g>")
    body.append('  <g font-family="monospace" font-size="11" fill="#333">')
    bound = int(max(abs(b) for b in box)) + 1
    f = arrangement_poly(v)
    for cell in normal_complex(f).maximal_cells:
        anchor = interior_point(cell.hrep, bound=bound)
        if anchor is None:
            continue
        x, y = canvas.pt(anchor[1] - anchor[0], anchor[2] - anchor[0])
        label = ",".join(str(e) for e in cell.dual_point)
        body.append(
            f'    <text x="{x}" y="{y}" text-anchor="middle">{label}</text>'
        )
    body.append("  </g>")
    body.append('  <g fill="#000">')
    for k, apex in enumerate(apexes):
        x, y = canvas.pt(*apex)
        body.append(f'    <circle class="h{k + 1}" cx="{x}" cy="{y}" r="3"/>')
    body.append("  </g>")
    return _svg_document(canvas.w, canvas.h, body)


def _triangle_xy(m: Exponent) -> tuple[Fraction, Fraction]:
    """Equilateral drawing coordinates for a lattice point of the dilated
    triangle (only the last two entries matter)."""
    return Fraction(m[1]) + Fraction(m[2], 2), Fraction(m[2])


def _hull_order(points: Sequence[tuple[Fraction, Fraction]]) -> list[int]:
    """Indices of the convex hull in counterclockwise order (monotone
    chain, exact)."""
    order = sorted(range(len(points)), key=lambda i: points[i])

    def cross(o, a, b):
        (ox, oy), (ax, ay), (bx, by) = points[o], points[a], points[b]
        return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)

    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def render_mixed(cells: Iterable[frozenset[Exponent]]) -> str:
    """Polygons of a subdivision of the dilated triangle, with every
    lattice point dotted and labeled by its exponent."""
    cells = sorted(cells, key=lambda c: sorted(c))
    if not cells:
        raise UnsupportedCaseError("nothing to draw")
    for cell in cells:
        for m in cell:
            if len(m) != 3:
                raise UnsupportedCaseError(
                    "mixed pictures are only drawn for 3-variable exponents"
                )
    ratio = sqrt(3) / 2
    all_points = sorted({m for cell in cells for m in cell})
    raw = {m: _triangle_xy(m) for m in all_points}
    flat = {m: (float(x), float(y) * ratio) for m, (x, y) in raw.items()}
    xs = [p[0] for p in flat.values()]
    ys = [p[1] for p in flat.values()]
    pad_x = max(0.6, (max(xs) - min(xs)) * float(MARGIN))
    pad_y = max(0.6, (max(ys) - min(ys)) * float(MARGIN))
    x0, y1 = min(xs) - pad_x, max(ys) + pad_y
    width = (max(xs) - min(xs) + 2 * pad_x) * SCALE
    height = (max(ys) - min(ys) + 2 * pad_y) * SCALE

    def place(m):
        fx, fy = flat[m]
        return _fmt((fx - x0) * SCALE), _fmt((y1 - fy) * SCALE)

    body = ['  <g fill="none" stroke-width="1.5">']
    for idx, cell in enumerate(cells):
        pts = sorted(cell)
        coords = [raw[m] for m in pts]
        hull = _hull_order(coords)
        path = " ".join(
            ("M" if j == 0 else "L") + " %s %s" % place(pts[i])
            for j, i in enumerate(hull)
        )
        color = _PALETTE[idx % len(_PALETTE)]
        body.append(f'    <path stroke="{color}" d="{path} Z"/>')
    body.append("  </g>")
    body.append('  <g font-family="monospace" font-size="10" fill="#333">')
    for m in all_points:
        x, y = place(m)
        label = ",".join(str(e) for e in m)
        body.append(f'    <circle cx="{x}" cy="{y}" r="2" fill="#000"/>')
        body.append(
            f'    <text x="{x}" y="{y}" dy="-4" text-anchor="middle">{label}</text>'
        )
    body.append("  </g>")
    return _svg_document(width, height, body)
