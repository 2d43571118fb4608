"""SVG sketches of the three cubic-interpolation constructions over the reals.

This is the only floating-point code in the package.  It reuses the very
same row builders as the exact path (they are generic over the scalar),
solves the 4x4 system with numpy, and draws the two curve branches, the
interpolating cubic, and the six construction places for a hardcoded
real quintic with three real components.

Inputs are curated fixtures: coordinates chosen so the two residual
intersections of the cubic with the curve are real and inside the frame.
Arbitrary user geometry is deliberately not accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .explicit import chord_rows, reduction_rows, tangent_rows

# y^2 = x(x^2 - 1)(x^2 - 4): two ovals and one unbounded branch
REAL_QUINTIC = (0.0, 4.0, 0.0, -5.0, 0.0, 1.0)

# (x, sign of y) per construction point; y is recomputed from the curve
CASE1_FIXTURE = {
    "d1": ((-1.7744, -1), (0.4712, -1)),
    "d2": ((-1.4168, +1), (0.1248, +1)),
}
CASE2_FIXTURE = {"mu": (-1.7729, -1), "omega": (0.1591, +1)}
CASE3_FIXTURE = {"shared": (-1.2106, -1), "mu": (0.8995, -1), "omega": (2.2897, +1)}

X_RANGE = (-2.6, 3.45)


def _feval(x: float) -> float:
    acc = 0.0
    for c in reversed(REAL_QUINTIC):
        acc = acc * x + c
    return acc


def _fprime(x: float) -> float:
    acc = 0.0
    for i in range(len(REAL_QUINTIC) - 1, 0, -1):
        acc = acc * x + i * REAL_QUINTIC[i]
    return acc


def _curve_point(x: float, sign: int) -> tuple[float, float]:
    fx = _feval(x)
    if fx < 0:
        raise ValueError(f"x = {x} is off the real locus")
    return (x, sign * math.sqrt(fx))


def _cubic_eval(cubic: tuple[float, float, float, float], x: float) -> float:
    p3, p2, p1, p0 = cubic
    return ((p3 * x + p2) * x + p1) * x + p0


def _solve_rows(rows) -> tuple[float, float, float, float]:
    a = np.array([r[:4] for r in rows], dtype=float)
    b = np.array([r[4] for r in rows], dtype=float)
    p3, p2, p1, p0 = np.linalg.solve(a, b)
    return (float(p3), float(p2), float(p1), float(p0))


def _residual_roots(
    cubic: tuple[float, float, float, float], known_roots: list[float]
) -> tuple[float, float]:
    """Roots of (L^2 - f) / prod (x - r): deflate the sextic, solve the quadratic."""
    p3, p2, p1, p0 = cubic
    lsq = np.polynomial.polynomial.polymul([p0, p1, p2, p3], [p0, p1, p2, p3])
    diff = np.zeros(7)
    diff[: len(lsq)] += lsq
    diff[:6] -= np.array(REAL_QUINTIC)
    coeffs = list(diff)
    for r in known_roots:
        desc = coeffs[::-1]
        out = [desc[0]]
        for c in desc[1:]:
            out.append(c + out[-1] * r)
        rem = out.pop()
        if abs(rem) > 1e-6:
            raise ArithmeticError(f"deflation by x - {r} left remainder {rem}")
        coeffs = out[::-1]
    a2, a1, a0 = coeffs[2], coeffs[1], coeffs[0]
    disc = a1 * a1 - 4 * a2 * a0
    if disc <= 0:
        raise ArithmeticError("residual intersections are not real: fixture is broken")
    lo = (-a1 - math.sqrt(disc)) / (2 * a2)
    hi = (-a1 + math.sqrt(disc)) / (2 * a2)
    return (min(lo, hi), max(lo, hi))


@dataclass(frozen=True)
class FigureData:
    """Geometry backing one sketch; produced before any drawing happens."""

    case: int
    cubic: tuple[float, float, float, float]
    construction_points: tuple[tuple[float, float], ...]  # six, with multiplicity
    tangency_points: tuple[tuple[float, float], ...]
    input_groups: tuple[tuple[tuple[float, float], ...], ...]  # per-divisor, for styling
    new_points: tuple[tuple[float, float], ...]
    result_points: tuple[tuple[float, float], ...]

    def max_vertical_residual(self) -> float:
        return max(
            abs(_cubic_eval(self.cubic, x) - y) for x, y in self.construction_points
        )

    def max_slope_residual(self) -> float:
        p3, p2, p1, _ = self.cubic
        worst = 0.0
        for x, y in self.tangency_points:
            cubic_slope = (3 * p3 * x + 2 * p2) * x + p1
            curve_slope = _fprime(x) / (2 * y)
            worst = max(worst, abs(cubic_slope - curve_slope))
        return worst


def _new_and_result(cubic, known_roots):
    new_pts = []
    for x in _residual_roots(cubic, known_roots):
        lx = _cubic_eval(cubic, x)
        y = math.copysign(math.sqrt(max(_feval(x), 0.0)), lx)
        new_pts.append((x, y))
    result = tuple((x, -y) for x, y in new_pts)
    return tuple(new_pts), result


def render_case(case: int) -> FigureData:
    """Solve the construction for one of the three curated sketches."""
    if case == 1:
        d1 = tuple(_curve_point(x, s) for x, s in CASE1_FIXTURE["d1"])
        d2 = tuple(_curve_point(x, s) for x, s in CASE1_FIXTURE["d2"])
        rows = []
        for (ax, ay), (bx, by) in (d1, d2):
            slope = (ay - by) / (ax - bx)
            intercept = ay - slope * ax
            rows += reduction_rows(-(ax + bx), ax * bx, slope, intercept)
        cubic = _solve_rows(rows)
        known = [d1[0][0], d1[1][0], d2[0][0], d2[1][0]]
        new_pts, result = _new_and_result(cubic, known)
        return FigureData(
            case=1,
            cubic=cubic,
            construction_points=d1 + d2 + new_pts,
            tangency_points=(),
            input_groups=(d1, d2),
            new_points=new_pts,
            result_points=result,
        )
    if case == 2:
        mu = _curve_point(*CASE2_FIXTURE["mu"])
        omega = _curve_point(*CASE2_FIXTURE["omega"])
        rows = []
        for x, y in (mu, omega):
            rows += tangent_rows(x, y, _fprime(x) / (2 * y))
        cubic = _solve_rows(rows)
        new_pts, result = _new_and_result(cubic, [mu[0], mu[0], omega[0], omega[0]])
        return FigureData(
            case=2,
            cubic=cubic,
            construction_points=(mu, mu, omega, omega) + new_pts,
            tangency_points=(mu, omega),
            input_groups=((mu, omega),),
            new_points=new_pts,
            result_points=result,
        )
    if case == 3:
        shared = _curve_point(*CASE3_FIXTURE["shared"])
        mu = _curve_point(*CASE3_FIXTURE["mu"])
        omega = _curve_point(*CASE3_FIXTURE["omega"])
        sx, sy = shared
        (mx, my), (wx, wy) = mu, omega
        slope = (my - wy) / (mx - wx)
        intercept = (mx * wy - wx * my) / (mx - wx)
        rows = tangent_rows(sx, sy, _fprime(sx) / (2 * sy)) + chord_rows(
            mx, my, wx, wy, slope, intercept
        )
        cubic = _solve_rows(rows)
        new_pts, result = _new_and_result(cubic, [sx, sx, mx, wx])
        return FigureData(
            case=3,
            cubic=cubic,
            construction_points=(shared, shared, mu, omega) + new_pts,
            tangency_points=(shared,),
            input_groups=((shared,), (mu, omega)),
            new_points=new_pts,
            result_points=result,
        )
    raise ValueError(f"case must be 1, 2 or 3, got {case}")


# ---------------------------------------------------------------------------
# Drawing.

_WIDTH, _HEIGHT, _MARGIN = 840, 620, 45
_GROUP_COLORS = ("#d62728", "#2ca02c")
_CUBIC_COLOR = "#1f6fb5"
_RESULT_COLOR = "#9467bd"

_CASE_TITLES = {
    1: "disjoint supports: cubic through four places",
    2: "doubling: cubic tangent at two places",
    3: "shared place: tangent at P, chord through the rest",
}


def _branch_runs(xs: np.ndarray) -> list[np.ndarray]:
    mask = np.array([_feval(float(x)) >= 0 for x in xs])
    runs, start = [], None
    for i, m in enumerate(mask):
        if m and start is None:
            start = i
        elif not m and start is not None:
            runs.append(xs[start:i])
            start = None
    if start is not None:
        runs.append(xs[start:])
    return [r for r in runs if len(r) >= 2]


def figure_svg(data: FigureData) -> str:
    """Render the construction as a standalone SVG 1.1 document."""
    y_bound = max(
        4.0, max(abs(y) for _, y in data.construction_points + data.result_points) + 1.5
    )
    x_lo, x_hi = X_RANGE

    def sx(x: float) -> float:
        return _MARGIN + (x - x_lo) / (x_hi - x_lo) * (_WIDTH - 2 * _MARGIN)

    def sy(y: float) -> float:
        return _HEIGHT - _MARGIN - (y + y_bound) / (2 * y_bound) * (_HEIGHT - 2 * _MARGIN)

    def polyline(points, color, width, dash=None, opacity=1.0):
        attrs = f'fill="none" stroke="{color}" stroke-width="{width}" opacity="{opacity}"'
        if dash:
            attrs += f' stroke-dasharray="{dash}"'
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in points)
        return f'<polyline {attrs} points="{coords}"/>'

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH}" height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH / 2:.0f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">case {data.case} &#8212; '
        f"{_CASE_TITLES[data.case]}</text>",
    ]
    # axes
    parts.append(polyline([(x_lo, 0), (x_hi, 0)], "#bbbbbb", 1))
    if x_lo < 0 < x_hi:
        parts.append(polyline([(0, -y_bound), (0, y_bound)], "#bbbbbb", 1))

    # curve branches, clipped vertically
    xs = np.linspace(x_lo, x_hi, 1200)
    for run in _branch_runs(xs):
        for sign in (1, -1):
            pts = []
            for x in run:
                y = sign * math.sqrt(max(_feval(float(x)), 0.0))
                if abs(y) <= y_bound:
                    pts.append((float(x), y))
                elif pts:
                    parts.append(polyline(pts, "#444444", 1.8))
                    pts = []
            if len(pts) >= 2:
                parts.append(polyline(pts, "#444444", 1.8))

    # interpolating cubic
    pts = []
    for x in xs:
        y = _cubic_eval(data.cubic, float(x))
        if abs(y) <= y_bound:
            pts.append((float(x), y))
        elif pts:
            parts.append(polyline(pts, _CUBIC_COLOR, 2.2))
            pts = []
    if len(pts) >= 2:
        parts.append(polyline(pts, _CUBIC_COLOR, 2.2))

    def circle(x, y, color, filled=True, r=5):
        fill = color if filled else "white"
        return (
            f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="{r}" '
            f'fill="{fill}" stroke="{color}" stroke-width="1.8"/>'
        )

    def label(x, y, text, color, dx=9, dy=-8):
        return (
            f'<text x="{sx(x) + dx:.2f}" y="{sy(y) + dy:.2f}" fill="{color}" '
            f'font-family="sans-serif" font-size="13">{text}</text>'
        )

    # involution segments from the cubic's residual intersections to the sum
    for (x, y), (_, ry) in zip(data.new_points, data.result_points):
        parts.append(polyline([(x, y), (x, ry)], _RESULT_COLOR, 1.2, dash="5,4"))

    names = iter(("P1", "P2", "Q1", "Q2"))
    for group, color in zip(data.input_groups, _GROUP_COLORS):
        for x, y in group:
            parts.append(circle(x, y, color))
            parts.append(label(x, y, next(names), color))
    for i, (x, y) in enumerate(data.new_points, 1):
        parts.append(circle(x, y, _CUBIC_COLOR, filled=False))
        parts.append(label(x, y, f"S{i}'", _CUBIC_COLOR))
    for i, (x, y) in enumerate(data.result_points, 1):
        parts.append(circle(x, y, _RESULT_COLOR))
        parts.append(label(x, y, f"S{i}", _RESULT_COLOR))

    parts.append("</svg>")
    return "\n".join(parts)


def write_figure(case: int, path: str) -> FigureData:
    """Render one case and write the SVG; returns the geometry for inspection."""
    data = render_case(case)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(figure_svg(data))
    return data
