"""Base-field-only Jacobian addition via interpolation cubics.

The idea: a cubic L(x) meeting the curve y^2 = f(x) at the six places of
the two operands (with the right multiplicities) has L^2 - f divisible
by u1*u2; the quotient is the u of the sum, and the involution of
L mod u'' is its v.  Three constructions produce the 4x4 linear system
whose solution is L:

  case 1  disjoint supports: reduce L - v_i modulo each u_i;
  case 2  doubling: each place doubled, L tangent to the curve there;
  case 3  one shared place P: regroup as [2P - 2inf] + [mu + omega - 2inf]
          (tangent rows at P, chord rows through mu and omega).

Everything the generic constructions do not cover (weight-deficient
operands, Weierstrass tangents, vertical chords, involution-overlapping
supports, non-split doubling supports) falls back to the
composition-and-reduction engine, so the operation is total.

Row builders are written against a generic scalar so the figure renderer
can instantiate the very same constructions over floats.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .field import FieldElement
from . import cantor, linsolve, poly
from .poly import Poly
from .curve import AffinePoint, Curve
from .linsolve import System4
from .mumford import (
    MumfordDivisor,
    SharedPlaceDecomposition,
    identity,
    support_points,
    validate,
)

logger = logging.getLogger(__name__)


class AdditionCase(Enum):
    DISJOINT_GENERIC = "case1"
    DOUBLING = "case2"
    SHARED_PLACE = "case3"
    FALLBACK = "fallback"


@dataclass(frozen=True)
class Classification:
    case: AdditionCase
    reason: Optional[str] = None
    shared: Optional[SharedPlaceDecomposition] = None


class InterpolationCubic(NamedTuple):
    """L(x) = p3 x^3 + p2 x^2 + p1 x + p0; p3 = 0 is a legal degenerate."""

    p3: FieldElement
    p2: FieldElement
    p1: FieldElement
    p0: FieldElement

    def as_poly(self) -> Poly:
        return Poly(self.p0.field, [self.p0, self.p1, self.p2, self.p3])


@dataclass(frozen=True)
class AdditionPlan:
    """Everything the solver produced on the way to a sum.

    For explicit cases, ``operands`` holds the effective <u, v> forms the
    system encoded (originals for case 1, tangent/chord rewrites for
    cases 2 and 3) and ``cubic`` the solved interpolation polynomial.
    """

    classification: Classification
    cubic: Optional[InterpolationCubic] = None
    operands: Optional[tuple[tuple[Poly, Poly], tuple[Poly, Poly]]] = None


# ---------------------------------------------------------------------------
# Row constructions, generic over the scalar ring (field elements or floats).

def reduction_rows(a, b, c, d):
    """Rows forcing L - (cx + d) = 0 mod x^2 + ax + b, unknowns (p3, p2, p1, p0).

    Reducing px^3 + qx^2 + rx + s modulo x^2 + ax + b leaves
    x*(p(a^2-b) - qa + r) + (p*ab - qb + s); subtracting cx + d and
    zeroing both coefficients gives the two rows.
    """
    return [
        [a * a - b, -a, 1, 0, c],
        [a * b, -b, 0, 1, d],
    ]


def tangent_rows(x0, y0, slope):
    """Reduction rows for the doubled place at (x0, y0): u = (x - x0)^2,
    v the tangent line through it with the given slope."""
    x0_sq = x0 * x0
    return [
        [3 * x0_sq, 2 * x0, 1, 0, slope],
        [-2 * (x0_sq * x0), -x0_sq, 0, 1, y0 - slope * x0],
    ]


def chord_rows(mx, my, wx, wy, slope, intercept):
    """Reduction rows for u = (x - mx)(x - wx), v the chord through the points."""
    return [
        [mx * mx + wx * (mx + wx), mx + wx, 1, 0, slope],
        [-(mx * mx) * wx - mx * (wx * wx), -(mx * wx), 0, 1, intercept],
    ]


# ---------------------------------------------------------------------------
# System builders over the exact field.

def build_case1_system(d1: MumfordDivisor, d2: MumfordDivisor) -> System4:
    """Disjoint-support system from the Mumford coefficients alone."""
    if d1.weight != 2 or d2.weight != 2:
        raise ValueError("case-1 system needs two weight-2 divisors")
    a, b = d1.u[1], d1.u[0]
    rows = reduction_rows(a, b, d1.v[1], d1.v[0])
    aa, bb = d2.u[1], d2.u[0]
    rows += reduction_rows(aa, bb, d2.v[1], d2.v[0])
    field = d1.field
    return System4(field, [r[:4] for r in rows], [r[4] for r in rows])


def tangent_slope(
    curve: Curve, pt: AffinePoint, counters=None
) -> FieldElement:
    """Slope of the curve at a non-Weierstrass point: f'(x) / (2y)."""
    if pt.y.value == 0:
        raise ZeroDivisionError("tangent is vertical at a Weierstrass point")
    fp = curve.f_derivative(pt.x, counters)
    inv = (pt.y + pt.y).inverse()
    if counters is not None:
        counters.add_invs(1)
        counters.add_mults(1)
    return fp * inv


def build_case2_system(
    curve: Curve, mu: AffinePoint, omega: AffinePoint, counters=None
) -> System4:
    """Doubling system: L tangent to the curve at mu and at omega."""
    if mu == omega:
        raise ValueError("doubling system needs two distinct places")
    if mu.x == omega.x:
        raise ValueError("places above one x-coordinate: tangent pair degenerates")
    rows = []
    for pt in (mu, omega):
        lam = tangent_slope(curve, pt, counters)
        rows += tangent_rows(pt.x, pt.y, lam)
        if counters is not None:
            counters.add_mults(3)  # x^2, x^3, slope*x
    return System4(curve.field, [r[:4] for r in rows], [r[4] for r in rows])


def detect_shared_place(d1: MumfordDivisor, d2: MumfordDivisor, counters=None) -> Optional[Poly]:
    """gcd(u1, u2) when nontrivial: the common factor carrying shared support.

    For a degree-1 factor with distinct linear u-coefficients the root
    agrees with the closed form (b2 - b1)/(a1 - a2); that cross-check is
    asserted here because it is nearly free.
    """
    if d1.weight != 2 or d2.weight != 2:
        raise ValueError("shared-place detection expects weight-2 divisors")
    g = poly.gcd(d1.u, d2.u, counters)
    if g.degree == 0:
        return None
    if g.degree == 1:
        a, alpha = d1.u[1], d2.u[1]
        if a != alpha:
            assert -g[0] == (d2.u[0] - d1.u[0]) / (a - alpha), (
                "gcd root disagrees with the shared-root closed form"
            )
    return g


def build_case3_system(
    curve: Curve, dec: SharedPlaceDecomposition, counters=None
) -> System4:
    """Shared-place system: tangent rows at P, chord rows through mu and omega."""
    s, t = dec.place
    if t.value == 0:
        raise ZeroDivisionError("shared place is a Weierstrass point: tangent undefined")
    mx, my = dec.mu
    wx, wy = dec.omega
    if mx == wx:
        raise ZeroDivisionError("mu and omega share an x-coordinate: chord is vertical")
    lam = tangent_slope(curve, dec.place, counters)
    dx_inv = (mx - wx).inverse()
    slope = (my - wy) * dx_inv
    intercept = (mx * wy - wx * my) * dx_inv
    if counters is not None:
        counters.add_invs(1)
        counters.add_mults(3 + 4 + 7)  # tangent rows, chord slope/intercept, chord rows
    rows = tangent_rows(s, t, lam) + chord_rows(mx, my, wx, wy, slope, intercept)
    return System4(curve.field, [r[:4] for r in rows], [r[4] for r in rows])


def cubic_from_solution(solution: tuple[FieldElement, ...]) -> InterpolationCubic:
    return InterpolationCubic(*solution)


def compose_from_cubic(
    curve: Curve, cubic: InterpolationCubic, u1: Poly, u2: Poly, counters=None
) -> MumfordDivisor:
    """Finish the addition: u'' = (L^2 - f)/(u1 u2) made monic, v'' = -L mod u''.

    The negation is the hyperelliptic involution that moves the cubic's
    residual intersections into the sum class.  A vanishing leading
    coefficient of L simply drops the result to weight 1; a constant
    quotient would be the identity.  Inexact division means the system
    was solved incorrectly and is a hard error.
    """
    l_poly = cubic.as_poly()
    numerator = poly.mul(l_poly, l_poly, counters) - curve.f
    denominator = poly.mul(u1, u2, counters)
    q, rem = poly.divrem(numerator, denominator, counters)
    if not rem.is_zero:
        raise ArithmeticError("u1*u2 does not divide L^2 - f: interpolation is inconsistent")
    if q.is_zero or q.degree == 0:
        return identity(curve.field)
    u_new = q.monic(counters)
    v_new = poly.divrem(-l_poly, u_new, counters)[1]
    result = MumfordDivisor(u_new, v_new)
    assert validate(curve, result), "explicit sum violates the Mumford condition"
    return result


# ---------------------------------------------------------------------------
# Dispatch.

def plan_addition(
    curve: Curve, d1: MumfordDivisor, d2: MumfordDivisor, counters=None
) -> AdditionPlan:
    """Classify the pair and, for explicit cases, solve for the cubic.

    The returned plan carries the effective operand forms so callers can
    re-verify the interpolation identities L = v_i mod u_i.
    """
    field = curve.field

    def fallback(reason: str) -> AdditionPlan:
        return AdditionPlan(Classification(AdditionCase.FALLBACK, reason=reason))

    if d1.weight < 2 or d2.weight < 2:
        return fallback("weight-deficient operand")

    if d1 == d2:
        return _plan_doubling(curve, d1, counters, fallback)

    if d1.u == d2.u:
        # shared u with different v: involution pair or mixed overlap
        return fallback("identical u with differing v")

    g = detect_shared_place(d1, d2, counters)
    if g is None:
        system = build_case1_system(d1, d2)
        if counters is not None:
            counters.add_mults(4)  # a^2 and a*b per operand
        solution = linsolve.solve(system, counters)
        if solution is None:
            # never observed for coprime u's; equivalence of singularity and
            # shared support says it cannot happen, but stay total
            logger.warning(
                "case-1 system singular despite coprime supports: %s + %s", d1, d2
            )
            return fallback("singular generic system")
        cubic = cubic_from_solution(solution)
        return AdditionPlan(
            Classification(AdditionCase.DISJOINT_GENERIC),
            cubic=cubic,
            operands=((d1.u, d1.v), (d2.u, d2.v)),
        )

    # deg g == 2 would mean u1 == u2, handled above
    s = -g[0]
    t1, t2 = d1.v(s, counters), d2.v(s, counters)
    if t1 != t2:
        return fallback("shared x-coordinate with involuted places")
    if t1.value == 0:
        return fallback("shared place is a Weierstrass point")
    # remaining roots: sum of u's roots is -u[1]
    mx = -d1.u[1] - s
    wx = -d2.u[1] - s
    if mx == s or wx == s:
        return fallback("shared place repeated inside one operand")
    if mx == wx:
        return fallback("vertical or degenerate chord in the residual places")
    place = AffinePoint(s, t1)
    mu = AffinePoint(mx, d1.v(mx, counters))
    omega = AffinePoint(wx, d2.v(wx, counters))
    dec = SharedPlaceDecomposition(place, mu, omega)
    system = build_case3_system(curve, dec, counters)
    solution = linsolve.solve(system, counters)
    if solution is None:
        logger.warning("case-3 system singular for %s + %s", d1, d2)
        return fallback("singular shared-place system")
    cubic = cubic_from_solution(solution)
    u_tan = Poly.from_roots(field, s, s)
    v_tan = _line_through(field, place, tangent_slope(curve, place))
    u_chord = Poly.from_roots(field, mx, wx)
    v_chord = _chord_poly(field, mu, omega)
    return AdditionPlan(
        Classification(AdditionCase.SHARED_PLACE, shared=dec),
        cubic=cubic,
        operands=((u_tan, v_tan), (u_chord, v_chord)),
    )


def _plan_doubling(curve: Curve, d: MumfordDivisor, counters, fallback) -> AdditionPlan:
    pts = support_points(curve, d)
    if pts is None:
        return fallback("doubling a divisor whose u does not split")
    mu, omega = pts
    if mu == omega:
        return fallback("doubling a repeated place")
    if mu.is_weierstrass or omega.is_weierstrass:
        return fallback("doubling across a Weierstrass place")
    system = build_case2_system(curve, mu, omega, counters)
    solution = linsolve.solve(system, counters)
    if solution is None:
        logger.warning("case-2 system singular for %s", d)
        return fallback("singular doubling system")
    field = curve.field
    u1 = Poly.from_roots(field, mu.x, mu.x)
    u2 = Poly.from_roots(field, omega.x, omega.x)
    v1 = _line_through(field, mu, tangent_slope(curve, mu))
    v2 = _line_through(field, omega, tangent_slope(curve, omega))
    return AdditionPlan(
        Classification(AdditionCase.DOUBLING),
        cubic=cubic_from_solution(solution),
        operands=((u1, v1), (u2, v2)),
    )


def _line_through(field, pt: AffinePoint, slope: FieldElement) -> Poly:
    return Poly(field, [pt.y - slope * pt.x, slope])


def _chord_poly(field, p1: AffinePoint, p2: AffinePoint) -> Poly:
    slope = (p1.y - p2.y) / (p1.x - p2.x)
    return Poly(field, [p1.y - slope * p1.x, slope])


def classify(curve: Curve, d1: MumfordDivisor, d2: MumfordDivisor) -> Classification:
    """Which construction a pair takes (solving the system along the way)."""
    return plan_addition(curve, d1, d2).classification


def add_classified(
    curve: Curve, d1: MumfordDivisor, d2: MumfordDivisor, counters=None
) -> tuple[MumfordDivisor, Classification]:
    """Total group law plus the case it took."""
    plan = plan_addition(curve, d1, d2, counters)
    cls = plan.classification
    if cls.case is AdditionCase.FALLBACK:
        result = cantor.add(curve, d1, d2, counters)
    else:
        (u1, _), (u2, _) = plan.operands
        result = compose_from_cubic(curve, plan.cubic, u1, u2, counters)
    if counters is not None:
        counters.record_case(cls.case.value)
    return result, cls


def add(
    curve: Curve, d1: MumfordDivisor, d2: MumfordDivisor, counters=None
) -> MumfordDivisor:
    """Jacobian addition: explicit constructions with oracle fallback."""
    return add_classified(curve, d1, d2, counters)[0]


def double(curve: Curve, d: MumfordDivisor, counters=None) -> MumfordDivisor:
    """2[D] through the tangent construction when applicable."""
    return add_classified(curve, d, d, counters)[0]
