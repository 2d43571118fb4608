"""Composition-and-reduction addition for Mumford divisors of any weight.

This is the oracle: it must be boringly correct.  The composition uses
the classic three-way extended gcd (two chained xgcd calls) and the
reduction iterates u <- (f - v^2)/u.  Nothing here is optimized; its
authority comes from transparency.  It also serves as the fallback
engine for every input configuration the interpolation formulas do not
cover.
"""

from __future__ import annotations

from typing import Optional, TYPE_CHECKING

from . import poly
from .poly import Poly
from .curve import Curve
from .mumford import MumfordDivisor, identity

if TYPE_CHECKING:
    from .counters import OpCounters


def compose(
    curve: Curve, d1: MumfordDivisor, d2: MumfordDivisor, counters: Optional["OpCounters"] = None
) -> tuple[Poly, Poly]:
    """Semi-reduced sum (u, v): u | v^2 - f, deg u up to 4."""
    u1, v1 = d1.u, d1.v
    u2, v2 = d2.u, d2.v
    d_part, e1, e2 = poly.xgcd(u1, u2, counters)
    d, c1, c2 = poly.xgcd(d_part, v1 + v2, counters)
    s1 = poly.mul(c1, e1, counters)
    s2 = poly.mul(c1, e2, counters)
    s3 = c2

    u_big = poly.mul(u1, u2, counters)
    d_sq = poly.mul(d, d, counters)
    u, rem = poly.divrem(u_big, d_sq, counters)
    if not rem.is_zero:
        raise ArithmeticError("composition: d^2 does not divide u1*u2")

    num = (
        poly.mul(poly.mul(s1, u1, counters), v2, counters)
        + poly.mul(poly.mul(s2, u2, counters), v1, counters)
        + poly.mul(s3, poly.mul(v1, v2, counters) + curve.f, counters)
    )
    v_raw, rem = poly.divrem(num, d, counters)
    if not rem.is_zero:
        raise ArithmeticError("composition: d does not divide the v numerator")
    v = poly.divrem(v_raw, u, counters)[1]
    return u, v


def reduce(
    curve: Curve, u: Poly, v: Poly, counters: Optional["OpCounters"] = None
) -> MumfordDivisor:
    """Reduce a semi-reduced pair to weight <= 2 and normalize u monic."""
    f = curve.f
    while u.degree > 2:
        u_next, rem = poly.divrem(f - poly.mul(v, v, counters), u, counters)
        if not rem.is_zero:
            raise ArithmeticError("reduction: u does not divide f - v^2")
        u = u_next
        v = poly.divrem(-v, u, counters)[1]
    u = u.monic(counters)
    if u.degree == 0:
        return identity(curve.field)
    v = poly.divrem(v, u, counters)[1]
    return MumfordDivisor(u, v)


def add(
    curve: Curve, d1: MumfordDivisor, d2: MumfordDivisor, counters: Optional["OpCounters"] = None
) -> MumfordDivisor:
    """The group law by composition and reduction; the reference for every other path."""
    u, v = compose(curve, d1, d2, counters)
    return reduce(curve, u, v, counters)
