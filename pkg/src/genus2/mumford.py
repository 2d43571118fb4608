"""Mumford representation <u, v> of reduced divisor classes.

A reduced divisor class is stored as a pair of polynomials with u monic,
deg u <= 2, deg v < deg u and u | v^2 - f.  Weight-0 (<1, 0>, the
identity) and weight-1 classes are first-class values: the explicit
formulas can produce them, and closure demands them.  Divisors whose u
is irreducible over F_p (conjugate point pairs) are equally valid; no
operation here ever needs to split u.
"""

from __future__ import annotations

import json
from typing import NamedTuple, Optional

from .field import FieldElement, PrimeField
from . import poly
from .poly import Poly
from .curve import AffinePoint, Curve


class MumfordDivisor:
    """Immutable <u, v> pair; class equality is structural equality."""

    __slots__ = ("u", "v")

    def __init__(self, u: Poly, v: Poly):
        if u.field.p != v.field.p:
            raise ValueError("u and v must share one field")
        if u.is_zero or not u.is_monic:
            raise ValueError("u must be monic and nonzero")
        if u.degree > 2:
            raise ValueError(f"u must have degree <= 2, got {u.degree}")
        if u.degree == 0:
            if not v.is_zero:
                raise ValueError("the identity class <1, 0> requires v = 0")
        elif not v.is_zero and v.degree >= u.degree:
            raise ValueError("deg v must be < deg u")
        self.u = u
        self.v = v

    @property
    def field(self) -> PrimeField:
        return self.u.field

    @property
    def weight(self) -> int:
        return len(self.u.coeffs) - 1

    @property
    def is_identity(self) -> bool:
        return self.weight == 0

    def negate(self) -> "MumfordDivisor":
        """Group inverse: apply the hyperelliptic involution, <u, -v mod u>."""
        return MumfordDivisor(self.u, (-self.v) % self.u)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __repr__(self) -> str:
        return format_divisor(self)


class SharedPlaceDecomposition(NamedTuple):
    """Operands P + mu - 2*inf and P + omega - 2*inf regrouped around the shared P."""

    place: AffinePoint
    mu: AffinePoint
    omega: AffinePoint


def identity(field: PrimeField) -> MumfordDivisor:
    return MumfordDivisor(Poly.one(field), Poly.zero(field))


def from_points(curve: Curve, p1: AffinePoint, p2: AffinePoint) -> MumfordDivisor:
    """The weight-2 divisor P1 + P2 - 2*inf for a non-degenerate point pair.

    Rejects P2 = involution(P1) (that class is the identity) and P1 = P2
    (the tangent representation belongs to the doubling path).
    """
    for pt in (p1, p2):
        if not curve.is_on_curve(pt.x, pt.y):
            raise ValueError(f"{pt} is not on the curve")
    if p1 == p2:
        raise ValueError("P1 = P2: a doubled place needs the tangent construction")
    if p1 == p2.involute():
        raise ValueError("P2 is the involution of P1: the class is not weight 2")
    field = curve.field
    u = Poly.from_roots(field, p1.x, p2.x)
    # p1.x != p2.x here: equal x with distinct points is exactly the involution pair
    slope = (p1.y - p2.y) / (p1.x - p2.x)
    v = Poly(field, [p1.y - slope * p1.x, slope])
    return MumfordDivisor(u, v)


def from_single(curve: Curve, pt: AffinePoint) -> MumfordDivisor:
    """The weight-1 divisor P - inf."""
    if not curve.is_on_curve(pt.x, pt.y):
        raise ValueError(f"{pt} is not on the curve")
    return MumfordDivisor(
        Poly(curve.field, [-pt.x, 1]), Poly.constant(curve.field, pt.y)
    )


def validate(curve: Curve, d: MumfordDivisor) -> bool:
    """Full invariant check, including the Mumford condition u | v^2 - f."""
    u, v = d.u, d.v
    if u.field.p != curve.field.p:
        return False
    if u.is_zero or not u.is_monic or u.degree > 2:
        return False
    if u.degree == 0:
        return u.coeffs == (1,) and v.is_zero
    if not v.is_zero and v.degree >= u.degree:
        return False
    return _divides_v2_minus_f(curve, u, v)


def _divides_v2_minus_f(curve: Curve, u: Poly, v: Poly) -> bool:
    # synthetic reduction of v^2 - f modulo monic u of degree 1 or 2;
    # kept on raw residues because sweeps call this for every addition
    p = curve.field.p
    vc = v.coeffs
    if len(vc) == 2:
        v0, v1 = vc
        diff = [v0 * v0, 2 * v0 * v1, v1 * v1, 0, 0, 0]
    elif len(vc) == 1:
        diff = [vc[0] * vc[0], 0, 0, 0, 0, 0]
    else:
        diff = [0, 0, 0, 0, 0, 0]
    for i, c in enumerate(curve.f.coeffs):
        diff[i] -= c
    if len(u.coeffs) == 2:
        r = 0
        x0 = (-u.coeffs[0]) % p  # root of the linear u
        for c in reversed(diff):
            r = (r * x0 + c) % p
        return r == 0
    a, b = u.coeffs[1], u.coeffs[0]
    hi = lo = 0
    for c in reversed(diff):
        hi, lo = (lo - a * hi) % p, (c - b * hi) % p
    return hi == 0 and lo == 0


def support_points(curve: Curve, d: MumfordDivisor) -> Optional[list[AffinePoint]]:
    """Support as points with multiplicity, ordered by (x, y).

    None when u is irreducible over the base field (the support lives in
    the quadratic extension); the empty list for the identity.
    """
    field = curve.field
    if d.is_identity:
        return []
    if d.weight == 1:
        x0 = -d.u[0]
        return [AffinePoint(x0, d.v(x0))]
    a, b = d.u[1], d.u[0]
    disc = a * a - 4 * b
    roots = disc.sqrt()
    if roots is None:
        return None
    inv2 = FieldElement(pow(2, -1, field.p), field)
    if len(roots) == 1:
        x0 = -a * inv2
        pt = AffinePoint(x0, d.v(x0))
        return [pt, pt]
    pts = [AffinePoint((r - a) * inv2, d.v((r - a) * inv2)) for r in roots]
    pts.sort(key=lambda pt: (pt.x.value, pt.y.value))
    return pts


def format_divisor(d: MumfordDivisor) -> str:
    """Text form ``u=[...] v=[...]`` with ascending coefficients."""
    return f"u={poly.format_coeffs(d.u)} v={poly.format_coeffs(d.v)}"


def parse_divisor(field: PrimeField, text: str) -> MumfordDivisor:
    """Parse ``u=[...];v=[...]`` (semicolon or whitespace separated)."""
    parts = text.replace(";", " ").split()
    u_text = v_text = None
    for part in parts:
        if part.startswith("u="):
            u_text = part[2:]
        elif part.startswith("v="):
            v_text = part[2:]
    if u_text is None or v_text is None:
        raise ValueError(f"divisor must look like 'u=[...];v=[...]', got {text!r}")
    return MumfordDivisor(poly.parse_coeffs(field, u_text), poly.parse_coeffs(field, v_text))


def to_json_dict(d: MumfordDivisor) -> dict:
    return {"u": list(d.u.coeffs), "v": list(d.v.coeffs)}


def from_json_dict(field: PrimeField, obj: dict) -> MumfordDivisor:
    return MumfordDivisor(Poly(field, obj["u"]), Poly(field, obj["v"]))


def parse_divisor_json(field: PrimeField, text: str) -> MumfordDivisor:
    return from_json_dict(field, json.loads(text))
