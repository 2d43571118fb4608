"""The hyperelliptic curve y^2 = f(x) with f a monic squarefree quintic.

The odd-degree model has a single place at infinity, which is never
stored: every reduced divisor implicitly subtracts a multiple of it.
"""

from __future__ import annotations

import random
from typing import NamedTuple, Optional

from .field import FieldElement, PrimeField
from . import poly
from .poly import Poly

ENUMERATION_BOUND = 1000

CURVE_DEGREE = 5


class AffinePoint(NamedTuple):
    x: FieldElement
    y: FieldElement

    def involute(self) -> "AffinePoint":
        """Hyperelliptic involution (x, y) -> (x, -y)."""
        return AffinePoint(self.x, -self.y)

    @property
    def is_weierstrass(self) -> bool:
        return self.y.value == 0

    def __repr__(self) -> str:
        return f"({self.x.value},{self.y.value})"


class Curve:
    """Validated curve parameters: deg f = 5, f monic and squarefree."""

    __slots__ = ("field", "f", "f_derivative")

    def __init__(self, f: Poly):
        if f.degree != CURVE_DEGREE:
            raise ValueError(f"f must have degree exactly {CURVE_DEGREE}, got {f.degree}")
        if not f.is_monic:
            raise ValueError("f must be monic (leading coefficient 1)")
        df = f.derivative()
        if poly.gcd(f, df).degree != 0:
            raise ValueError("f must be squarefree: gcd(f, f') != 1")
        self.field = f.field
        self.f = f
        self.f_derivative = df

    def is_on_curve(self, x: FieldElement | int, y: FieldElement | int) -> bool:
        x, y = self.field(x), self.field(y)
        return y * y == self.f(x)

    def point(self, x: FieldElement | int, y: FieldElement | int) -> AffinePoint:
        """Checked point construction."""
        x, y = self.field(x), self.field(y)
        if not self.is_on_curve(x, y):
            raise ValueError(f"({x},{y}) is not on y^2 = {self.f}")
        return AffinePoint(x, y)

    def lift_x(self, x0: FieldElement | int) -> Optional[tuple[AffinePoint, ...]]:
        """The points above x0: two for a residue, one for f(x0) = 0, None otherwise."""
        x0 = self.field(x0)
        roots = self.f(x0).sqrt()
        if roots is None:
            return None
        return tuple(AffinePoint(x0, y) for y in roots)

    def enumerate_points(self, bound: int = ENUMERATION_BOUND) -> list[AffinePoint]:
        """All affine points, ordered by (x, y).  Small p only."""
        p = self.field.p
        if p >= bound:
            raise ValueError(f"enumeration needs p < {bound}, got p = {p}")
        points = []
        for xv in range(p):
            lifted = self.lift_x(xv)
            if lifted:
                points.extend(sorted(lifted, key=lambda pt: pt.y.value))
        return points

    def random_point(self, rng: random.Random) -> AffinePoint:
        """Uniformly sample an x with points above it, then pick a y."""
        while True:
            lifted = self.lift_x(self.field.random_element(rng))
            if lifted:
                return rng.choice(lifted)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Curve) and other.f == self.f

    def __hash__(self) -> int:
        return hash(("Curve", self.f))

    def __repr__(self) -> str:
        return f"Curve(p={self.field.p}, f={poly.format_coeffs(self.f)})"


def validate_curve(f: Poly) -> Curve:
    """Accept exactly the monic degree-5 squarefree polynomials."""
    return Curve(f)


def random_curve(field: PrimeField, rng: random.Random) -> Curve:
    """Seeded random monic squarefree quintic over the field."""
    while True:
        coeffs = [rng.randrange(field.p) for _ in range(CURVE_DEGREE)] + [1]
        try:
            return Curve(Poly(field, coeffs))
        except ValueError:
            continue


def has_spread_points(curve: Curve, bound: int = ENUMERATION_BOUND) -> bool:
    """True when the affine points are spread enough for every addition case.

    Four distinct x-coordinates admit disjoint weight-2 pairs and
    shared-place triples; two distinct x-coordinates carrying nonzero-y
    points admit tangent doublings.  Small p only.
    """
    xs: set[int] = set()
    nonzero_y_xs: set[int] = set()
    for pt in curve.enumerate_points(bound):
        xs.add(pt.x.value)
        if pt.y.value != 0:
            nonzero_y_xs.add(pt.x.value)
    return len(xs) >= 4 and len(nonzero_y_xs) >= 2


def random_covering_curve(field: PrimeField, rng: random.Random) -> Curve:
    """Seeded random curve that passes the point-spread check."""
    while True:
        c = random_curve(field, rng)
        if has_spread_points(c):
            return c


def load_curve_file(path: str) -> Curve:
    """Read a curve from a file with ``p=<decimal>`` and ``f=[c0,...,c5]`` lines."""
    p_val = None
    f_text = None
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("p="):
                p_val = int(line[2:].strip(), 10)
            elif line.startswith("f="):
                f_text = line[2:].strip()
    if p_val is None or f_text is None:
        raise ValueError(f"curve file {path!r} needs both 'p=' and 'f=' lines")
    field = PrimeField(p_val)
    return validate_curve(poly.parse_coeffs(field, f_text))
