"""Dense univariate polynomials over a prime field.

Coefficients are stored ascending (constant term first) as raw canonical
residues, with no trailing zeros; the zero polynomial is the empty tuple.
Everything in this artifact has degree <= 6, so the representation is a
plain tuple and every operation restores canonical form.

The module-level mul/divrem/gcd/xgcd variants accept an optional
OpCounters accumulator and tally the coefficient multiplications and
inversions they actually perform; the operator overloads skip counting.
"""

from __future__ import annotations

from typing import Iterable, Optional, TYPE_CHECKING

from .field import FieldElement, PrimeField

if TYPE_CHECKING:
    from .counters import OpCounters

NEG_INFINITY = float("-inf")


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Polynomial over F_p, coefficients ascending."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[int | FieldElement] = ()):
        p = field.p
        cleaned = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field.p != p:
                    raise ValueError(f"coefficient from F_{c.field.p} in F_{p} polynomial")
                cleaned.append(c.value)
            else:
                cleaned.append(c % p)
        self.field = field
        self.coeffs = _trim(cleaned)

    @classmethod
    def _raw(cls, field: PrimeField, coeffs: tuple[int, ...]) -> Poly:
        # internal fast path: coeffs already canonical
        poly = object.__new__(cls)
        poly.field = field
        poly.coeffs = coeffs
        return poly

    @classmethod
    def zero(cls, field: PrimeField) -> Poly:
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: PrimeField) -> Poly:
        return cls._raw(field, (1,))

    @classmethod
    def constant(cls, field: PrimeField, c: int | FieldElement) -> Poly:
        return cls(field, [c])

    @classmethod
    def x(cls, field: PrimeField) -> Poly:
        return cls._raw(field, (0, 1))

    @classmethod
    def from_roots(cls, field: PrimeField, *roots: int | FieldElement) -> Poly:
        """Monic polynomial with the given roots (with multiplicity)."""
        out = cls.one(field)
        for r in roots:
            rv = r.value if isinstance(r, FieldElement) else r % field.p
            out = out * cls._raw(field, ((-rv) % field.p, 1))
        return out

    @property
    def degree(self) -> int | float:
        """Degree; -infinity for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> FieldElement:
        v = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(v, self.field)

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.coeffs[-1], self.field)

    def _check_field(self, other: Poly) -> None:
        if other.field.p != self.field.p:
            raise ValueError(
                f"cannot combine polynomials over F_{self.field.p} and F_{other.field.p}"
            )

    def __add__(self, other: Poly) -> Poly:
        self._check_field(other)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Poly._raw(self.field, _trim(out))

    def __sub__(self, other: Poly) -> Poly:
        self._check_field(other)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = (out[i] - c) % p
        return Poly._raw(self.field, _trim(out))

    def __neg__(self) -> Poly:
        p = self.field.p
        return Poly._raw(self.field, tuple((-c) % p for c in self.coeffs))

    def __mul__(self, other: Poly | FieldElement | int) -> Poly:
        if isinstance(other, Poly):
            self._check_field(other)
            return mul(self, other)
        if isinstance(other, (FieldElement, int)):
            s = self.field(other).value
            p = self.field.p
            return Poly._raw(self.field, _trim([c * s % p for c in self.coeffs]))
        return NotImplemented

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return divrem(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return divrem(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divrem(self, other)[1]

    def __call__(self, x: FieldElement | int, counters: Optional["OpCounters"] = None) -> FieldElement:
        """Horner evaluation."""
        xv = self.field(x).value
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * xv + c) % p
        if counters is not None and len(self.coeffs) > 1:
            counters.add_mults(len(self.coeffs) - 1)
        return FieldElement(acc, self.field)

    def derivative(self) -> Poly:
        p = self.field.p
        return Poly._raw(
            self.field, _trim([i * c % p for i, c in enumerate(self.coeffs)][1:])
        )

    def monic(self, counters: Optional["OpCounters"] = None) -> Poly:
        if not self.coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        p = self.field.p
        inv = pow(lead, -1, p)
        if counters is not None:
            counters.add_invs(1)
            counters.add_mults(len(self.coeffs) - 1)
        out = [c * inv % p for c in self.coeffs[:-1]]
        out.append(1)
        return Poly._raw(self.field, tuple(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field.p == other.field.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly(F_{self.field.p}, {format_coeffs(self)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        return " + ".join(terms)


def mul(a: Poly, b: Poly, counters: Optional["OpCounters"] = None) -> Poly:
    """Schoolbook product; counts one mult per coefficient pair."""
    a._check_field(b)
    ca, cb = a.coeffs, b.coeffs
    if not ca or not cb:
        return Poly.zero(a.field)
    p = a.field.p
    out = [0] * (len(ca) + len(cb) - 1)
    for i, x in enumerate(ca):
        if x == 0:
            continue
        for j, y in enumerate(cb):
            out[i + j] += x * y
    if counters is not None:
        counters.add_mults(len(ca) * len(cb))
    return Poly._raw(a.field, _trim([c % p for c in out]))


def divrem(a: Poly, b: Poly, counters: Optional["OpCounters"] = None) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg r < deg b; exact field division."""
    a._check_field(b)
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a.coeffs) < len(b.coeffs):
        return Poly.zero(a.field), a
    p = a.field.p
    rem = list(a.coeffs)
    div = b.coeffs
    dlen = len(div)
    monic = div[-1] == 1
    if monic:
        inv_lead = 1
    else:
        inv_lead = pow(div[-1], -1, p)
        if counters is not None:
            counters.add_invs(1)
    qlen = len(rem) - dlen + 1
    quot = [0] * qlen
    mults = 0
    for k in range(qlen - 1, -1, -1):
        coef = rem[k + dlen - 1] % p
        if coef == 0:
            continue
        if not monic:
            coef = coef * inv_lead % p
            mults += 1
        quot[k] = coef
        for j in range(dlen - 1):
            rem[k + j] -= coef * div[j]
        mults += dlen - 1
    if counters is not None:
        counters.add_mults(mults)
    return (
        Poly._raw(a.field, _trim(quot)),
        Poly._raw(a.field, _trim([c % p for c in rem[: dlen - 1]])),
    )


def gcd(a: Poly, b: Poly, counters: Optional["OpCounters"] = None) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, divrem(a, b, counters)[1]
    return a.monic(counters)


def xgcd(a: Poly, b: Poly, counters: Optional["OpCounters"] = None) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: returns monic g and s, t with s*a + t*b = g."""
    if a.is_zero and b.is_zero:
        raise ValueError("xgcd(0, 0) is undefined")
    field = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(field), Poly.zero(field)
    t0, t1 = Poly.zero(field), Poly.one(field)
    while not r1.is_zero:
        q, r = divrem(r0, r1, counters)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - mul(q, s1, counters)
        t0, t1 = t1, t0 - mul(q, t1, counters)
    lead = r0.coeffs[-1]
    if lead != 1:
        inv = FieldElement(pow(lead, -1, field.p), field)
        if counters is not None:
            counters.add_invs(1)
            counters.add_mults(len(r0.coeffs) - 1 + len(s0.coeffs) + len(t0.coeffs))
        r0, s0, t0 = r0 * inv, s0 * inv, t0 * inv
    return r0, s0, t0


def format_coeffs(a: Poly) -> str:
    """Bracketed ascending coefficient list, e.g. ``[1,0,0,0,0,1]`` for x^5 + 1."""
    return "[" + ",".join(str(c) for c in a.coeffs) + "]"


def parse_coeffs(field: PrimeField, text: str) -> Poly:
    """Parse the bracketed ascending coefficient format."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected a bracketed coefficient list, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Poly.zero(field)
    try:
        return Poly(field, [int(tok.strip(), 10) for tok in body.split(",")])
    except ValueError as exc:
        raise ValueError(f"bad coefficient list: {text!r}") from exc
