"""Exact arithmetic in the prime field F_p for odd primes p >= 5.

Elements are canonical residues in [0, p).  All operations are exact
integer arithmetic; Python's bignums make overflow impossible, so the
same code serves p = 7 and 128-bit moduli alike.
"""

from __future__ import annotations

import random

MIN_MODULUS = 5

# Strong-pseudoprime witnesses: deterministic for n < 3.3 * 10^24,
# which covers every modulus below 2^64 and then some.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_PROBABILISTIC_ROUNDS = 40


def _miller_rabin_round(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 2^64 (fixed witness set); beyond that, 40 rounds
    with bases drawn from a PRNG seeded by n, so the verdict is stable
    across runs.
    """
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        witnesses = _MR_WITNESSES
    else:
        rng = random.Random(n)
        witnesses = tuple(rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS))
    return all(_miller_rabin_round(n, a, d, s) for a in witnesses)


class PrimeField:
    """The prime field F_p, p an odd prime >= 5.

    Acts as an element factory: ``F = PrimeField(7); F(10) == F(3)``.
    Two PrimeField instances with the same modulus are interchangeable.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int):
            raise TypeError(f"modulus must be an integer, got {type(p).__name__}")
        if p < MIN_MODULUS or p % 2 == 0 or not is_probable_prime(p):
            raise ValueError(f"modulus must be an odd prime >= {MIN_MODULUS}, got {p}")
        self.p = p

    def __call__(self, value: int | FieldElement) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field.p != self.p:
                raise ValueError(f"element of F_{value.field.p} used in F_{self.p}")
            return value
        return FieldElement(value, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def random_element(self, rng: random.Random) -> FieldElement:
        return FieldElement(rng.randrange(self.p), self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class FieldElement:
    """A canonical residue modulo the field's prime.

    Immutable.  Arithmetic accepts plain ints (coerced into the same
    field); combining elements of different moduli is a hard error.
    """

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field.p != self.field.p:
                raise ValueError(
                    f"cannot combine elements of F_{self.field.p} and F_{other.field.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value + v, self.field)

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value - v, self.field)

    def __rsub__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(v - self.value, self.field)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * v, self.field)

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value, self.field)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.field.p}")
        return FieldElement(self.value * pow(v, -1, self.field.p), self.field)

    def __rtruediv__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(v, self.field) / self

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.field.p), self.field)

    def inverse(self) -> FieldElement:
        """Multiplicative inverse; zero input signals a degenerate case upstream."""
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.field.p}")
        return FieldElement(pow(self.value, -1, self.field.p), self.field)

    def is_square(self) -> bool:
        """True iff self is zero or a quadratic residue."""
        if self.value == 0:
            return True
        return pow(self.value, (self.field.p - 1) // 2, self.field.p) == 1

    def sqrt(self) -> tuple[FieldElement, ...] | None:
        """Both square roots, smallest first; (0,) for zero; None for non-residues.

        Uses the p = 3 (mod 4) shortcut when available, Tonelli-Shanks
        otherwise.
        """
        p = self.field.p
        a = self.value
        if a == 0:
            return (FieldElement(0, self.field),)
        if not self.is_square():
            return None
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
        else:
            r = _tonelli_shanks(a, p)
        r = min(r, p - r)
        return (FieldElement(r, self.field), FieldElement(p - r, self.field))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field.p == other.field.p
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"F{self.field.p}({self.value})"


def _tonelli_shanks(a: int, p: int) -> int:
    """One square root of the residue a modulo p (p = 1 mod 4, a a QR)."""
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        t = t * b % p * b % p
        c = b * b % p
        m = i
    return r


def parse_element(field: PrimeField, text: str) -> FieldElement:
    """Parse a decimal string into a field element."""
    try:
        return field(int(text.strip(), 10))
    except ValueError as exc:
        raise ValueError(f"not a decimal field element: {text!r}") from exc
