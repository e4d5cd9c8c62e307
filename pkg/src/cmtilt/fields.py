"""Exact scalar arithmetic over the rationals and over prime fields.

Scalars are plain Python values: ``Fraction`` over the rationals, ``int``
in the range ``0..p-1`` over a prime field.  A ``FieldSpec`` bundles the
operations so that matrices and polynomials can stay as ordinary lists.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

RATIONALS = "rationals"
PRIME = "prime"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """The base field: either the rationals or F_p for a prime p."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind not in (RATIONALS, PRIME):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == PRIME:
            if p is None or not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        self.kind = kind
        self.p = p

    # -- construction -------------------------------------------------

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(RATIONALS)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(PRIME, p)

    @staticmethod
    def from_text(text: str) -> "FieldSpec":
        """Parse a field description, ``q`` or ``fp:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return FieldSpec.rationals()
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ParseError(f"bad prime in field spec {text!r}") from None
            if not _is_prime(p):
                raise ParseError(f"{p} is not prime")
            return FieldSpec.prime(p)
        raise ParseError(f"unknown field spec {text!r}; use 'q' or 'fp:<p>'")

    # -- scalar operations --------------------------------------------

    def zero(self):
        return 0 if self.kind == PRIME else Fraction(0)

    def one(self):
        return 1 if self.kind == PRIME else Fraction(1)

    def of(self, value):
        """Coerce an int, Fraction or 'a/b' string into a scalar."""
        if isinstance(value, str):
            try:
                value = Fraction(value)
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad scalar {value!r}") from None
        if self.kind == RATIONALS:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ParseError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.kind == PRIME else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == PRIME else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == PRIME else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == PRIME else -a

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.kind == PRIME:
            return pow(a, self.p - 2, self.p)
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.inv(self.pow(a, -e))
        if self.kind == PRIME:
            return pow(a, e, self.p)
        return a ** e

    def is_zero(self, a) -> bool:
        return a == 0

    def scalar_to_str(self, a) -> str:
        return str(a)

    def elements(self):
        """Iterate over all field elements (prime fields only)."""
        if self.kind != PRIME:
            raise ValueError("cannot enumerate the rationals")
        return range(self.p)

    @property
    def char(self) -> int:
        return self.p if self.kind == PRIME else 0

    # -- identity -----------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == RATIONALS else f"GF({self.p})"

    def describe(self) -> str:
        return "q" if self.kind == RATIONALS else f"fp:{self.p}"


QQ = FieldSpec.rationals()
