"""Exact coefficient fields: the rationals and prime fields F_p.

Coefficients are plain values, not wrapped objects: Fraction over QQ, ints in
[0, p) over F_p.  Every arithmetic step goes through the Field instance so the
same code paths serve both characteristics.
"""
from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """QQ when char == 0, otherwise F_p for a prime p <= 2**31."""

    __slots__ = ("char",)

    def __init__(self, char: int = 0):
        if char != 0:
            if char > 2 ** 31:
                raise ValueError("prime modulus too large: %d" % char)
            if not _is_prime(char):
                raise ValueError("modulus must be prime, got %d" % char)
        self.char = char

    def of(self, a):
        """Canonicalize an int / Fraction / string into this field."""
        if self.char == 0:
            return Fraction(a)
        if isinstance(a, str):
            a = Fraction(a)
        if isinstance(a, Fraction):
            if a.denominator % self.char == 0:
                raise ZeroDivisionError("denominator not invertible mod %d" % self.char)
            return a.numerator * pow(a.denominator, -1, self.char) % self.char
        return int(a) % self.char

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.char == 0 else pow(a, -1, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else "F%d" % self.char


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
