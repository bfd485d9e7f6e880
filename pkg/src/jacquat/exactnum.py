"""Exact scalars: rationals (``fractions.Fraction``) and the cyclotomic field Q(w).

Elements of Q(w) are stored on the basis {1, w} where w is a primitive cube
root of unity, so every product is reduced with w^2 = -1 - w.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

__all__ = [
    "Rational",
    "Eisenstein",
    "OMEGA",
    "OMEGA2",
    "I_SQRT3",
    "NonRealCyclotomicValue",
    "as_rational",
    "eis_arith",
    "eis_pow",
    "eis_inv_conj",
    "eis_to_rational",
]


class NonRealCyclotomicValue(ValueError):
    """Raised when a value in Q(w) that was expected to be rational is not."""

    def __init__(self, value: "Eisenstein"):
        super().__init__(f"non-real cyclotomic value: {value}")
        self.value = value


def as_rational(x: Union[int, Fraction, str]) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, (int, str, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Rational")


class Eisenstein:
    """a + b*w with a, b rational and w^2 + w + 1 = 0."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: Union[int, Fraction] = 0, b: Union[int, Fraction] = 0):
        self._a = as_rational(a)
        self._b = as_rational(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x: object) -> "Eisenstein":
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to Eisenstein")

    def is_rational(self) -> bool:
        return self._b == 0

    def __repr__(self) -> str:
        return f"Eisenstein({self._a!s}, {self._b!s})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        if self._a == 0:
            return f"{self._b}w"
        sign = "-" if self._b < 0 else "+"
        return f"{self._a}{sign}{abs(self._b)}w"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Eisenstein):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __add__(self, other: object) -> "Eisenstein":
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return Eisenstein(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Eisenstein":
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return Eisenstein(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: object) -> "Eisenstein":
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __neg__(self) -> "Eisenstein":
        return Eisenstein(-self._a, -self._b)

    def __pos__(self) -> "Eisenstein":
        return self

    def __mul__(self, other: object) -> "Eisenstein":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Eisenstein(self._a * other, self._b * other)
        if not isinstance(other, Eisenstein):
            return NotImplemented
        a, b, c, d = self._a, self._b, other._a, other._b
        bd = b * d
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w
        return Eisenstein(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Eisenstein":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division of Eisenstein value by zero")
            return Eisenstein(self._a / other, self._b / other)
        if not isinstance(other, Eisenstein):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "Eisenstein":
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "Eisenstein":
        return eis_pow(self, n)

    def conj(self) -> "Eisenstein":
        # conj(w) = w^2 = -1 - w
        return Eisenstein(self._a - self._b, -self._b)

    def norm(self) -> Fraction:
        """Field norm a^2 - ab + b^2; equals x * conj(x)."""
        a, b = self._a, self._b
        return a * a - a * b + b * b

    def inverse(self) -> "Eisenstein":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("zero has no inverse in Q(w)")
        c = self.conj()
        return Eisenstein(c._a / nrm, c._b / nrm)

    def to_rational(self) -> Fraction:
        if self._b != 0:
            raise NonRealCyclotomicValue(self)
        return self._a


OMEGA = Eisenstein(0, 1)
OMEGA2 = Eisenstein(-1, -1)
# i*sqrt(3) = w1 - w2 = 1 + 2w
I_SQRT3 = OMEGA - OMEGA2


def eis_arith(x: Eisenstein, y: Eisenstein, op: str) -> Eisenstein:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    raise ValueError(f"unknown Eisenstein operation {op!r}")


def eis_pow(x: Eisenstein, n: int) -> Eisenstein:
    """Square-and-multiply power; negative exponents go through the inverse."""
    x = Eisenstein.coerce(x)
    if n < 0:
        if not x:
            raise ZeroDivisionError("zero raised to a negative power")
        x = x.inverse()
        n = -n
    result = Eisenstein(1, 0)
    base = x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def eis_inv_conj(x: Eisenstein, op: str) -> Eisenstein:
    if op == "inv":
        return Eisenstein.coerce(x).inverse()
    if op == "conj":
        return Eisenstein.coerce(x).conj()
    raise ValueError(f"unknown operation {op!r}")


def eis_to_rational(x: Eisenstein) -> Fraction:
    return Eisenstein.coerce(x).to_rational()
