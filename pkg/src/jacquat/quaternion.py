"""Generalized quaternions over H(alpha, beta).

The units obey

    e1^2 = -alpha, e2^2 = -beta, e3^2 = -alpha*beta,
    e1 e2 = e3 = -e2 e1,  e2 e3 = beta e1 = -e3 e2,  e3 e1 = alpha e2 = -e1 e3.

Coefficients may be ``Fraction`` or ``Eisenstein``; the algebra parameters are
always rational. Degenerate algebras (alpha or beta zero) need no special
handling except that more elements fail to be invertible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from .exactnum import Eisenstein, as_rational

Scalar = Union[Fraction, Eisenstein]

__all__ = [
    "AlgebraParams",
    "Quaternion",
    "PRESETS",
    "AlgebraMismatch",
    "NotInvertible",
    "UnsupportedMode",
    "preset",
    "basis",
    "q_linear",
    "q_scale",
    "q_mul",
    "q_conj",
    "q_norm",
    "q_inv",
    "q_decompose",
]


class AlgebraMismatch(ValueError):
    pass


class NotInvertible(ZeroDivisionError):
    pass


class UnsupportedMode(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraParams:
    alpha: Fraction
    beta: Fraction
    preset_name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        if self.preset_name is None:
            for name, (a, b) in _PRESET_VALUES.items():
                if (self.alpha, self.beta) == (a, b):
                    object.__setattr__(self, "preset_name", name)
                    break

    @property
    def key(self) -> tuple[Fraction, Fraction]:
        return (self.alpha, self.beta)

    def __str__(self) -> str:
        label = f"H({self.alpha},{self.beta})"
        return f"{label} [{self.preset_name}]" if self.preset_name else label


_PRESET_VALUES = {
    "real": (Fraction(1), Fraction(1)),
    "split": (Fraction(1), Fraction(-1)),
    "semi": (Fraction(1), Fraction(0)),
    "split_semi": (Fraction(-1), Fraction(0)),
    "quarter": (Fraction(0), Fraction(0)),
}

PRESETS: dict[str, AlgebraParams] = {
    name: AlgebraParams(a, b, name) for name, (a, b) in _PRESET_VALUES.items()
}


def preset(name: str) -> AlgebraParams:
    key = name.strip().lower().replace("-", "_")
    if key not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}")
    return PRESETS[key]


def _is_scalar(x: object) -> bool:
    return isinstance(x, (int, Fraction, Eisenstein)) and not isinstance(x, bool)


def _coef(x: object) -> Scalar:
    if isinstance(x, Eisenstein):
        return x
    return as_rational(x)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Quaternion:
    r: Scalar
    i: Scalar
    j: Scalar
    k: Scalar
    params: AlgebraParams

    def __post_init__(self) -> None:
        for name in ("r", "i", "j", "k"):
            object.__setattr__(self, name, _coef(getattr(self, name)))

    @classmethod
    def scalar(cls, c: object, params: AlgebraParams) -> "Quaternion":
        return cls(c, 0, 0, 0, params)

    @classmethod
    def zero(cls, params: AlgebraParams) -> "Quaternion":
        return cls(0, 0, 0, 0, params)

    @classmethod
    def one(cls, params: AlgebraParams) -> "Quaternion":
        return cls(1, 0, 0, 0, params)

    @property
    def components(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.r, self.i, self.j, self.k)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.components)

    @property
    def scalar_part(self) -> Scalar:
        return self.r

    @property
    def vector_part(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.i, self.j, self.k)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def _check(self, other: "Quaternion") -> None:
        if self.params != other.params:
            raise AlgebraMismatch(f"cannot combine {self.params} with {other.params}")

    def __add__(self, other: object) -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        return Quaternion(*(x + y for x, y in zip(self, other)), self.params)

    def __sub__(self, other: object) -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        return Quaternion(*(x - y for x, y in zip(self, other)), self.params)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.r, -self.i, -self.j, -self.k, self.params)

    def __mul__(self, other: object) -> "Quaternion":
        if isinstance(other, Quaternion):
            return q_mul(self, other)
        if _is_scalar(other):
            return Quaternion(*(x * other for x in self), self.params)
        return NotImplemented

    def __rmul__(self, other: object) -> "Quaternion":
        # coefficients commute with the units, so c*q == q*c
        if _is_scalar(other):
            return Quaternion(*(other * x for x in self), self.params)
        return NotImplemented

    def __truediv__(self, other: object) -> "Quaternion":
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("quaternion divided by zero scalar")
            return Quaternion(*(x / other for x in self), self.params)
        return NotImplemented

    def __pow__(self, n: int) -> "Quaternion":
        if n < 0:
            return q_inv(self) ** (-n)
        result = Quaternion.one(self.params)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self) -> "Quaternion":
        return q_conj(self)

    def norm(self) -> Scalar:
        return q_norm(self, "signed")

    def inverse(self) -> "Quaternion":
        return q_inv(self)

    def coefficient_conj(self) -> "Quaternion":
        """Apply w -> conj(w) to every coefficient (identity on rationals)."""
        return Quaternion(
            *(c.conj() if isinstance(c, Eisenstein) else c for c in self), self.params
        )

    def is_rational(self) -> bool:
        return all(not isinstance(c, Eisenstein) or c.is_rational() for c in self)

    def to_rational(self) -> "Quaternion":
        """Certify every coefficient is rational; raises NonRealCyclotomicValue otherwise."""
        return Quaternion(
            *(c.to_rational() if isinstance(c, Eisenstein) else c for c in self),
            self.params,
        )


def basis(params: AlgebraParams) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
    """The units (1, e1, e2, e3)."""
    return tuple(  # type: ignore[return-value]
        Quaternion(*(1 if s == t else 0 for t in range(4)), params) for s in range(4)
    )


def q_linear(p: Quaternion, q: Quaternion, op: str) -> Quaternion:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    raise ValueError(f"unknown linear operation {op!r}")


def q_scale(c: object, q: Quaternion) -> Quaternion:
    return c * q  # type: ignore[operator]


def _common(q: Quaternion) -> Optional[tuple[list[int], int]]:
    """Integer numerators over one common denominator, or None for Q(w) coefficients."""
    if any(type(c) is not Fraction for c in q.components):
        return None
    d = math.lcm(*(c.denominator for c in q.components))
    return [c.numerator * (d // c.denominator) for c in q.components], d


def q_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    p._check(q)
    a, b = p.params.alpha, p.params.beta
    pc, qc = _common(p), _common(q)
    if pc is not None and qc is not None:
        # same formula on integers: one normalization per component
        (p0, p1, p2, p3), dp = pc
        (q0, q1, q2, q3), dq = qc
        A, da, B, db = a.numerator, a.denominator, b.numerator, b.denominator
        d = dp * dq
        return Quaternion(
            Fraction(p0 * q0 * da * db - A * db * p1 * q1 - B * da * p2 * q2 - A * B * p3 * q3,
                     d * da * db),
            Fraction((p0 * q1 + p1 * q0) * db + B * (p2 * q3 - p3 * q2), d * db),
            Fraction((p0 * q2 + p2 * q0) * da + A * (p3 * q1 - p1 * q3), d * da),
            Fraction(p0 * q3 + p3 * q0 + p1 * q2 - p2 * q1, d),
            p.params,
        )
    ab = a * b
    p0, p1, p2, p3 = p
    q0, q1, q2, q3 = q
    r = p0 * q0 - a * (p1 * q1) - b * (p2 * q2) - ab * (p3 * q3)
    i = p0 * q1 + p1 * q0 + b * (p2 * q3 - p3 * q2)
    j = p0 * q2 + p2 * q0 + a * (p3 * q1 - p1 * q3)
    k = p0 * q3 + p3 * q0 + (p1 * q2 - p2 * q1)
    return Quaternion(r, i, j, k, p.params)


def q_conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.r, -q.i, -q.j, -q.k, q.params)


def q_norm(q: Quaternion, mode: str = "signed") -> Scalar:
    """Norm form r^2 + alpha i^2 + beta j^2 + alpha beta k^2.

    ``mode="absolute"`` returns its absolute value and is only defined for
    rational coefficients.
    """
    a, b = q.params.alpha, q.params.beta
    qc = _common(q)
    if qc is not None:
        (r, i, j, k), d = qc
        A, da, B, db = a.numerator, a.denominator, b.numerator, b.denominator
        n = Fraction(r * r * da * db + A * db * i * i + B * da * j * j + A * B * k * k,
                     d * d * da * db)
    else:
        n = q.r * q.r + a * (q.i * q.i) + b * (q.j * q.j) + (a * b) * (q.k * q.k)
    if mode == "signed":
        return n
    if mode == "absolute":
        if any(isinstance(c, Eisenstein) for c in q):
            raise UnsupportedMode("absolute norm is undefined for Eisenstein coefficients")
        return abs(n)
    raise UnsupportedMode(f"unknown norm mode {mode!r}")


def q_inv(q: Quaternion) -> Quaternion:
    """conj(q) / N(q) with the signed norm, so that q * q^-1 = 1 in every algebra."""
    n = q_norm(q, "signed")
    if n == 0:
        raise NotInvertible(f"{q} has zero norm in {q.params}")
    return q_conj(q) / n


def _h(u: tuple, v: tuple, params: AlgebraParams) -> Scalar:
    a, b = params.alpha, params.beta
    return a * (u[0] * v[0]) + b * (u[1] * v[1]) + (a * b) * (u[2] * v[2])


def _cross(u: tuple, v: tuple, params: AlgebraParams) -> Quaternion:
    a, b = params.alpha, params.beta
    return Quaternion(
        0,
        b * (u[1] * v[2] - u[2] * v[1]),
        a * (u[2] * v[0] - u[0] * v[2]),
        u[0] * v[1] - u[1] * v[0],
        params,
    )


def q_decompose(p: Quaternion, q: Quaternion) -> tuple[Scalar, Quaternion]:
    """Split p*q into the bilinear form h(Vp, Vq) and the cross product Vp x Vq.

    Together they satisfy
    p*q = Sp Sq - h(Vp, Vq) + Sp Vq + Sq Vp + Vp x Vq.
    """
    p._check(q)
    return _h(p.vector_part, q.vector_part, p.params), _cross(
        p.vector_part, q.vector_part, p.params
    )


def recompose(p: Quaternion, q: Quaternion) -> Quaternion:
    """Rebuild p*q from the scalar/vector decomposition."""
    h, cross = q_decompose(p, q)
    params = p.params
    vp = Quaternion(0, *p.vector_part, params)
    vq = Quaternion(0, *q.vector_part, params)
    return Quaternion.scalar(p.r * q.r - h, params) + p.r * vq + q.r * vp + cross
