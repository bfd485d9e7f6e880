"""Quaternion-valued sequences over H(alpha, beta).

JQ_n = J_n + J_{n+1} e1 + J_{n+2} e2 + J_{n+3} e3, and likewise jQ_n from the
Jacobsthal-Lucas numbers. VQ is the period-3 quaternion that carries the
non-dominant Binet terms; UQ_n = jQ_{n-1} - JQ_{n+1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import OMEGA, OMEGA2, Eisenstein, eis_pow
from .quaternion import AlgebraParams, Quaternion
from .sequences import SeqKind, pow2, seq_closed

__all__ = [
    "HatConstants",
    "jq3",
    "jlq3",
    "vq3",
    "uq3",
    "vq3_cyclotomic",
    "quat_binet",
    "hat_constants",
    "lift",
]

_VQ_TABLE = (
    (2, -3, 1, 2),
    (-3, 1, 2, -3),
    (1, 2, -3, 1),
)


def lift(kind: "SeqKind | str", params: AlgebraParams, n: int) -> Quaternion:
    """Quaternion whose components are X_n, X_{n+1}, X_{n+2}, X_{n+3}."""
    return Quaternion(*(seq_closed(kind, n + s) for s in range(4)), params)


def jq3(params: AlgebraParams, n: int) -> Quaternion:
    return lift(SeqKind.J3, params, n)


def jlq3(params: AlgebraParams, n: int) -> Quaternion:
    return lift(SeqKind.JL3, params, n)


def vq3(params: AlgebraParams, n: int) -> Quaternion:
    return Quaternion(*_VQ_TABLE[n % 3], params)


def uq3(params: AlgebraParams, n: int) -> Quaternion:
    return jlq3(params, n - 1) - jq3(params, n + 1)


@dataclass(frozen=True)
class HatConstants:
    hat2: Quaternion
    hat_omega1: Quaternion
    hat_omega2: Quaternion


def hat_constants(params: AlgebraParams) -> HatConstants:
    def hat_w(w: Eisenstein) -> Quaternion:
        return Quaternion(Eisenstein(1), w, w * w, Eisenstein(1), params)

    return HatConstants(
        hat2=Quaternion(1, 2, 4, 8, params),
        hat_omega1=hat_w(OMEGA),
        hat_omega2=hat_w(OMEGA2),
    )


def vq3_cyclotomic(params: AlgebraParams, n: int) -> Quaternion:
    """VQ_n from (A w1^n hat(w1) - B w2^n hat(w2)) / (w1 - w2), certified rational."""
    hats = hat_constants(params)
    A = -3 - 2 * OMEGA2
    B = -3 - 2 * OMEGA
    num = (A * eis_pow(OMEGA, n)) * hats.hat_omega1 - (B * eis_pow(OMEGA2, n)) * hats.hat_omega2
    return (num * (OMEGA - OMEGA2).inverse()).to_rational()


def quat_binet(params: AlgebraParams, n: int, which: str = "JQ") -> Quaternion:
    """Binet form: JQ_n = (2^{n+1} hat2 - VQ_n)/7, jQ_n = (2^{n+3} hat2 + 3 VQ_n)/7."""
    hat2 = hat_constants(params).hat2
    vq = vq3(params, n)
    if which == "JQ":
        return (pow2(n + 1) * hat2 - vq) / 7
    if which == "jQ":
        return (pow2(n + 3) * hat2 + 3 * vq) / 7
    raise ValueError(f"which must be 'JQ' or 'jQ', got {which!r}")
