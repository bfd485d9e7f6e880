"""Third-order Jacobsthal-type sequences and their classic second-order cousins.

Every value is an exact ``Fraction``. Nonnegative indices of J3/JL3/J2/JL2
are integers; the closed forms also extend all of them to negative indices,
where J3 and JL3 leave the integers (J3(-2) = 1/2).
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .exactnum import I_SQRT3, OMEGA, OMEGA2, Eisenstein, eis_pow

__all__ = [
    "SeqKind",
    "pow2",
    "v3",
    "u3",
    "seq_closed",
    "seq_recurrence",
    "recurrence_terms",
    "seq_backward",
    "binet_eval",
    "seq_sum",
]


class SeqKind(str, enum.Enum):
    J3 = "J3"
    JL3 = "JL3"
    V3 = "V3"
    U3 = "U3"
    J2 = "J2"
    JL2 = "JL2"

    @classmethod
    def parse(cls, s: "str | SeqKind") -> "SeqKind":
        if isinstance(s, SeqKind):
            return s
        try:
            return cls(s.strip().upper())
        except ValueError:
            raise ValueError(
                f"unknown sequence kind {s!r}; expected one of "
                + ", ".join(k.value for k in cls)
            ) from None


_V3_TABLE = (2, -3, 1)
_U3_TABLE = (0, 1, -1)

# seeds and recurrence weights, most recent term first
_THIRD_ORDER = (1, 1, 2)
_SECOND_ORDER = (1, 2)
_SEEDS = {
    SeqKind.J3: ((0, 1, 1), _THIRD_ORDER),
    SeqKind.JL3: ((2, 1, 5), _THIRD_ORDER),
    SeqKind.J2: ((0, 1), _SECOND_ORDER),
    SeqKind.JL2: ((2, 1), _SECOND_ORDER),
    SeqKind.V3: ((2, -3), (-1, -1)),
}


def pow2(k: int) -> Fraction:
    """2**k as an exact rational for any integer k."""
    if k >= 0:
        return Fraction(1 << k)
    return Fraction(1, 1 << -k)


def v3(n: int) -> int:
    return _V3_TABLE[n % 3]


def u3(n: int) -> int:
    return _U3_TABLE[n % 3]


@lru_cache(maxsize=4096)
def seq_closed(kind: "SeqKind | str", n: int) -> Fraction:
    """Closed-form value at any integer index."""
    kind = SeqKind.parse(kind)
    if kind is SeqKind.J3:
        return (pow2(n + 1) - v3(n)) / 7
    if kind is SeqKind.JL3:
        return (pow2(n + 3) + 3 * v3(n)) / 7
    if kind is SeqKind.V3:
        return Fraction(v3(n))
    if kind is SeqKind.U3:
        return Fraction(u3(n))
    # second order: roots 2 and -1
    sign = -1 if n % 2 else 1
    if kind is SeqKind.J2:
        return (pow2(n) - sign) / 3
    return pow2(n) + sign


def recurrence_terms(kind: "SeqKind | str") -> Iterator[int]:
    """Forward iteration from the initial conditions, yielding X_0, X_1, ..."""
    kind = SeqKind.parse(kind)
    if kind is SeqKind.U3:
        # U_n = j_{n-1} - J_{n+1}; j_{-1} comes from one backward step
        js = recurrence_terms(SeqKind.JL3)
        Js = recurrence_terms(SeqKind.J3)
        next(Js)
        j_prev = int(seq_backward(SeqKind.JL3, -1))
        for J_next in Js:
            yield j_prev - J_next
            j_prev = next(js)
        return
    seeds, weights = _SEEDS[kind]
    yield from seeds
    if len(weights) == 3:
        w0, w1, w2 = weights
        x0, x1, x2 = seeds
        while True:
            x0, x1, x2 = x1, x2, w0 * x2 + w1 * x1 + w2 * x0
            yield x2
    else:
        w0, w1 = weights
        x0, x1 = seeds
        while True:
            x0, x1 = x1, w0 * x1 + w1 * x0
            yield x1


def seq_recurrence(kind: "SeqKind | str", n: int) -> Fraction:
    """Ground-truth value by naive forward iteration; n >= 0 only."""
    if n < 0:
        raise ValueError(f"recurrence evaluation needs n >= 0, got {n}; use seq_closed")
    return Fraction(next(itertools.islice(recurrence_terms(kind), n, None)))


def seq_backward(kind: "SeqKind | str", n: int) -> Fraction:
    """Value at any index by iterating the recurrence forward or backward.

    Backward steps solve the recurrence for its oldest term, e.g.
    J_n = (J_{n+3} - J_{n+2} - J_{n+1}) / 2 for the third-order kinds.
    """
    kind = SeqKind.parse(kind)
    if n >= 0:
        return seq_recurrence(kind, n)
    if kind is SeqKind.U3:
        return seq_backward(SeqKind.JL3, n - 1) - seq_backward(SeqKind.J3, n + 1)
    seeds, weights = _SEEDS[kind]
    # window holds X_k .. X_{k+d-1}, starting at k = 0
    window = [Fraction(s) for s in seeds]
    oldest_weight = weights[-1]
    for _ in range(-n):
        newest = window[-1]
        # X_{k+d-1} = sum w_i X_{k+d-2-i}  ->  solve for X_{k-1}
        newer = list(reversed(window[:-1]))
        partial = sum((w * x for w, x in zip(weights[:-1], newer)), Fraction(0))
        oldest = (newest - partial) / oldest_weight
        window = [oldest] + window[:-1]
    return window[0]


# J3 = (2/7) 2^n - c w1^n - conj(c) w2^n with c = (3 + 2 i sqrt3) / 21
_BINET_J3 = (Eisenstein(3) + 2 * I_SQRT3) / 21
# JL3 = (8/7) 2^n + d w1^n + conj(d) w2^n with d = (3 + 2 i sqrt3) / 7
_BINET_JL3 = (Eisenstein(3) + 2 * I_SQRT3) / 7
_A = -3 - 2 * OMEGA2
_B = -3 - 2 * OMEGA


def binet_eval(kind: "SeqKind | str", n: int) -> Fraction:
    """Evaluate the Binet form exactly in Q(w) and certify the result is rational."""
    kind = SeqKind.parse(kind)
    w1n = eis_pow(OMEGA, n)
    w2n = eis_pow(OMEGA2, n)
    if kind is SeqKind.J3:
        val = Fraction(2, 7) * pow2(n) - _BINET_J3 * w1n - _BINET_J3.conj() * w2n
    elif kind is SeqKind.JL3:
        val = Fraction(8, 7) * pow2(n) + _BINET_JL3 * w1n + _BINET_JL3.conj() * w2n
    elif kind is SeqKind.V3:
        val = (_A * w1n - _B * w2n) / (OMEGA - OMEGA2)
    else:
        raise ValueError(f"no Binet form for {kind.value}")
    return Eisenstein.coerce(val).to_rational()


def seq_sum(kind: "SeqKind | str", n: int, mode: str = "closed") -> Fraction:
    """Sum of X_0..X_n, either term by term or by the mod-3 case split."""
    kind = SeqKind.parse(kind)
    if kind not in (SeqKind.J3, SeqKind.JL3):
        raise ValueError(f"sums are defined for J3 and JL3 only, not {kind.value}")
    if n < 0:
        raise ValueError(f"sum needs n >= 0, got {n}")
    if mode == "direct":
        return sum((seq_closed(kind, k) for k in range(n + 1)), Fraction(0))
    if mode != "closed":
        raise ValueError(f"unknown sum mode {mode!r}")
    nxt = seq_closed(kind, n + 1)
    if kind is SeqKind.J3:
        return nxt - 1 if n % 3 == 0 else nxt
    return nxt + 1 if n % 3 == 0 else nxt - 2
