"""Evaluation environments handed to identity evaluators.

``FastEnv`` is the production path: closed forms, the period-3 tables and
memoized quaternions. ``OracleEnv`` recomputes everything from the raw
recurrences (forward or backward) and the cyclotomic expressions, touching no
table, and is used to re-verify counterexamples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..exactnum import OMEGA, OMEGA2, Eisenstein, eis_pow
from ..quaternion import AlgebraParams, Quaternion, basis
from ..quatseq import HatConstants, hat_constants, vq3, vq3_cyclotomic
from ..sequences import (
    SeqKind,
    binet_eval,
    pow2,
    recurrence_terms,
    seq_backward,
    seq_closed,
    u3,
    v3,
)


class Env:
    def __init__(self, params: Optional[AlgebraParams]):
        self.params = params
        self.negative_index_used = False
        self._hats: Optional[HatConstants] = None
        self._cache: dict = {}

    # scalar sequences -------------------------------------------------
    def J(self, n: int) -> Fraction:
        if n < 0:
            self.negative_index_used = True
        return self._J(n)

    def j(self, n: int) -> Fraction:
        if n < 0:
            self.negative_index_used = True
        return self._j(n)

    def V(self, n: int) -> Fraction:
        raise NotImplementedError

    def U(self, n: int) -> Fraction:
        raise NotImplementedError

    def J_iter(self, n: int) -> Fraction:
        """J_n by iterating the recurrence, never through the closed form."""
        if n < 0:
            self.negative_index_used = True
        return seq_backward(SeqKind.J3, n)

    def j_iter(self, n: int) -> Fraction:
        if n < 0:
            self.negative_index_used = True
        return seq_backward(SeqKind.JL3, n)

    def binet(self, kind: SeqKind, n: int) -> Fraction:
        return binet_eval(kind, n)

    def _J(self, n: int) -> Fraction:
        raise NotImplementedError

    def _j(self, n: int) -> Fraction:
        raise NotImplementedError

    pow2 = staticmethod(pow2)

    # quaternions ------------------------------------------------------
    @property
    def P(self) -> AlgebraParams:
        if self.params is None:
            raise ValueError("this identity needs algebra parameters")
        return self.params

    def units(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return basis(self.P)

    def const(self, c: object) -> Quaternion:
        return Quaternion.scalar(c, self.P)

    def quat(self, r: object, i: object, j: object, k: object) -> Quaternion:
        return Quaternion(r, i, j, k, self.P)

    def JQ(self, n: int) -> Quaternion:
        return Quaternion(*(self.J(n + s) for s in range(4)), self.P)

    def jQ(self, n: int) -> Quaternion:
        return Quaternion(*(self.j(n + s) for s in range(4)), self.P)

    def UQ(self, n: int) -> Quaternion:
        return self.jQ(n - 1) - self.JQ(n + 1)

    def VQ(self, n: int) -> Quaternion:
        raise NotImplementedError

    def VQ_cyclotomic(self, n: int) -> Quaternion:
        return vq3_cyclotomic(self.P, n)

    @property
    def hats(self) -> HatConstants:
        if self._hats is None:
            self._hats = hat_constants(self.P)
        return self._hats

    def omega_pow(self, which: int, n: int) -> Eisenstein:
        return eis_pow(OMEGA if which == 1 else OMEGA2, n)


class FastEnv(Env):
    def __init__(self, params: Optional[AlgebraParams]):
        super().__init__(params)
        self._iter: dict[SeqKind, list[int]] = {}

    def _J(self, n: int) -> Fraction:
        return seq_closed(SeqKind.J3, n)

    def _j(self, n: int) -> Fraction:
        return seq_closed(SeqKind.JL3, n)

    def V(self, n: int) -> Fraction:
        return Fraction(v3(n))

    def U(self, n: int) -> Fraction:
        return Fraction(u3(n))

    def _terms(self, kind: SeqKind, n: int) -> Fraction:
        terms = self._iter.get(kind)
        if terms is None:
            terms = self._iter[kind] = []
            self._cache[("gen", kind)] = recurrence_terms(kind)
        gen = self._cache[("gen", kind)]
        while len(terms) <= n:
            terms.append(next(gen))
        return Fraction(terms[n])

    def J_iter(self, n: int) -> Fraction:
        if n < 0:
            return super().J_iter(n)
        return self._terms(SeqKind.J3, n)

    def j_iter(self, n: int) -> Fraction:
        if n < 0:
            return super().j_iter(n)
        return self._terms(SeqKind.JL3, n)

    def JQ(self, n: int) -> Quaternion:
        key = ("JQ", n)
        if key not in self._cache:
            self._cache[key] = super().JQ(n)
        elif n < 0:
            self.negative_index_used = True
        return self._cache[key]

    def jQ(self, n: int) -> Quaternion:
        key = ("jQ", n)
        if key not in self._cache:
            self._cache[key] = super().jQ(n)
        elif n < 0:
            self.negative_index_used = True
        return self._cache[key]

    def VQ(self, n: int) -> Quaternion:
        return vq3(self.P, n)

    @property
    def hat_products(self) -> tuple[Quaternion, Quaternion]:
        key = "hatprod"
        if key not in self._cache:
            h = self.hats
            self._cache[key] = (h.hat_omega1 * h.hat_omega2, h.hat_omega2 * h.hat_omega1)
        return self._cache[key]


class OracleEnv(Env):
    """Independent path: recurrences and cyclotomic forms only."""

    def _J(self, n: int) -> Fraction:
        return seq_backward(SeqKind.J3, n)

    def _j(self, n: int) -> Fraction:
        return seq_backward(SeqKind.JL3, n)

    def V(self, n: int) -> Fraction:
        return seq_backward(SeqKind.V3, n)

    def U(self, n: int) -> Fraction:
        return self.j(n - 1) - self.J(n + 1)

    def VQ(self, n: int) -> Quaternion:
        return vq3_cyclotomic(self.P, n)

    @property
    def hat_products(self) -> tuple[Quaternion, Quaternion]:
        h = hat_constants(self.P)
        return (h.hat_omega1 * h.hat_omega2, h.hat_omega2 * h.hat_omega1)
