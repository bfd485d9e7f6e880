"""Static catalog of the checked identities.

Each entry is an :class:`IdentitySpec` with two exact evaluators taking
``(env, n, m)``. Entries whose printed form is wrong come in pairs,
``<base>.as_printed`` and ``<base>.corrected``; the printed member carries a
``correction`` describing the exact textual change.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from ..quaternion import AlgebraParams, Quaternion, q_norm, recompose
from ..quaternion import PRESETS, q_inv
from ..sequences import SeqKind
from .env import Env

Value = Union[Fraction, Quaternion]
Evaluator = Callable[[Env, int, int], Value]

AS_PRINTED = "as_printed"
CORRECTED = "corrected"


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    statement: str
    lhs: Evaluator = field(repr=False)
    rhs: Evaluator = field(repr=False)
    scope: str = "universal"  # "scalar" | "universal" | "fixed"
    fixed: Optional[str] = None  # preset name when scope == "fixed"
    variables: tuple[str, ...] = ("n",)
    domain: str = "n>=0"  # "n>=0" | "all"
    variant: str = AS_PRINTED
    correction: Optional[str] = None
    note: Optional[str] = None
    applies: Optional[Callable[[Env, int, int], bool]] = field(default=None, repr=False)
    eisenstein: bool = False

    @property
    def base(self) -> str:
        for suffix in (AS_PRINTED, CORRECTED):
            if self.id.endswith("." + suffix):
                return self.id[: -len(suffix) - 1]
        return self.id

    @property
    def fixed_params(self) -> Optional[AlgebraParams]:
        return PRESETS[self.fixed] if self.fixed else None

    def in_scope(self, params: Optional[AlgebraParams]) -> bool:
        if self.scope == "scalar":
            return params is None
        if params is None:
            return False
        if self.scope == "fixed":
            return params == self.fixed_params
        return True


def _case3(n: int, c0: object, c1: object, c2: object) -> Fraction:
    return Fraction((c0, c1, c2)[n % 3])  # type: ignore[arg-type]


# ---------------------------------------------------------------- scalar

def _scalar_entries() -> list[IdentitySpec]:
    P2 = Env.pow2

    def e10_rhs(e: Env, n: int, m: int) -> Fraction:
        return e.J(n + 1) - 1 if n % 3 == 0 else e.J(n + 1)

    def e11_rhs(e: Env, n: int, m: int) -> Fraction:
        return e.j(n + 1) + 1 if n % 3 == 0 else e.j(n + 1) - 2

    def A_B_V(e: Env, n: int, m: int) -> Fraction:
        return e.binet(SeqKind.V3, n)

    return [
        IdentitySpec("e4", "3 J_n + j_n = 2^(n+1)",
                     lambda e, n, m: 3 * e.J(n) + e.j(n),
                     lambda e, n, m: P2(n + 1), scope="scalar"),
        IdentitySpec("e5", "j_n - 3 J_n = 2 j_(n-3)",
                     lambda e, n, m: e.j(n) - 3 * e.J(n),
                     lambda e, n, m: 2 * e.j(n - 3), scope="scalar"),
        IdentitySpec("ec5", "J_(n+2) - 4 J_n = -2 if n = 1 (mod 3), else 1",
                     lambda e, n, m: e.J(n + 2) - 4 * e.J(n),
                     lambda e, n, m: _case3(n, 1, -2, 1), scope="scalar"),
        IdentitySpec("e6", "j_n - 4 J_n = 2, -3, 1 for n = 0, 1, 2 (mod 3)",
                     lambda e, n, m: e.j(n) - 4 * e.J(n),
                     lambda e, n, m: _case3(n, 2, -3, 1), scope="scalar"),
        IdentitySpec("e7", "j_(n+1) + j_n = 3 J_(n+2)",
                     lambda e, n, m: e.j(n + 1) + e.j(n),
                     lambda e, n, m: 3 * e.J(n + 2), scope="scalar"),
        IdentitySpec("e8", "j_n - J_(n+2) = 1, -1, 0 for n = 0, 1, 2 (mod 3)",
                     lambda e, n, m: e.j(n) - e.J(n + 2),
                     lambda e, n, m: _case3(n, 1, -1, 0), scope="scalar"),
        IdentitySpec("e9", "(j_(n-3))^2 + 3 J_n j_n = 4^n",
                     lambda e, n, m: e.j(n - 3) ** 2 + 3 * e.J(n) * e.j(n),
                     lambda e, n, m: P2(2 * n), scope="scalar"),
        IdentitySpec("e10", "sum_(k=0..n) J_k = J_(n+1) - 1 if n = 0 (mod 3), else J_(n+1)",
                     lambda e, n, m: sum((e.J(k) for k in range(n + 1)), Fraction(0)),
                     e10_rhs, scope="scalar"),
        IdentitySpec("e11", "sum_(k=0..n) j_k = j_(n+1) + 1 if n = 0 (mod 3), else j_(n+1) - 2",
                     lambda e, n, m: sum((e.j(k) for k in range(n + 1)), Fraction(0)),
                     e11_rhs, scope="scalar"),
        IdentitySpec("e12", "(j_n)^2 - 9 (J_n)^2 = 2^(n+2) j_(n-3)",
                     lambda e, n, m: e.j(n) ** 2 - 9 * e.J(n) ** 2,
                     lambda e, n, m: P2(n + 2) * e.j(n - 3), scope="scalar"),
        IdentitySpec("b1", "J_n = (2/7) 2^n - ((3 + 2i sqrt3)/21) w1^n - ((3 - 2i sqrt3)/21) w2^n",
                     lambda e, n, m: e.J_iter(n),
                     lambda e, n, m: e.binet(SeqKind.J3, n), scope="scalar", domain="all"),
        IdentitySpec("b2", "j_n = (8/7) 2^n + ((3 + 2i sqrt3)/7) w1^n + ((3 - 2i sqrt3)/7) w2^n",
                     lambda e, n, m: e.j_iter(n),
                     lambda e, n, m: e.binet(SeqKind.JL3, n), scope="scalar", domain="all"),
        IdentitySpec("h1", "V_n = (A w1^n - B w2^n)/(w1 - w2) = 2, -3, 1 for n = 0, 1, 2 (mod 3)",
                     lambda e, n, m: e.V(n), A_B_V, scope="scalar", domain="all"),
        IdentitySpec("h1.rec", "V_(n+2) = -V_(n+1) - V_n",
                     lambda e, n, m: e.V(n + 2),
                     lambda e, n, m: -e.V(n + 1) - e.V(n), scope="scalar", domain="all"),
        IdentitySpec("h2.J", "J_n = (2^(n+1) - V_n)/7",
                     lambda e, n, m: e.J_iter(n),
                     lambda e, n, m: (P2(n + 1) - e.V(n)) / 7, scope="scalar", domain="all"),
        IdentitySpec("h2.j", "j_n = (2^(n+3) + 3 V_n)/7",
                     lambda e, n, m: e.j_iter(n),
                     lambda e, n, m: (P2(n + 3) + 3 * e.V(n)) / 7, scope="scalar", domain="all"),
        IdentitySpec("u.def", "U_n = j_(n-1) - J_(n+1) = 0, 1, -1 for n = 0, 1, 2 (mod 3)",
                     lambda e, n, m: e.U(n),
                     lambda e, n, m: e.j(n - 1) - e.J(n + 1), scope="scalar", domain="all"),
        IdentitySpec("sumsq", "J_n^2 + J_(n+1)^2 + J_(n+2)^2 = (3 2^(2(n+1)) - 2^(n+2) U_n + 2)/7",
                     lambda e, n, m: e.J(n) ** 2 + e.J(n + 1) ** 2 + e.J(n + 2) ** 2,
                     lambda e, n, m: (3 * P2(2 * n + 2) - P2(n + 2) * e.U(n) + 2) / 7,
                     scope="scalar"),
    ]


# ------------------------------------------------------------ quaternion

def _eq2_lhs(e: Env, n: int, m: int) -> Quaternion:
    _, e1, e2, e3 = e.units()
    return e.JQ(n) - e1 * e.JQ(n + 1) - e2 * e.JQ(n + 2) - e3 * e.JQ(n + 3)


def _eq2_rhs(e: Env, n: int, m: int) -> Quaternion:
    a, b = e.P.alpha, e.P.beta
    val = ((1 + 2 * b + 10 * a * b) * e.J(n) + (3 * b + 9 * a * b) * e.J(n + 1)
           + (a + 2 * b + 9 * a * b) * e.J(n + 2))
    return e.const(val)


def _eq2_bullets() -> list[IdentitySpec]:
    forms = {
        "real": ("37 J_n + 12 j_n", lambda e, n: 37 * e.J(n) + 12 * e.j(n)),
        "split": ("-(J_n + 17 J_(n+1) + 5 j_(n+1))",
                  lambda e, n: -(e.J(n) + 17 * e.J(n + 1) + 5 * e.j(n + 1))),
        "semi": ("J_n + J_(n+2)", lambda e, n: e.J(n) + e.J(n + 2)),
        "split_semi": ("J_n - J_(n+2)", lambda e, n: e.J(n) - e.J(n + 2)),
        "quarter": ("J_n", lambda e, n: e.J(n)),
    }
    out = []
    for name, (text, f) in forms.items():
        out.append(IdentitySpec(
            f"eq2.{name}",
            f"JQ_n - e1 JQ_(n+1) - e2 JQ_(n+2) - e3 JQ_(n+3) = {text}",
            _eq2_lhs, (lambda f: lambda e, n, m: e.const(f(e, n)))(f),
            scope="fixed", fixed=name))
    return out


def _sum_sq(e: Env, n: int) -> Quaternion:
    return e.JQ(n) * e.JQ(n) + e.JQ(n + 1) * e.JQ(n + 1) + e.JQ(n + 2) * e.JQ(n + 2)


def _eq3_rhs(sign: int) -> Evaluator:
    def rhs(e: Env, n: int, m: int) -> Quaternion:
        a, b = e.P.alpha, e.P.beta
        P2 = e.pow2
        weighted = e.J(n) * e.JQ(n) + e.J(n + 1) * e.JQ(n + 1) + e.J(n + 2) * e.JQ(n + 2)
        u_comb = e.U(n) + 2 * a * e.U(n + 1) + 4 * b * e.U(n + 2) + 8 * a * b * e.U(n + 3)
        scalar = (-3 * P2(2 * n + 2) * (1 + 4 * a + 16 * b + 64 * a * b)
                  + sign * P2(n + 2) * u_comb
                  - 2 * (1 + a + b + a * b))
        return (14 * weighted + e.const(scalar)) / 7
    return rhs


def _eq4_lhs(e: Env, n: int, m: int) -> Quaternion:
    return e.jQ(n) * e.jQ(n) - 9 * (e.JQ(n) * e.JQ(n))


def _eq4_head(e: Env, n: int) -> Quaternion:
    return 2 * e.j(n) * e.jQ(n) - 18 * e.J(n) * e.JQ(n)


def _eq4_rhs(e: Env, n: int, m: int) -> Quaternion:
    a, b = e.P.alpha, e.P.beta
    tail = e.pow2(n + 2) * (e.j(n - 3) + 2 * a * e.j(n - 2) + 4 * b * e.j(n - 1)
                            + 8 * a * b * e.j(n))
    return _eq4_head(e, n) - e.const(tail)


def _eq4_bullets() -> list[IdentitySpec]:
    P2 = Env.pow2
    # each entry: the term added inside 2{ j_n jQ_n - 9 J_n JQ_n + <term> }
    forms = {
        "real": ("-2^n (17 j_n + 7 j_(n-1) + 3 j_(n-2))",
                 lambda e, n: -P2(n) * (17 * e.j(n) + 7 * e.j(n - 1) + 3 * e.j(n - 2))),
        "split": ("+3 2^n (5 j_n + 3 j_(n-1) - j_(n-2))",
                  lambda e, n: 3 * P2(n) * (5 * e.j(n) + 3 * e.j(n - 1) - e.j(n - 2))),
        "split_semi": ("-2^(n+1) (j_(n-3) - 2 j_(n-2))",
                       lambda e, n: -P2(n + 1) * (e.j(n - 3) - 2 * e.j(n - 2))),
        "quarter": ("-2^(n+1) j_(n-3)", lambda e, n: -P2(n + 1) * e.j(n - 3)),
    }
    semi_printed = ("-2^(n+1) (j_n - j_(n-1))",
                    lambda e, n: -P2(n + 1) * (e.j(n) - e.j(n - 1)))
    semi_fixed = ("-2^(n+1) (j_(n-3) + 2 j_(n-2))",
                  lambda e, n: -P2(n + 1) * (e.j(n - 3) + 2 * e.j(n - 2)))

    def make(id_: str, name: str, text: str, f, **kw) -> IdentitySpec:
        return IdentitySpec(
            id_,
            f"jQ_n^2 - 9 JQ_n^2 = 2 {{ j_n jQ_n - 9 J_n JQ_n {text} }}",
            _eq4_lhs,
            (lambda f: lambda e, n, m: _eq4_head(e, n) + e.const(2 * f(e, n)))(f),
            scope="fixed", fixed=name, **kw)

    out = [make(f"eq4.{name}", name, text, f) for name, (text, f) in forms.items()]
    out.append(make("eq4.semi.as_printed", "semi", *semi_printed,
                    correction="2^(n+1)(j_n - j_(n-1)) -> 2^(n+1)(j_(n-3) + 2 j_(n-2)); "
                               "j_n - j_(n-1) equals j_(n-2) + 2 j_(n-3), with the weights swapped"))
    out.append(make("eq4.semi.corrected", "semi", *semi_fixed, variant=CORRECTED))
    return out


def _eq5_rhs(e: Env, n: int, m: int) -> Fraction:
    a, b = e.P.alpha, e.P.beta
    P2 = e.pow2
    V = e.V
    return (P2(2 * n + 2) * (1 + 4 * a + 16 * b + 64 * a * b)
            - P2(n + 2) * ((1 + 8 * a * b - 4 * b) * V(n) + (2 * a - 4 * b) * V(n + 1))
            + (1 + a * b) * V(n) ** 2 + a * V(n + 1) ** 2 + b * V(n + 2) ** 2) / 49


def _norm_direct(e: Env, n: int, m: int) -> Fraction:
    """N(JQ_n) read off the scalar part of JQ_n conj(JQ_n)."""
    q = e.JQ(n)
    prod = q * q.conj()
    return prod.r  # type: ignore[return-value]


def _nr_direct(e: Env, n: int, m: int) -> Fraction:
    return abs(_norm_direct(e, n, m))


def _eq5_bullets() -> list[IdentitySpec]:
    P2 = Env.pow2
    forms = {
        "real": ("(85 2^(2(n+1)) - 2^(n+2)(5 V_n - 2 V_(n+1)) + V_n^2 + 14)/49",
                 lambda e, n: (85 * P2(2 * n + 2) - P2(n + 2) * (5 * e.V(n) - 2 * e.V(n + 1))
                               + e.V(n) ** 2 + 14) / 49),
        "split": ("(-75 2^(2(n+1)) - 3 2^(n+2)(2 V_(n+1) - V_n) + V_(n+1)^2 - V_(n+2)^2)/49",
                  lambda e, n: (-75 * P2(2 * n + 2) - 3 * P2(n + 2) * (2 * e.V(n + 1) - e.V(n))
                                + e.V(n + 1) ** 2 - e.V(n + 2) ** 2) / 49),
        "semi": ("(5 2^(2(n+1)) - 2^(n+2)(V_n + 2 V_(n+1)) + V_n^2 + V_(n+1)^2)/49",
                 lambda e, n: (5 * P2(2 * n + 2) - P2(n + 2) * (e.V(n) + 2 * e.V(n + 1))
                               + e.V(n) ** 2 + e.V(n + 1) ** 2) / 49),
        "split_semi": ("(-3 2^(2(n+1)) - 2^(n+2)(V_n - 2 V_(n+1)) + V_n^2 - V_(n+1)^2)/49",
                       lambda e, n: (-3 * P2(2 * n + 2) - P2(n + 2) * (e.V(n) - 2 * e.V(n + 1))
                                     + e.V(n) ** 2 - e.V(n + 1) ** 2) / 49),
        "quarter": ("(2^(2(n+1)) - 2^(n+2) V_n + V_n^2)/49",
                    lambda e, n: (P2(2 * n + 2) - P2(n + 2) * e.V(n) + e.V(n) ** 2) / 49),
    }
    return [
        IdentitySpec(f"eq5.{name}", f"N(JQ_n) = {text}", _norm_direct,
                     (lambda f: lambda e, n, m: f(e, n))(f), scope="fixed", fixed=name,
                     note="compared with the signed norm JQ_n conj(JQ_n)")
        for name, (text, f) in forms.items()
    ]


def _t1_rhs(e: Env, n: int, m: int) -> Fraction:
    lin, c = {0: (-64, 18), 1: (68, 23), 2: (-4, 15)}[n % 3]
    return (340 * e.pow2(2 * n) + lin * e.pow2(n) + c) / 49


def _binet_JQ(e: Env, n: int, m: int) -> Quaternion:
    return (e.pow2(n + 1) * e.hats.hat2 - e.VQ(n)) / 7


def _binet_jQ(e: Env, n: int, m: int) -> Quaternion:
    return (e.pow2(n + 3) * e.hats.hat2 + 3 * e.VQ(n)) / 7


def _p10_lhs(e: Env, n: int, m: int) -> Quaternion:
    return e.JQ(m) * e.JQ(n + 1) - e.JQ(m + 1) * e.JQ(n)


def _p10_rhs(e: Env, n: int, m: int) -> Quaternion:
    hat2 = e.hats.hat2
    w12, w21 = e.hat_products  # type: ignore[attr-defined]
    first = e.pow2(m + 1) * (hat2 * e.UQ(n + 1)) - e.pow2(n + 1) * (e.UQ(m + 1) * hat2)
    # (sqrt3/3) i = (w1 - w2)/3
    isq3_over_3 = (e.omega_pow(1, 1) - e.omega_pow(2, 1)) / 3
    cyc = e.omega_pow(1, m - n) * w12 - e.omega_pow(2, m - n) * w21
    total = (first - isq3_over_3 * cyc) / 7
    return total.to_rational()


def _p11_lhs(e: Env, n: int, m: int) -> Quaternion:
    return e.JQ(n + 1) * e.JQ(n + 1) - e.JQ(n + 2) * e.JQ(n)


def _p11_head(e: Env, n: int) -> Quaternion:
    hat2 = e.hats.hat2
    return e.pow2(n + 1) * (2 * (hat2 * e.UQ(n + 1)) - e.UQ(n + 2) * hat2)


def _p11_rhs(e: Env, n: int, m: int) -> Quaternion:
    a, b = e.P.alpha, e.P.beta
    const = (e.quat(2, -1, -1, 2) - e.const(1 + a + b + a * b) + e.quat(0, b, a, 1))
    return (_p11_head(e, n) + const) / 7


def _p11_bullets() -> list[IdentitySpec]:
    printed = {
        "real": (-2, 0, 0, 3),
        "split": (2, 0, -2, 3),
        "semi": (0, -1, 0, 3),
        "split_semi": (2, -1, -2, 3),
        "quarter": (-1, 0, 0, 3),
    }
    fixed = {"split": (2, -2, 0, 3), "quarter": (1, -1, -1, 3)}

    def text(c: tuple) -> str:
        parts = []
        for coef, unit in zip(c, ("", "e1", "e2", "e3")):
            if coef:
                parts.append(f"{coef:+d}{unit}")
        return " ".join(parts)

    def make(id_: str, name: str, c: tuple, **kw) -> IdentitySpec:
        return IdentitySpec(
            id_,
            f"JQ_(n+1)^2 - JQ_(n+2) JQ_n = (1/7){{ 2^(n+1)(2 hat2 UQ_(n+1) - UQ_(n+2) hat2) {text(c)} }}",
            _p11_lhs,
            (lambda c: lambda e, n, m: (_p11_head(e, n) + e.quat(*c)) / 7)(c),
            scope="fixed", fixed=name, **kw)

    out = []
    for name, c in printed.items():
        if name in fixed:
            out.append(make(f"p11.{name}.as_printed", name, c,
                            correction=f"constant {text(c)} -> {text(fixed[name])}"))
            out.append(make(f"p11.{name}.corrected", name, fixed[name], variant=CORRECTED))
        else:
            out.append(make(f"p11.{name}", name, c))
    return out


def _invertible_pair(e: Env, n: int, m: int) -> bool:
    return e.JQ(n).norm() != 0 and e.jQ(n).norm() != 0


def _invertible(e: Env, n: int, m: int) -> bool:
    return e.JQ(n).norm() != 0


def _quaternion_entries() -> list[IdentitySpec]:
    out = [
        IdentitySpec("eq1", "2 JQ_n + JQ_(n+1) + JQ_(n+2) = JQ_(n+3)",
                     lambda e, n, m: 2 * e.JQ(n) + e.JQ(n + 1) + e.JQ(n + 2),
                     lambda e, n, m: e.JQ(n + 3)),
        IdentitySpec("eq2", "JQ_n - e1 JQ_(n+1) - e2 JQ_(n+2) - e3 JQ_(n+3) = "
                            "(1 + 2b + 10ab) J_n + (3b + 9ab) J_(n+1) + (a + 2b + 9ab) J_(n+2)",
                     _eq2_lhs, _eq2_rhs),
    ]
    out += _eq2_bullets()
    eq3_text = ("JQ_n^2 + JQ_(n+1)^2 + JQ_(n+2)^2 = (1/7){ 14 (J_n JQ_n + J_(n+1) JQ_(n+1) + "
                "J_(n+2) JQ_(n+2)) - 3 2^(2(n+1)) (1 + 4a + 16b + 64ab) {sign} 2^(n+2) "
                "(U_n + 2a U_(n+1) + 4b U_(n+2) + 8ab U_(n+3)) - 2 (1 + a + b + ab) }")
    out += [
        IdentitySpec("eq3.as_printed", eq3_text.replace("{sign}", "-"),
                     lambda e, n, m: _sum_sq(e, n), _eq3_rhs(-1),
                     correction="the U-term coefficient '-.' is read as -1; "
                                "the consistent sign is +: +2^(n+2)(U_n + ...)"),
        IdentitySpec("eq3.corrected", eq3_text.replace("{sign}", "+"),
                     lambda e, n, m: _sum_sq(e, n), _eq3_rhs(+1), variant=CORRECTED),
        IdentitySpec("eq4", "jQ_n^2 - 9 JQ_n^2 = 2 j_n jQ_n - 18 J_n JQ_n - 2^(n+2) "
                            "(j_(n-3) + 2a j_(n-2) + 4b j_(n-1) + 8ab j_n)",
                     _eq4_lhs, _eq4_rhs),
    ]
    out += _eq4_bullets()
    eq5_text = ("{lhs}(JQ_n) = (1/49){ 2^(2(n+1)) (1 + 4a + 16b + 64ab) - 2^(n+2) "
                "((1 + 8ab - 4b) V_n + (2a - 4b) V_(n+1)) + (1 + ab) V_n^2 + a V_(n+1)^2 "
                "+ b V_(n+2)^2 }")
    out += [
        IdentitySpec("eq5.as_printed", eq5_text.replace("{lhs}", "Nr"), _nr_direct, _eq5_rhs,
                     correction="Nr = |JQ conj(JQ)| -> N = JQ conj(JQ) (no absolute value); "
                                "the right side is negative whenever the norm form is"),
        IdentitySpec("eq5.corrected", eq5_text.replace("{lhs}", "N"), _norm_direct, _eq5_rhs,
                     variant=CORRECTED),
    ]
    out += _eq5_bullets()
    out += [
        IdentitySpec("t1", "Nr(JQ_n) = (1/49)(340 2^(2n) + {-64, 68, -4} 2^n + {18, 23, 15}) "
                           "for n = 0, 1, 2 (mod 3)",
                     _nr_direct, _t1_rhs, scope="fixed", fixed="real"),
        IdentitySpec("th4.JQ", "JQ_n = (2^(n+1) hat2 - VQ_n)/7",
                     lambda e, n, m: e.JQ(n), _binet_JQ),
        IdentitySpec("th4.jQ", "jQ_n = (2^(n+3) hat2 + 3 VQ_n)/7",
                     lambda e, n, m: e.jQ(n), _binet_jQ),
        IdentitySpec("q1", "VQ_n = (A w1^n hat(w1) - B w2^n hat(w2))/(w1 - w2) = "
                           "2-3e1+e2+2e3, -3+e1+2e2-3e3, 1+2e1-3e2+e3 for n = 0, 1, 2 (mod 3)",
                     lambda e, n, m: e.VQ(n), lambda e, n, m: e.VQ_cyclotomic(n),
                     eisenstein=True, domain="all"),
        IdentitySpec("q1.rec", "VQ_(n+2) = -VQ_(n+1) - VQ_n",
                     lambda e, n, m: e.VQ(n + 2), lambda e, n, m: -e.VQ(n + 1) - e.VQ(n)),
        IdentitySpec("p10", "JQ_m JQ_(n+1) - JQ_(m+1) JQ_n = (1/7){ 2^(m+1) hat2 UQ_(n+1) - "
                            "2^(n+1) UQ_(m+1) hat2 - (sqrt3/3) i (w1^(m-n) hat(w1) hat(w2) - "
                            "w2^(m-n) hat(w2) hat(w1)) }",
                     _p10_lhs, _p10_rhs, variables=("n", "m"), domain="all", eisenstein=True,
                     note="(sqrt3/3) i evaluated as (w1 - w2)/3; result certified rational"),
        IdentitySpec("p11", "JQ_(n+1)^2 - JQ_(n+2) JQ_n = (1/7){ 2^(n+1)(2 hat2 UQ_(n+1) - "
                            "UQ_(n+2) hat2) + (2 - e1 - e2 + 2e3) - (1 + a + b + ab) + "
                            "(b e1 + a e2 + e3) }",
                     _p11_lhs, _p11_rhs),
    ]
    out += _p11_bullets()
    out += [
        IdentitySpec("m1.decompose", "JQ_n jQ_n = J_n j_n - h(V_JQ, V_jQ) + J_n V_jQ + j_n V_JQ "
                                     "+ V_JQ x V_jQ with h(u,v) = a u1v1 + b u2v2 + ab u3v3, "
                                     "u x v = b(u2v3-u3v2)e1 + a(u3v1-u1v3)e2 + (u1v2-u2v1)e3",
                     lambda e, n, m: e.JQ(n) * e.jQ(n),
                     lambda e, n, m: recompose(e.JQ(n), e.jQ(n))),
        IdentitySpec("s2.involution", "conj(conj(JQ_n)) = JQ_n",
                     lambda e, n, m: e.JQ(n).conj().conj(), lambda e, n, m: e.JQ(n)),
        IdentitySpec("s2.additive", "conj(JQ_n + jQ_n) = conj(JQ_n) + conj(jQ_n)",
                     lambda e, n, m: (e.JQ(n) + e.jQ(n)).conj(),
                     lambda e, n, m: e.JQ(n).conj() + e.jQ(n).conj()),
        IdentitySpec("s2.antihom", "conj(JQ_n jQ_n) = conj(jQ_n) conj(JQ_n)",
                     lambda e, n, m: (e.JQ(n) * e.jQ(n)).conj(),
                     lambda e, n, m: e.jQ(n).conj() * e.JQ(n).conj()),
        IdentitySpec("s3.two_sided", "JQ_n conj(JQ_n) = conj(JQ_n) JQ_n",
                     lambda e, n, m: e.JQ(n) * e.JQ(n).conj(),
                     lambda e, n, m: e.JQ(n).conj() * e.JQ(n)),
        IdentitySpec("s3.norm_form", "JQ_n conj(JQ_n) = J_n^2 + a J_(n+1)^2 + b J_(n+2)^2 + "
                                     "ab J_(n+3)^2",
                     lambda e, n, m: e.JQ(n) * e.JQ(n).conj(),
                     lambda e, n, m: e.const(e.J(n) ** 2 + e.P.alpha * e.J(n + 1) ** 2
                                             + e.P.beta * e.J(n + 2) ** 2
                                             + e.P.alpha * e.P.beta * e.J(n + 3) ** 2)),
        IdentitySpec("s4.law", "(JQ_n jQ_n)^-1 = jQ_n^-1 JQ_n^-1",
                     lambda e, n, m: q_inv(e.JQ(n) * e.jQ(n)),
                     lambda e, n, m: q_inv(e.jQ(n)) * q_inv(e.JQ(n)),
                     applies=_invertible_pair,
                     note="instances with a zero norm are not counted"),
        IdentitySpec("s4.inverse.as_printed", "JQ_n (conj(JQ_n) / Nr(JQ_n)) = 1",
                     lambda e, n, m: e.JQ(n) * (e.JQ(n).conj() / q_norm(e.JQ(n), "absolute")),
                     lambda e, n, m: e.const(1), applies=_invertible,
                     correction="divide by the signed norm N(JQ_n) instead of Nr = |N(JQ_n)|"),
        IdentitySpec("s4.inverse.corrected", "JQ_n (conj(JQ_n) / N(JQ_n)) = 1",
                     lambda e, n, m: e.JQ(n) * (e.JQ(n).conj() / e.JQ(n).norm()),
                     lambda e, n, m: e.const(1), applies=_invertible, variant=CORRECTED),
    ]
    return out


_CATALOG: Optional[tuple[IdentitySpec, ...]] = None


def catalog() -> tuple[IdentitySpec, ...]:
    global _CATALOG
    if _CATALOG is None:
        entries = tuple(_scalar_entries() + _quaternion_entries())
        ids = [s.id for s in entries]
        dupes = {i for i in ids if ids.count(i) > 1}
        if dupes:
            raise AssertionError(f"duplicate identity ids: {sorted(dupes)}")
        _CATALOG = entries
    return _CATALOG


def lookup(identity_id: str) -> IdentitySpec:
    for spec in catalog():
        if spec.id == identity_id:
            return spec
    raise KeyError(f"unknown identity {identity_id!r}")


def sibling(spec: IdentitySpec) -> Optional[IdentitySpec]:
    """The other variant of a paired entry, if any."""
    if spec.base == spec.id:
        return None
    other = CORRECTED if spec.variant == AS_PRINTED else AS_PRINTED
    try:
        return lookup(f"{spec.base}.{other}")
    except KeyError:
        return None


def catalog_hash() -> str:
    h = hashlib.sha256()
    for s in catalog():
        row = "|".join([s.id, s.variant, s.scope, s.fixed or "", s.domain,
                        ",".join(s.variables), s.statement, s.correction or ""])
        h.update(row.encode("utf-8") + b"\n")
    return h.hexdigest()
