"""Acceptance criteria, one test (or a few named parts) per criterion.

A line per criterion is printed in the terminal summary; run with
``pytest tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from dataclasses import replace
from fractions import Fraction

import pytest

from jacquat.identities import FastEnv, VerifyConfig, check, lookup, random_params, verify_all
from jacquat.identities.report import to_json
from jacquat.quaternion import PRESETS, AlgebraParams, Quaternion, q_conj, q_inv, q_norm, recompose
from jacquat.quatseq import jlq3, jq3, quat_binet
from jacquat.sequences import SeqKind, binet_eval, seq_closed, seq_recurrence

from conftest import ACCEPTANCE, ACCEPTANCE_TITLES, J3_TERMS, JL3_TERMS, table_product

PRESET_LIST = list(PRESETS.values())
RANDOM8 = random_params(8, seed=0)

ACCEPTANCE_TITLES.update({
    1: "closed forms equal naive recurrence, six sequences, n <= 512, < 1 s",
    2: "Binet evaluation certified rational and equal to recurrence, n <= 256, < 1 s",
    3: "scalar identity suite exact for n <= 128, spot values",
    4: "quaternion recurrence and e-weighted combination, presets and random algebras",
    5: "quaternion Binet form equals direct construction; VQ recurrence",
    6: "norm formula equals directly computed Nr; closed norm table for (1,1)",
    7: "algebra laws on 5000 + 1000 randomized exact cases, < 5 s",
    8: "printed sum-of-squares formula flagged with exact counterexample; corrected passes",
    9: "jQ^2 - 9 JQ^2 formula passes for all presets; (1,1), n=0 instance",
    10: "JQ_(n+1)^2 - JQ_(n+2) JQ_n identity and its preset constants; "
        "JQ_m JQ_(n+1) - JQ_(m+1) JQ_n identity classified",
    11: "serial and parallel verification produce byte-identical JSON",
    12: "full default verification suite within 60 s",
})


class _Part:
    seconds: float | None = None


@contextmanager
def criterion(number: int, part: str = "main"):
    t0 = time.perf_counter()
    record = _Part()
    ok = False
    try:
        yield record
        ok = True
    finally:
        seconds = record.seconds if record.seconds is not None else time.perf_counter() - t0
        ACCEPTANCE.setdefault(number, []).append((part, ok, seconds))


def passes(identity_id, params, n_range, m_range=None):
    out = check(identity_id, params, n_range, m_range)
    assert out.passed, (identity_id, str(params), out.counterexample)
    return out


# ---------------------------------------------------------------- 1, 2

def test_c01_closed_form_matches_recurrence():
    seq_closed.cache_clear()
    with criterion(1):
        t0 = time.perf_counter()
        for kind in SeqKind:
            for n in range(513):
                assert seq_closed(kind, n) == seq_recurrence(kind, n), (kind, n)
        assert time.perf_counter() - t0 < 1.0


def test_c02_binet_certification():
    with criterion(2):
        t0 = time.perf_counter()
        for kind in (SeqKind.J3, SeqKind.JL3, SeqKind.V3):
            for n in range(257):
                assert binet_eval(kind, n) == seq_recurrence(kind, n), (kind, n)
        assert time.perf_counter() - t0 < 1.0


# ---------------------------------------------------------------- 3

SCALAR_IDS = ["e4", "e5", "ec5", "e6", "e7", "e8", "e9", "e10", "e11", "e12"]


def test_c03_scalar_identities():
    with criterion(3):
        for i in SCALAR_IDS:
            out = passes(i, None, (0, 128))
            assert out.instances == 129
            if i in ("e5", "e9", "e12"):
                assert out.negative_index_used, i
        J, j = J3_TERMS, JL3_TERMS
        # j_0^2 + 3 J_3 j_3 = 4^3 and j_3^2 - 9 J_3^2 = 2^5 j_0
        assert j[0] ** 2 + 3 * J[3] * j[3] == 4 + 3 * 2 * 10 == 64 == 4**3
        assert j[3] ** 2 - 9 * J[3] ** 2 == 100 - 36 == 64 == 2**5 * j[0]
        env = FastEnv(None)
        assert lookup("e9").lhs(env, 3, 0) == lookup("e9").rhs(env, 3, 0) == 64
        assert lookup("e12").lhs(env, 3, 0) == lookup("e12").rhs(env, 3, 0) == 64


# ---------------------------------------------------------------- 4

def test_c04_quaternion_recurrence_and_weighted_combination():
    with criterion(4):
        for p in PRESET_LIST:
            passes("eq1", p, (0, 64))
            passes(f"eq2.{p.preset_name}", p, (0, 64))
        for p in PRESET_LIST + RANDOM8:
            passes("eq2", p, (0, 64))
        real = PRESETS["real"]
        one, e1, e2, e3 = (Quaternion(*(1 if s == t else 0 for t in range(4)), real)
                           for s in range(4))
        q = [Quaternion(*J3_TERMS[n : n + 4], real) for n in range(1, 5)]
        lhs = q[0] - table_product(e1, q[1]) - table_product(e2, q[2]) - table_product(e3, q[3])
        assert lhs == 49 * one
        assert 37 * J3_TERMS[1] + 12 * JL3_TERMS[1] == 49
        env = FastEnv(real)
        assert lookup("eq2").lhs(env, 1, 0) == lookup("eq2").rhs(env, 1, 0) == 49 * one
        assert lookup("eq2.real").rhs(env, 1, 0) == 49 * one


# ---------------------------------------------------------------- 5

def test_c05_quaternion_binet():
    with criterion(5):
        for p in PRESET_LIST:
            for n in range(65):
                assert quat_binet(p, n, "JQ") == Quaternion(*J3_TERMS[n : n + 4], p)
                assert quat_binet(p, n, "jQ") == Quaternion(*JL3_TERMS[n : n + 4], p)
            passes("th4.JQ", p, (0, 64))
            passes("th4.jQ", p, (0, 64))
            passes("q1", p, (0, 32))
            passes("q1.rec", p, (0, 32))
        assert quat_binet(PRESETS["real"], 0).components == (0, 1, 1, 2)


# ---------------------------------------------------------------- 6

def direct_norm(q: Quaternion) -> Fraction:
    prod = table_product(q, q_conj(q))
    assert prod.vector_part == (0, 0, 0)
    return prod.r


def test_c06_norm_formula_equals_nr():
    """The formula compared with Nr = |q conj(q)| on every algebra."""
    with criterion(6, "formula equals Nr"):
        rhs = lookup("eq5.as_printed").rhs
        bad = []
        for p in PRESET_LIST + RANDOM8:
            env = FastEnv(p)
            for n in range(65):
                value = rhs(env, n, 0)
                if value != abs(direct_norm(Quaternion(*J3_TERMS[n : n + 4], p))):
                    bad.append((str(p), n, str(value)))
                    break
        assert not bad, f"formula differs from Nr at {bad}"


def test_c06_norm_formula_equals_signed_norm():
    with criterion(6, "formula equals signed N and |formula| equals Nr"):
        rhs = lookup("eq5.corrected").rhs
        for p in PRESET_LIST + RANDOM8:
            env = FastEnv(p)
            for n in range(65):
                q = Quaternion(*J3_TERMS[n : n + 4], p)
                value = rhs(env, n, 0)
                assert value == direct_norm(q) == q_norm(q)
                assert abs(value) == q_norm(q, "absolute")
            passes("eq5.corrected", p, (0, 64))
        for p in PRESET_LIST:
            passes(f"eq5.{p.preset_name}", p, (0, 64))


def test_c06_real_norm_table():
    with criterion(6, "(1,1) norm table"):
        real = PRESETS["real"]
        passes("t1", real, (0, 64))
        t1 = lookup("t1").rhs
        env = FastEnv(real)
        assert t1(env, 0, 0) == 6 == direct_norm(jq3(real, 0))
        assert t1(env, 1, 0) == 31 == direct_norm(jq3(real, 1))


# ---------------------------------------------------------------- 7

def _rand_q(rng: random.Random, p: AlgebraParams) -> Quaternion:
    return Quaternion(*(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4)), p)


def _laws(p: Quaternion, q: Quaternion) -> None:
    pq = p * q
    np_, nq = q_norm(p), q_norm(q)
    assert q_norm(pq) == np_ * nq
    assert q_conj(pq) == q_conj(q) * q_conj(p)
    assert q_conj(q_conj(p)) == p
    assert recompose(p, q) == pq
    if np_ != 0 and nq != 0:
        p_inv, q_inv_ = q_inv(p), q_inv(q)
        one = Quaternion.one(p.params)
        assert p * p_inv == one == p_inv * p
        assert q_inv(pq) == q_inv_ * p_inv


def test_c07_algebra_laws():
    with criterion(7):
        rng = random.Random(7)
        t0 = time.perf_counter()
        cases = 0
        for p in PRESET_LIST:
            for _ in range(1000):
                _laws(_rand_q(rng, p), _rand_q(rng, p))
                cases += 1
        for _ in range(100):
            alg = AlgebraParams(Fraction(rng.randint(-7, 7), rng.randint(1, 5)),
                                Fraction(rng.randint(-7, 7), rng.randint(1, 5)))
            for _ in range(10):
                _laws(_rand_q(rng, alg), _rand_q(rng, alg))
                cases += 1
        assert cases == 6000
        assert time.perf_counter() - t0 < 5.0


# ---------------------------------------------------------------- 8

def test_c08_sum_of_squares_erratum():
    with criterion(8):
        real = PRESETS["real"]
        lhs = sum((table_product(q, q) for q in (jq3(real, n) for n in range(3))),
                  Quaternion.zero(real))
        assert lhs.components == (-144, 6, 14, 28)
        out = check("eq3.as_printed", real, (0, 0))
        cx = out.counterexample
        assert not out.passed and cx.n == 0 and cx.confirmed
        assert cx.lhs[0] == "-144" and cx.rhs[0] == "-992/7"
        assert cx.lhs[1:] == cx.rhs[1:] == ["6", "14", "28"]
        for p in PRESET_LIST:
            passes("eq3.corrected", p, (0, 64))


# ---------------------------------------------------------------- 9

def test_c09_lucas_square_formula():
    with criterion(9):
        for p in PRESET_LIST:
            passes("eq4", p, (0, 64))
        real = PRESETS["real"]
        env = FastEnv(real)
        spec = lookup("eq4")
        jQ, JQ = jlq3(real, 0), jq3(real, 0)
        direct = table_product(jQ, jQ) - 9 * table_product(JQ, JQ)
        assert direct.components == (-68, 4, 20, 40)
        assert spec.lhs(env, 0, 0) == spec.rhs(env, 0, 0) == direct


# ---------------------------------------------------------------- 10

P11_BULLETS = {
    "real": "p11.real",
    "split": "p11.split.as_printed",
    "semi": "p11.semi",
    "split_semi": "p11.split_semi",
    "quarter": "p11.quarter.as_printed",
}


def test_c10_square_difference_instance():
    with criterion(10, "(1,1), n=0 instance"):
        real = PRESETS["real"]
        q0, q1, q2 = (jq3(real, n) for n in range(3))
        direct = table_product(q1, q1) - table_product(q2, q0)
        assert direct.components == (-4, 0, -2, 11)
        env = FastEnv(real)
        spec = lookup("p11")
        assert spec.lhs(env, 0, 0) == spec.rhs(env, 0, 0) == direct
        for p in PRESET_LIST + RANDOM8:
            passes("p11", p, (0, 64))
        a = b = 1
        constant = (2 - (1 + a + b + a * b), -1 + b, -1 + a, 2 + 1)
        assert constant == (-2, 0, 0, 3)


@pytest.mark.parametrize("name", list(P11_BULLETS))
def test_c10_preset_constants_reproduce(name):
    with criterion(10, f"printed {name} constant"):
        passes(P11_BULLETS[name], PRESETS[name], (0, 64))


def test_c10_index_shift_classification():
    with criterion(10, "index-shift identity classified"):
        for p in PRESET_LIST:
            first = check("p10", p, (0, 32), (0, 32))
            again = check("p10", p, (0, 32), (0, 32))
            assert first == again
            assert first.instances == 33 * 33
            if not first.passed:
                assert first.counterexample.confirmed


# ---------------------------------------------------------------- 11, 12

@pytest.fixture(scope="module")
def default_run():
    t0 = time.perf_counter()
    report = verify_all(replace(VerifyConfig(), workers=1))
    return report, time.perf_counter() - t0


def test_c12_default_suite_time(default_run):
    with criterion(12) as record:
        report, seconds = default_run
        record.seconds = seconds
        assert seconds <= 60.0
        assert report.exit_code == 0
        lines = {(o.id, o.params.preset_name if o.params else None): o for o in report.outcomes}
        assert lines[("eq3.as_printed", "real")].label == "erratum candidate"
        assert lines[("eq3.corrected", "real")].passed


def test_c11_parallel_determinism(default_run):
    with criterion(11):
        serial, _ = default_run
        parallel = verify_all(replace(VerifyConfig(), workers=2))
        assert to_json(serial) == to_json(parallel)
