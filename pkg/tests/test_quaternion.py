from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from jacquat.exactnum import OMEGA, Eisenstein
from jacquat.quaternion import (
    PRESETS,
    AlgebraMismatch,
    AlgebraParams,
    NotInvertible,
    Quaternion,
    UnsupportedMode,
    basis,
    preset,
    q_conj,
    q_decompose,
    q_inv,
    q_linear,
    q_mul,
    q_norm,
    q_scale,
    recompose,
)

from conftest import (
    algebras,
    quaternion_pairs,
    quaternion_triples,
    quaternions,
    rationals,
    table_product,
)


def test_presets():
    assert PRESETS["real"].key == (1, 1)
    assert PRESETS["split"].key == (1, -1)
    assert PRESETS["semi"].key == (1, 0)
    assert PRESETS["split_semi"].key == (-1, 0)
    assert PRESETS["quarter"].key == (0, 0)
    assert preset("Split-Semi") is PRESETS["split_semi"]
    with pytest.raises(KeyError):
        preset("octonion")


def test_params_recognize_presets():
    assert AlgebraParams(1, -1).preset_name == "split"
    assert AlgebraParams(Fraction(1, 2), 3).preset_name is None
    assert str(PRESETS["real"]) == "H(1,1) [real]"
    assert AlgebraParams(1, 1) == PRESETS["real"]


@pytest.mark.parametrize("name", list(PRESETS))
def test_unit_table(name):
    p = PRESETS[name]
    a, b = p.alpha, p.beta
    one, e1, e2, e3 = basis(p)
    assert e1 * e1 == -a * one
    assert e2 * e2 == -b * one
    assert e3 * e3 == -a * b * one
    assert e1 * e2 == e3 and e2 * e1 == -e3
    assert e2 * e3 == b * e1 and e3 * e2 == -b * e1
    assert e3 * e1 == a * e2 and e1 * e3 == -a * e2
    assert e1 * e2 * e3 == -a * b * one


@given(quaternion_pairs())
def test_product_matches_table_expansion(pq):
    p, q = pq
    assert q_mul(p, q) == table_product(p, q)


@given(quaternion_triples())
def test_associative_and_distributive(pqr):
    p, q, r = pqr
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r


@given(quaternion_pairs())
def test_norm_is_multiplicative(pq):
    p, q = pq
    assert q_norm(p * q) == q_norm(p) * q_norm(q)


@given(quaternion_pairs())
def test_conjugation(pq):
    p, q = pq
    assert q_conj(q_conj(p)) == p
    assert q_conj(p + q) == q_conj(p) + q_conj(q)
    assert q_conj(p * q) == q_conj(q) * q_conj(p)


@given(quaternion_pairs())
def test_norm_is_q_times_conj(pq):
    p, _ = pq
    n = q_norm(p)
    assert p * q_conj(p) == Quaternion.scalar(n, p.params)
    assert q_conj(p) * p == Quaternion.scalar(n, p.params)
    assert q_norm(p, "absolute") == abs(n)


@given(quaternion_pairs())
def test_inverse(pq):
    p, _ = pq
    assume(q_norm(p) != 0)
    one = Quaternion.one(p.params)
    assert p * q_inv(p) == one
    assert q_inv(p) * p == one
    assert p ** -2 * p ** 2 == one


@given(quaternion_pairs())
def test_decomposition_recomposes_product(pq):
    p, q = pq
    assert recompose(p, q) == p * q
    h, cross = q_decompose(p, q)
    assert cross.r == 0
    assert (p * q).r == p.r * q.r - h


def test_zero_norm_is_not_invertible():
    split = PRESETS["split"]
    q = Quaternion(1, 1, 0, 0, PRESETS["split_semi"])  # 1 - 1 = 0
    with pytest.raises(NotInvertible):
        q_inv(q)
    with pytest.raises(ZeroDivisionError):
        Quaternion(0, 0, 1, 0, PRESETS["quarter"]).inverse()
    assert q_norm(Quaternion(1, 0, 1, 0, split)) == 0


def test_mixed_algebras_rejected():
    with pytest.raises(AlgebraMismatch):
        Quaternion.one(PRESETS["real"]) + Quaternion.one(PRESETS["split"])
    with pytest.raises(AlgebraMismatch):
        Quaternion.one(PRESETS["real"]) * Quaternion.one(PRESETS["split"])


def test_absolute_norm_needs_rational_coefficients():
    q = Quaternion(OMEGA, 0, 0, 0, PRESETS["real"])
    assert q_norm(q) == OMEGA * OMEGA
    with pytest.raises(UnsupportedMode):
        q_norm(q, "absolute")
    with pytest.raises(UnsupportedMode):
        q_norm(Quaternion.one(PRESETS["real"]), "euclid")


@given(algebras.flatmap(lambda p: quaternions(p)), rationals)
def test_scalars_commute(q, c):
    assert c * q == q * c == q_scale(c, q)
    assert q_linear(q, q, "sub") == Quaternion.zero(q.params)
    assert q_linear(q, q, "add") == 2 * q


def test_eisenstein_coefficients():
    p = PRESETS["real"]
    q = Quaternion(1, OMEGA, OMEGA * OMEGA, 1, p)
    assert not q.is_rational()
    assert (q * q.coefficient_conj()).components != q.components
    sym = q + q.coefficient_conj()
    assert sym.is_rational()
    assert sym.to_rational() == Quaternion(2, -1, -1, 2, p)


@given(st.integers(min_value=0, max_value=8), algebras.flatmap(lambda p: quaternions(p)))
def test_power_matches_repeated_product(n, q):
    expected = Quaternion.one(q.params)
    for _ in range(n):
        expected = expected * q
    assert q ** n == expected


def test_components_are_exact():
    q = Quaternion(1, "1/3", Fraction(2, 4), Eisenstein(5), PRESETS["semi"])
    assert q.i == Fraction(1, 3) and q.j == Fraction(1, 2)
    assert str(q) == "(1, 1/3, 1/2, 5)"


def _as_eisenstein(q: Quaternion) -> Quaternion:
    return Quaternion(*(Eisenstein(c) for c in q.components), q.params)


@given(quaternion_pairs())
def test_rational_fast_path_matches_generic_path(pq):
    p, q = pq
    ep, eq = _as_eisenstein(p), _as_eisenstein(q)
    assert (ep * eq).to_rational() == p * q
    assert Eisenstein.coerce(q_norm(ep)).to_rational() == q_norm(p)
