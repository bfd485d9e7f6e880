from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from jacquat.exactnum import Eisenstein
from jacquat.quaternion import PRESETS, AlgebraParams, Quaternion

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
small_ints = st.integers(min_value=-20, max_value=20)
eisensteins = st.builds(Eisenstein, rationals, rationals)
nonzero_eisensteins = eisensteins.filter(bool)

presets = st.sampled_from(sorted(PRESETS.values(), key=lambda p: p.preset_name))
random_algebras = st.builds(
    AlgebraParams,
    st.fractions(min_value=-7, max_value=7, max_denominator=5),
    st.fractions(min_value=-7, max_value=7, max_denominator=5),
)
algebras = st.one_of(presets, random_algebras)


def quaternions(params: AlgebraParams, coeffs=rationals):
    return st.builds(Quaternion, coeffs, coeffs, coeffs, coeffs, st.just(params))


def quaternion_pairs(coeffs=rationals):
    return algebras.flatmap(
        lambda p: st.tuples(quaternions(p, coeffs), quaternions(p, coeffs))
    )


def quaternion_triples(coeffs=rationals):
    return algebras.flatmap(
        lambda p: st.tuples(quaternions(p, coeffs), quaternions(p, coeffs), quaternions(p, coeffs))
    )


def third_order(seeds: tuple[int, int, int], count: int) -> list[int]:
    """Plain list iteration of X_{n+3} = X_{n+2} + X_{n+1} + 2 X_n."""
    xs = list(seeds)
    while len(xs) < count:
        xs.append(xs[-1] + xs[-2] + 2 * xs[-3])
    return xs[:count]


J3_TERMS = third_order((0, 1, 1), 600)
JL3_TERMS = third_order((2, 1, 5), 600)


def table_product(p: Quaternion, q: Quaternion) -> Quaternion:
    """Bilinear expansion over the unit multiplication table."""
    a, b = p.params.alpha, p.params.beta
    # unit_prod[s][t] = (coefficient, index) of e_s * e_t
    unit_prod = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-a, 0), (1, 3), (-a, 2)],
        [(1, 2), (-1, 3), (-b, 0), (b, 1)],
        [(1, 3), (a, 2), (-b, 1), (-a * b, 0)],
    ]
    out = [Fraction(0)] * 4
    for s, ps in enumerate(p.components):
        for t, qt in enumerate(q.components):
            c, idx = unit_prod[s][t]
            out[idx] += c * ps * qt
    return Quaternion(*out, p.params)


# acceptance bookkeeping: criterion number -> [(part, passed, seconds)]
ACCEPTANCE: dict[int, list[tuple[str, bool, float]]] = {}
ACCEPTANCE_TITLES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        ok = all(p for _, p, _ in parts)
        seconds = sum(s for _, _, s in parts)
        failed = [name for name, p, _ in parts if not p]
        detail = f"  failing: {', '.join(failed)}" if failed else ""
        tr.write_line(
            f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  "
            f"{ACCEPTANCE_TITLES.get(number, '')} ({seconds:.2f}s){detail}"
        )
