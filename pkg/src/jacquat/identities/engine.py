from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from ..exactnum import NonRealCyclotomicValue
from ..quaternion import PRESETS, AlgebraParams, Quaternion, preset
from .catalog import AS_PRINTED, CORRECTED, IdentitySpec, Value, catalog, catalog_hash, lookup
from .env import Env, FastEnv, OracleEnv

__all__ = [
    "ConfigError",
    "ParamsOutOfScope",
    "Counterexample",
    "CheckOutcome",
    "VerifyConfig",
    "VerificationReport",
    "check",
    "verify_all",
    "random_params",
    "documented_errata",
    "format_value",
]

THREADS_ENV = "JACQUAT_THREADS"


class ConfigError(ValueError):
    pass


class ParamsOutOfScope(ValueError):
    pass


def format_value(v: object) -> Union[str, list[str]]:
    """Rationals as 'p/q' (bare integers), quaternions as four such strings."""
    if isinstance(v, Quaternion):
        return [str(c) for c in v.components]
    return str(v)


@dataclass(frozen=True)
class Counterexample:
    n: int
    m: Optional[int]
    lhs: Union[str, list[str]]
    rhs: Union[str, list[str]]
    confirmed: bool


@dataclass
class CheckOutcome:
    id: str
    variant: str
    params: Optional[AlgebraParams]
    instances: int
    failures: int
    counterexample: Optional[Counterexample]
    negative_index_used: bool
    label: Optional[str] = None

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def sort_key(self) -> tuple:
        p = (0,) if self.params is None else (1, self.params.alpha, self.params.beta)
        return (self.id, self.variant, p)


def _resolve_params(params: Union[None, str, AlgebraParams, tuple]) -> Optional[AlgebraParams]:
    if params is None or isinstance(params, AlgebraParams):
        return params
    if isinstance(params, str):
        return preset(params)
    a, b = params
    return AlgebraParams(Fraction(a), Fraction(b))


def _equal(lhs: Value, rhs: Value) -> bool:
    if isinstance(lhs, Quaternion) and not isinstance(rhs, Quaternion):
        return False
    return lhs == rhs


def _evaluate(spec: IdentitySpec, env: Env, n: int, m: int) -> tuple[Value, object, bool]:
    """(lhs, rhs, equal); a non-real cyclotomic right side counts as unequal."""
    lhs = spec.lhs(env, n, m)
    try:
        rhs = spec.rhs(env, n, m)
    except NonRealCyclotomicValue as exc:
        return lhs, f"non-real cyclotomic value {exc.value}", False
    return lhs, rhs, _equal(lhs, rhs)


def _confirm(spec: IdentitySpec, params: Optional[AlgebraParams], n: int, m: int,
             lhs: Value, rhs: object) -> bool:
    """Re-evaluate a failing instance through the table-free oracle path."""
    oracle = OracleEnv(params)
    o_lhs, o_rhs, equal = _evaluate(spec, oracle, n, m)
    if equal:
        return False
    same_lhs = format_value(o_lhs) == format_value(lhs)
    same_rhs = format_value(o_rhs) == format_value(rhs)
    return same_lhs and same_rhs


def _range(r: Optional[Sequence[int]], name: str) -> range:
    if r is None:
        raise ConfigError(f"{name} range is required")
    lo, hi = r
    if hi < lo:
        raise ConfigError(f"empty {name} range [{lo}, {hi}]")
    return range(lo, hi + 1)


def check(identity_id: str,
          params: Union[None, str, AlgebraParams, tuple] = None,
          n_range: Sequence[int] = (0, 0),
          m_range: Optional[Sequence[int]] = None) -> CheckOutcome:
    """Check one catalog entry exactly over inclusive index ranges.

    The first failing instance in (n, m) order becomes the counterexample and
    is re-verified through ``OracleEnv``.
    """
    spec = lookup(identity_id)
    algebra = _resolve_params(params)
    if not spec.in_scope(algebra):
        raise ParamsOutOfScope(f"{identity_id} is not defined for {algebra}")
    ns = _range(n_range, "n")
    if "m" in spec.variables:
        ms: Sequence[Optional[int]] = _range(m_range if m_range is not None else (0, 0), "m")
    else:
        ms = [None]
    if spec.domain == "n>=0" and (ns.start < 0 or any(m is not None and m < 0 for m in ms)):
        raise ConfigError(f"{identity_id} is stated for nonnegative indices only")

    env = FastEnv(algebra)
    instances = failures = 0
    cx: Optional[Counterexample] = None
    for n in ns:
        for m in ms:
            mm = 0 if m is None else m
            if spec.applies is not None and not spec.applies(env, n, mm):
                continue
            instances += 1
            lhs, rhs, equal = _evaluate(spec, env, n, mm)
            if equal:
                continue
            failures += 1
            if cx is None:
                cx = Counterexample(n, m, format_value(lhs), format_value(rhs),
                                    _confirm(spec, algebra, n, mm, lhs, rhs))
    return CheckOutcome(spec.id, spec.variant, algebra, instances, failures, cx,
                        env.negative_index_used)


# ---------------------------------------------------------------- suites

@dataclass(frozen=True)
class VerifyConfig:
    presets: tuple[str, ...] = tuple(PRESETS)
    random_params: int = 8
    n_min: int = 0
    n_max: int = 32
    m_min: int = 0
    m_max: int = 16
    seed: int = 0
    workers: Optional[int] = None

    def validate(self) -> None:
        if self.n_max < self.n_min:
            raise ConfigError(f"empty n range [{self.n_min}, {self.n_max}]")
        if self.m_max < self.m_min:
            raise ConfigError(f"empty m range [{self.m_min}, {self.m_max}]")
        if self.random_params < 0:
            raise ConfigError("random parameter count must be nonnegative")
        for name in self.presets:
            try:
                preset(name)
            except KeyError as exc:
                raise ConfigError(str(exc.args[0])) from None
        if not self.presets and not self.random_params:
            raise ConfigError("no algebras selected")
        if self.workers is not None and self.workers < 1:
            raise ConfigError("workers must be >= 1")

    def as_dict(self) -> dict:
        return {
            "presets": list(self.presets),
            "random_params": self.random_params,
            "n_range": [self.n_min, self.n_max],
            "m_range": [self.m_min, self.m_max],
            "seed": self.seed,
        }


def random_params(count: int, seed: int) -> list[AlgebraParams]:
    """Distinct random rational (alpha, beta) pairs, reproducible from the seed."""
    rng = random.Random(seed)
    seen: set = set()
    out: list[AlgebraParams] = []
    while len(out) < count:
        a = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
        b = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
        if (a, b) in seen:
            continue
        seen.add((a, b))
        out.append(AlgebraParams(a, b))
    return out


def documented_errata() -> frozenset[str]:
    """Identity ids whose printed form is known to fail (shipped as errata.txt)."""
    from importlib import resources

    text = resources.files(__package__).joinpath("errata.txt").read_text(encoding="utf-8")
    ids = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            ids.append(line)
    return frozenset(ids)


@dataclass
class VerificationReport:
    tool_version: str
    catalog_hash: str
    config: dict
    outcomes: list[CheckOutcome]
    errata: frozenset[str] = field(default_factory=frozenset)

    @property
    def unexpected(self) -> list[CheckOutcome]:
        return [o for o in self.outcomes if not o.passed and o.id not in self.errata]

    def summary(self) -> dict:
        failed = [o for o in self.outcomes if not o.passed]
        return {
            "outcomes": len(self.outcomes),
            "identities": len({o.id for o in self.outcomes}),
            "instances": sum(o.instances for o in self.outcomes),
            "pass": len(self.outcomes) - len(failed),
            "fail": len(failed),
            "erratum_candidates": sum(1 for o in self.outcomes if o.label == "erratum candidate"),
            "documented_errata_failures": sum(1 for o in failed if o.id in self.errata),
            "unexpected_failures": len(self.unexpected),
        }

    @property
    def exit_code(self) -> int:
        return 1 if self.unexpected else 0


def _task(args: tuple) -> CheckOutcome:
    spec_id, alpha, beta, n_range, m_range = args
    params = None if alpha is None else AlgebraParams(alpha, beta)
    return check(spec_id, params, n_range, m_range)


def _workers(config: VerifyConfig) -> int:
    if config.workers is not None:
        return config.workers
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return 1


def _label(outcomes: list[CheckOutcome]) -> None:
    by_key = {(o.id, o.params): o for o in outcomes}
    for o in outcomes:
        if o.variant != AS_PRINTED or o.passed or not o.id.endswith("." + AS_PRINTED):
            continue
        base = o.id[: -len(AS_PRINTED) - 1]
        fixed = by_key.get((f"{base}.{CORRECTED}", o.params))
        if fixed is not None and fixed.passed:
            o.label = "erratum candidate"


def verify_all(config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """Run every catalog entry over its applicable algebras; never stops on failure."""
    from .. import __version__

    config.validate()
    chosen = [preset(p) for p in config.presets]
    extra = [p for p in random_params(config.random_params, config.seed)
             if all(p != c for c in chosen)]
    algebras = chosen + extra

    tasks = []
    for spec in catalog():
        lo = config.n_min if spec.domain == "all" else max(config.n_min, 0)
        if lo > config.n_max:
            continue
        n_range = (lo, config.n_max)
        m_range = None
        if "m" in spec.variables:
            m_lo = config.m_min if spec.domain == "all" else max(config.m_min, 0)
            if m_lo > config.m_max:
                continue
            m_range = (m_lo, config.m_max)
        if spec.scope == "scalar":
            targets: list[Optional[AlgebraParams]] = [None]
        else:
            targets = [p for p in algebras if spec.in_scope(p)]
        for p in targets:
            alpha = None if p is None else p.alpha
            beta = None if p is None else p.beta
            tasks.append((spec.id, alpha, beta, n_range, m_range))

    workers = min(_workers(config), max(1, len(tasks)))
    if workers == 1:
        outcomes = [_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_task, tasks, chunksize=4))
    outcomes.sort(key=CheckOutcome.sort_key)
    _label(outcomes)
    return VerificationReport(__version__, catalog_hash(), config.as_dict(), outcomes,
                              documented_errata())
