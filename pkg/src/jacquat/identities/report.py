"""Report serialization: JSON (the machine contract), CSV and a text table."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from ..quaternion import AlgebraParams
from .engine import CheckOutcome, Counterexample, VerificationReport

__all__ = ["outcome_to_dict", "report_to_dict", "to_json", "from_json", "to_csv", "to_table"]


def _params_fields(p: AlgebraParams | None) -> tuple[Any, Any, Any]:
    if p is None:
        return None, None, None
    return str(p.alpha), str(p.beta), p.preset_name


def outcome_to_dict(o: CheckOutcome) -> dict:
    alpha, beta, name = _params_fields(o.params)
    cx = None
    if o.counterexample is not None:
        c = o.counterexample
        cx = {"n": c.n, "m": c.m, "lhs": c.lhs, "rhs": c.rhs, "confirmed": c.confirmed}
    return {
        "id": o.id,
        "variant": o.variant,
        "alpha": alpha,
        "beta": beta,
        "preset": name,
        "status": o.status,
        "label": o.label,
        "instances": o.instances,
        "failures": o.failures,
        "counterexample": cx,
        "negative_index_used": o.negative_index_used,
    }


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "tool_version": report.tool_version,
        "catalog_hash": report.catalog_hash,
        "config": report.config,
        "documented_errata": sorted(report.errata),
        "summary": report.summary(),
        "outcomes": [outcome_to_dict(o) for o in report.outcomes],
    }


def _dump(d: dict) -> str:
    return json.dumps(d, indent=2, ensure_ascii=False) + "\n"


def to_json(report: VerificationReport | dict) -> str:
    if isinstance(report, VerificationReport):
        report = report_to_dict(report)
    return _dump(report)


def _outcome_from_dict(d: dict) -> CheckOutcome:
    params = None
    if d["alpha"] is not None:
        params = AlgebraParams(Fraction(d["alpha"]), Fraction(d["beta"]), d.get("preset"))
    cx = None
    if d["counterexample"] is not None:
        c = d["counterexample"]
        cx = Counterexample(c["n"], c["m"], c["lhs"], c["rhs"], c["confirmed"])
    return CheckOutcome(d["id"], d["variant"], params, d["instances"], d["failures"], cx,
                        d["negative_index_used"], d["label"])


def from_json(text: str) -> VerificationReport:
    d = json.loads(text)
    return VerificationReport(
        d["tool_version"],
        d["catalog_hash"],
        d["config"],
        [_outcome_from_dict(o) for o in d["outcomes"]],
        frozenset(d["documented_errata"]),
    )


def _flat(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, list):
        return "(" + ", ".join(v) + ")"
    return str(v)


CSV_FIELDS = ["id", "variant", "alpha", "beta", "preset", "status", "label", "instances",
              "failures", "negative_index_used", "cx_n", "cx_m", "cx_lhs", "cx_rhs",
              "cx_confirmed"]


def to_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for o in report.outcomes:
        d = outcome_to_dict(o)
        cx = d.pop("counterexample") or {}
        row = {k: _flat(v) for k, v in d.items()}
        row["negative_index_used"] = str(o.negative_index_used).lower()
        row.update({
            "cx_n": _flat(cx.get("n")), "cx_m": _flat(cx.get("m")),
            "cx_lhs": _flat(cx.get("lhs")), "cx_rhs": _flat(cx.get("rhs")),
            "cx_confirmed": "" if not cx else str(cx["confirmed"]).lower(),
        })
        w.writerow(row)
    return buf.getvalue()


def _algebra(o: CheckOutcome) -> str:
    return "-" if o.params is None else str(o.params)


def to_table(report: VerificationReport) -> str:
    lines = []
    for o in report.outcomes:
        status = o.status + (f" ({o.label})" if o.label else "")
        line = f"{o.id + ':':<24} {status:<28} {_algebra(o):<24} instances={o.instances}"
        if o.negative_index_used:
            line += " [negative index]"
        if o.counterexample is not None:
            c = o.counterexample
            at = f"n={c.n}" + ("" if c.m is None else f", m={c.m}")
            line += f"\n    first failure at {at}: lhs={_flat(c.lhs)} rhs={_flat(c.rhs)}"
            if not c.confirmed:
                line += " (NOT confirmed by oracle)"
        lines.append(line)
    s = report.summary()
    lines.append("")
    lines.append(
        f"{s['outcomes']} outcomes over {s['identities']} identities, {s['instances']} instances: "
        f"{s['pass']} pass, {s['fail']} fail ({s['erratum_candidates']} erratum candidates, "
        f"{s['documented_errata_failures']} documented, {s['unexpected_failures']} unexpected)"
    )
    return "\n".join(lines) + "\n"
