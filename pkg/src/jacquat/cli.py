"""Command-line front end.

Exit codes: 0 success, 1 unexpected identity failure or strategy disagreement,
2 usage error (bad arguments, empty ranges, unknown names).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import timeit
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .identities import ConfigError, VerifyConfig, catalog, catalog_hash, verify_all
from .identities.report import to_csv, to_json, to_table
from .quaternion import PRESETS, AlgebraParams, Quaternion, UnsupportedMode, preset, q_norm
from .quatseq import jlq3, jq3, uq3, vq3
from .sequences import SeqKind, binet_eval, recurrence_terms, seq_closed

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("table", "json", "csv")
QUAT_BUILDERS = {"JQ": jq3, "jQ": jlq3, "VQ": vq3, "UQ": uq3}

_UNICODE_MINUS = "−"
_NEGATIVE_VALUE = re.compile(r"^-\d")
_NEGATIVE_INT = re.compile(r"^-\d+$")


class UsageError(Exception):
    pass


def _normalize(text: str) -> str:
    return text.strip().replace(_UNICODE_MINUS, "-")


def parse_index_range(text: str) -> tuple[int, int]:
    """'5' -> (5, 5); '0..7' -> (0, 7); unicode minus accepted."""
    text = _normalize(text)
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad index or range {text!r}; expected N or A..B") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return a, b


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(_normalize(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {text!r}") from None


def int_arg(text: str) -> int:
    return int(_normalize(text))


def _protect_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse takes '-3..2' or '-1/2' for an option flag (plain '-3' is fine);
    # the unicode minus slips past it and every value parser normalizes it back.
    return [
        _UNICODE_MINUS + a[1:] if _NEGATIVE_VALUE.match(a) and not _NEGATIVE_INT.match(a) else a
        for a in argv
    ]


# ---------------------------------------------------------------- seq

def _seq_values(kind: SeqKind, lo: int, hi: int, mode: str) -> list[Fraction]:
    if mode == "closed":
        return [seq_closed(kind, n) for n in range(lo, hi + 1)]
    if mode == "binet":
        try:
            return [binet_eval(kind, n) for n in range(lo, hi + 1)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if lo < 0:
        raise UsageError("recurrence mode needs n >= 0")
    out = []
    for n, x in enumerate(recurrence_terms(kind)):
        if n > hi:
            break
        if n >= lo:
            out.append(Fraction(x))
    return out


def cmd_seq(args: argparse.Namespace) -> int:
    try:
        kind = SeqKind.parse(args.kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lo, hi = parse_index_range(args.index)
    values = _seq_values(kind, lo, hi, args.mode)
    rows = list(zip(range(lo, hi + 1), values))
    if args.format == "json":
        doc = {"kind": kind.value, "mode": args.mode,
               "values": [{"n": n, "value": str(v)} for n, v in rows]}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows((n, str(v)) for n, v in rows)
    else:
        print(" ".join(str(v) for v in values))
    return EXIT_OK


# ---------------------------------------------------------------- quat

def _algebra_from_args(args: argparse.Namespace) -> AlgebraParams:
    if args.preset is not None:
        if args.alpha is not None or args.beta is not None:
            raise UsageError("give either --preset or --alpha/--beta, not both")
        try:
            return preset(args.preset)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    if args.alpha is None or args.beta is None:
        raise UsageError("need --preset NAME or both --alpha and --beta")
    return AlgebraParams(parse_rational(args.alpha), parse_rational(args.beta))


def cmd_quat(args: argparse.Namespace) -> int:
    params = _algebra_from_args(args)
    n = int(_normalize(args.n)) if re.fullmatch(r"-?\d+", _normalize(args.n)) else None
    if n is None:
        raise UsageError(f"bad index {args.n!r}")
    q: Quaternion = QUAT_BUILDERS[args.which](params, n)
    comps = [str(c) for c in q.components]
    norms = {}
    if args.norm:
        norms = {"N": str(q_norm(q, "signed")), "Nr": str(q_norm(q, "absolute"))}
    if n < 0 and not all(Fraction(c).denominator == 1 for c in q.components):
        print(f"note: {args.which}_{n} has non-integral coefficients", file=sys.stderr)

    if args.format == "json":
        doc = {"which": args.which, "n": n, "alpha": str(params.alpha), "beta": str(params.beta),
               "preset": params.preset_name, "components": comps, **norms}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        header = ["which", "n", "alpha", "beta", "r", "i", "j", "k", *norms]
        w.writerow(header)
        w.writerow([args.which, n, params.alpha, params.beta, *comps, *norms.values()])
    else:
        print(" ".join(comps))
        for name, value in norms.items():
            print(f"{name}={value}")
    return EXIT_OK


# ---------------------------------------------------------------- verify

def _verify_config(args: argparse.Namespace) -> VerifyConfig:
    if args.all_presets and args.preset:
        raise UsageError("--preset and --all-presets are mutually exclusive")
    if args.preset:
        try:
            names = tuple(dict.fromkeys(preset(p).preset_name for p in args.preset))
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        default_random = 0
    else:
        names = tuple(PRESETS)
        default_random = VerifyConfig.random_params
    random_count = args.random_params if args.random_params is not None else default_random
    base = VerifyConfig()
    config = VerifyConfig(
        presets=names,
        random_params=random_count,
        n_min=base.n_min if args.n_min is None else args.n_min,
        n_max=base.n_max if args.n_max is None else args.n_max,
        m_min=base.m_min if args.m_min is None else args.m_min,
        m_max=base.m_max if args.m_max is None else args.m_max,
        seed=args.seed,
        workers=args.workers,
    )
    try:
        config.validate()
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    return config


def cmd_verify(args: argparse.Namespace) -> int:
    config = _verify_config(args)
    try:
        report = verify_all(config)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    text = {"json": to_json, "csv": to_csv, "table": to_table}[args.format](report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        s = report.summary()
        print(f"wrote {args.out}: {s['pass']} pass, {s['fail']} fail, "
              f"{s['unexpected_failures']} unexpected", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return report.exit_code


# ---------------------------------------------------------------- identities

def cmd_identities_list(args: argparse.Namespace) -> int:
    rows = [
        {
            "id": s.id,
            "variant": s.variant,
            "scope": s.scope if s.scope != "fixed" else f"fixed:{s.fixed}",
            "variables": ",".join(s.variables),
            "domain": s.domain,
            "statement": s.statement,
            "correction": s.correction,
        }
        for s in catalog()
    ]
    if args.format == "json":
        doc = {"tool_version": __version__, "catalog_hash": catalog_hash(), "identities": rows}
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        width = max(len(r["id"]) for r in rows)
        for r in rows:
            print(f"{r['id']:<{width}}  {r['variant']:<10}  {r['scope']:<16}  {r['statement']}")
        print(f"\n{len(rows)} identities")
    return EXIT_OK


# ---------------------------------------------------------------- bench

def _recurrence_value(kind: SeqKind, n: int) -> int:
    for i, x in enumerate(recurrence_terms(kind)):
        if i == n:
            return x
    raise AssertionError("unreachable")


def cmd_bench(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("bench needs n >= 0")
    if args.reps < 1:
        raise UsageError("bench needs reps >= 1")
    try:
        kinds = [SeqKind.parse(k) for k in args.kinds.split(",") if k.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not kinds:
        raise UsageError("no kinds given")

    closed = seq_closed.__wrapped__  # bypass the memo so every rep does the work
    rows = []
    agree_all = True
    for kind in kinds:
        agree = Fraction(_recurrence_value(kind, args.n)) == closed(kind, args.n)
        agree_all &= agree
        t_rec = min(timeit.repeat(lambda: _recurrence_value(kind, args.n), number=1, repeat=args.reps))
        t_closed = min(timeit.repeat(lambda: closed(kind, args.n), number=1, repeat=args.reps))
        rows.append({"kind": kind.value, "n": args.n, "reps": args.reps,
                     "recurrence_s": t_rec, "closed_s": t_closed, "agree": agree})

    if args.format == "json":
        sys.stdout.write(json.dumps({"results": rows}, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        print(f"{'kind':<5} {'n':>8} {'recurrence (s)':>15} {'closed (s)':>12} {'speedup':>9}  agree")
        for r in rows:
            speed = r["recurrence_s"] / r["closed_s"] if r["closed_s"] > 0 else float("inf")
            print(f"{r['kind']:<5} {r['n']:>8} {r['recurrence_s']:>15.6f} {r['closed_s']:>12.6f} "
                  f"{speed:>8.1f}x  {'yes' if r['agree'] else 'NO'}")
    if not agree_all:
        print("error: recurrence and closed form disagree", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacquat",
        description="Third-order Jacobsthal sequences, their generalized quaternions, "
                    "and exact identity verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("seq", help="evaluate a scalar sequence")
    p.add_argument("kind", help=", ".join(k.value for k in SeqKind))
    p.add_argument("index", help="N or A..B (inclusive)")
    p.add_argument("--mode", choices=("closed", "recurrence", "binet"), default="closed")
    fmt(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("quat", help="evaluate a quaternion sequence term")
    p.add_argument("which", choices=tuple(QUAT_BUILDERS))
    p.add_argument("n")
    p.add_argument("--preset", help=", ".join(PRESETS))
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--norm", action="store_true", help="also print N and Nr")
    fmt(p)
    p.set_defaults(func=cmd_quat)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("--preset", action="append", help="repeatable; default is every preset")
    p.add_argument("--all-presets", action="store_true")
    p.add_argument("--random-params", type=int_arg,
                   help="random rational (alpha, beta) pairs (default 8, or 0 with --preset)")
    p.add_argument("--n-min", type=int_arg)
    p.add_argument("--n-max", type=int_arg)
    p.add_argument("--m-min", type=int_arg)
    p.add_argument("--m-max", type=int_arg)
    p.add_argument("--seed", type=int_arg, default=0)
    p.add_argument("--workers", type=int_arg, help="process count (default: $JACQUAT_THREADS or 1)")
    p.add_argument("--out", help="write the report here instead of stdout")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="inspect the identity catalog")
    isub = p.add_subparsers(dest="action", required=True)
    pl = isub.add_parser("list", help="list catalog entries")
    fmt(pl)
    pl.set_defaults(func=cmd_identities_list)

    p = sub.add_parser("bench", help="time recurrence against closed-form evaluation")
    p.add_argument("--kinds", default="J3,JL3")
    p.add_argument("--n", type=int_arg, default=10000)
    p.add_argument("--reps", type=int_arg, default=3)
    fmt(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = _protect_negative_values(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, UnsupportedMode) as exc:
        print(f"jacquat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
