"""Sweep n and compare naive recurrence, closed form and Binet evaluation.

    python scripts/bench_strategies.py --kinds J3,JL3 --max-exp 16
"""

from __future__ import annotations

import argparse
import timeit

from jacquat.sequences import SeqKind, binet_eval, recurrence_terms, seq_closed

closed = seq_closed.__wrapped__


def nth_by_recurrence(kind: SeqKind, n: int) -> int:
    for i, x in enumerate(recurrence_terms(kind)):
        if i == n:
            return x
    raise AssertionError


def best(fn, reps: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=reps))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kinds", default="J3,JL3")
    ap.add_argument("--max-exp", type=int, default=16, help="largest n is 2**max_exp")
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()

    print(f"{'kind':<4} {'n':>7} {'recurrence':>11} {'closed':>10} {'binet':>10}")
    for name in args.kinds.split(","):
        kind = SeqKind.parse(name)
        for e in range(0, args.max_exp + 1, 2):
            n = 1 << e
            ref = nth_by_recurrence(kind, n)
            assert closed(kind, n) == ref == binet_eval(kind, n), (kind, n)
            t_rec = best(lambda: nth_by_recurrence(kind, n), args.reps)
            t_cl = best(lambda: closed(kind, n), args.reps)
            t_bi = best(lambda: binet_eval(kind, n), args.reps)
            print(f"{kind.value:<4} {n:>7} {t_rec:>11.6f} {t_cl:>10.6f} {t_bi:>10.6f}")


if __name__ == "__main__":
    main()
