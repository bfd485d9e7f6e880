"""Run the full verification suite and write JSON, CSV and table reports.

    python scripts/run_verification.py --out-dir results --workers 4
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace
from pathlib import Path

from jacquat.identities import VerifyConfig, verify_all
from jacquat.identities.report import to_csv, to_json, to_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="results")
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--n-max", type=int, default=VerifyConfig.n_max)
    ap.add_argument("--m-max", type=int, default=VerifyConfig.m_max)
    ap.add_argument("--random-params", type=int, default=VerifyConfig.random_params)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    config = replace(VerifyConfig(), n_max=args.n_max, m_max=args.m_max,
                     random_params=args.random_params, seed=args.seed, workers=args.workers)
    t0 = time.perf_counter()
    report = verify_all(config)
    elapsed = time.perf_counter() - t0

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(to_json(report), encoding="utf-8")
    (out / "report.csv").write_text(to_csv(report), encoding="utf-8")
    table = to_table(report)
    (out / "report.txt").write_text(table, encoding="utf-8")

    for o in report.outcomes:
        if not o.passed:
            print(f"{o.id:<24} {o.params}  {o.label or 'UNEXPECTED'}")
    print(table.rstrip().splitlines()[-1])
    print(f"{elapsed:.2f}s, reports in {out}/")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
