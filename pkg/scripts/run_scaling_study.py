#!/usr/bin/env python3
"""Run the full scaling study and print one growth report per family.

Writes one CSV per family under results/ (created if missing).  All times
in the CSVs are deterministic effort milliseconds, so reruns with the same
seed reproduce them byte for byte; wall-clock totals go to stderr.
"""

import argparse
import pathlib
import sys
import time

from fpcsat.bench import append_csv_record, fit_growth, run_family, write_csv_header

STUDIES = (
    # family, parameter values, per-instance effort budget (virtual ms)
    ("pigeonhole", range(2, 7), 60_000.0),
    ("random3sat", range(8, 23), 10_000.0),
    ("complete-minus-one", range(2, 13), 10_000.0),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--seeds-per-n", type=int, default=5)
    parser.add_argument("--ratio", type=float, default=4.3)
    parser.add_argument("--out-dir", default="results")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    for family, n_values, timeout_ms in STUDIES:
        csv_path = out_dir / f"{family.replace('-', '_')}.csv"
        started = time.perf_counter()
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            write_csv_header(fh)
            records = run_family(
                family,
                n_values,
                seed=args.seed,
                seeds_per_n=args.seeds_per_n,
                ratio=args.ratio,
                timeout_ms=timeout_ms,
                on_record=lambda r, fh=fh: append_csv_record(fh, r),
            )
        wall = time.perf_counter() - started
        print(f"== {family} ({len(records)} records, {csv_path})")
        report = fit_growth(records)
        for line in report.lines():
            print(f"   {line}")
        print(f"{family}: {wall:.1f}s wall", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
