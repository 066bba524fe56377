#!/usr/bin/env python3
"""Run the whole theorem suite over the default corpus and save the report.

Usage: python scripts/run_full_verify.py [--jobs N] [--out report.json]
"""

import argparse
import json
import os
import sys
import time

from ringbench.theorem_suite import Corpus, run_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out", default="verify_report.json")
    args = ap.parse_args()

    corpus = Corpus.default()
    print(f"corpus: {len(corpus.texts)} rings; jobs={args.jobs}")
    t0 = time.perf_counter()

    def progress(done, total, text):
        if done % 50 == 0 or done == total:
            print(f"  {done}/{total} ({time.perf_counter() - t0:.0f}s) last={text}")

    result = run_suite(corpus, jobs=args.jobs, progress=progress)
    for rep in result.reports:
        flag = "pass" if not rep.violations else "FAIL"
        print(
            f"{rep.theorem:28s} instances={rep.instances:8d} skips={rep.skips:8d} "
            f"violations={len(rep.violations):4d} [{flag}]"
        )
    for note in result.notes:
        print(f"note: {note}")
    with open(args.out, "w") as fh:
        json.dump(result.to_dict(), fh, sort_keys=True, indent=2)
    print(f"report written to {args.out}; total {result.elapsed:.0f}s, "
          f"{result.total_violations} violations")
    return 1 if result.total_violations else 0


if __name__ == "__main__":
    sys.exit(main())
