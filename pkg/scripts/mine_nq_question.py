#!/usr/bin/env python3
"""Mine the default corpus for evidence on the open annihilator question:
does weakly-1AP = weakly-primary survive on non-quasilocal rings without the
non-maximal-annihilator hypothesis?

Usage: python scripts/mine_nq_question.py [--jobs N]
"""

import argparse
import json
import os
import sys

from ringbench.theorem_suite import Corpus, run_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out", default="nq_question.json")
    args = ap.parse_args()

    corpus = Corpus.default()
    result = run_suite(corpus, theorems=["nq_question"], jobs=args.jobs)
    rep = result.reports[0]
    print(f"examined {rep.instances} proper ideals on non-quasilocal rings "
          f"({rep.skips} skipped on quasilocal rings)")
    for c in rep.data.get("candidates", []):
        print(f"  candidate {c['ring']}: {{{', '.join(c['ideal'])}}} "
              f"maximal-annihilator={c['has_maximal_annihilator']} "
              f"replay={c['replay_confirms']}")
    for note in rep.notes:
        print(note)
    with open(args.out, "w") as fh:
        json.dump(rep.to_dict(), fh, sort_keys=True, indent=2)
    print(f"written to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
