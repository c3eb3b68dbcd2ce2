#!/usr/bin/env python3
"""Seeded randomized sweep: build random problems, compute everything in
exact arithmetic, and check each result against the independent oracles."""
import argparse

from geu.fuzz import format_summary, run_fuzz


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--n-max", type=int, default=8)
    args = ap.parse_args()
    summary = run_fuzz(args.seed, args.count, args.n_max)
    print(format_summary(summary))
    return 0 if not summary["failures"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
