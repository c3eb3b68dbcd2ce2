#!/usr/bin/env python3
"""Run the built-in worked example and print the full report as JSON."""
import json
import sys

from geu.report import run_problem
from geu.worked import worked_problem


def main() -> int:
    report = run_problem(worked_problem())
    json.dump(report, sys.stdout, indent=2)
    print()
    return 0 if report["status"] == "PASS" else 1


if __name__ == "__main__":
    raise SystemExit(main())
