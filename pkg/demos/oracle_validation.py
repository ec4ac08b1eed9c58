#!/usr/bin/env python3
"""Cross-check every closed-form measure against the brute-force oracle.

Each suite draws seeded random configurations in the closing-traffic regime,
computes the measure, replays the same frozen motion assumptions as
rectangle footprints, and compares verdicts and contact times. This is the
same machinery behind ``ttc2d validate``.
"""

import time

from ttc2d.validation import run_validation

TRIALS = {"guo": 400, "v1": 400, "v2": 250, "v3": 250}


def main():
    for measure, trials in TRIALS.items():
        start = time.perf_counter()
        report = run_validation(measure, trials, seed=2024)
        elapsed = time.perf_counter() - start
        print(report.summary())
        print(f"  ({elapsed:.1f} s)\n")


if __name__ == "__main__":
    main()
