#!/usr/bin/env python3
"""Run every claim over a universe and print a status table with witnesses.

Example:
    python scripts/survey_claims.py --alphabet 2 --max-x 6 --forms both
"""

import argparse
import time

from repcore import ClaimId, GATING_CLAIMS, Universe, run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphabet", type=int, default=2)
    ap.add_argument("--min-x", type=int, default=2)
    ap.add_argument("--max-x", type=int, default=6)
    ap.add_argument("--e-sums", default="3,4")
    ap.add_argument("--forms", choices=("prefix", "deletion", "both"), default="both")
    ap.add_argument("--max-violations", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    universe = Universe(
        alphabet_size=args.alphabet,
        min_x=args.min_x,
        max_x=args.max_x,
        e_sums=tuple(int(s) for s in args.e_sums.split(",")),
        forms=args.forms,
    )
    t0 = time.perf_counter()
    reports = run(universe, max_violations=args.max_violations, jobs=args.jobs)
    elapsed = time.perf_counter() - t0

    print(f"universe: {universe}")
    print(f"{'claim':<20} {'kind':<9} {'status':<15} checked")
    for rep in reports:
        kind = "gating" if rep.claim in GATING_CLAIMS else "reported"
        print(f"{rep.claim.value:<20} {kind:<9} {rep.status:<15} {rep.checked}")
        for w in rep.counterexamples:
            s = w.spec
            print(
                f"    x={s.split.x} cut1={s.split.cut1} cut2={s.split.cut2}"
                f" e1={s.e1} e2={s.e2}: {w.factor!r} expected {w.expected},"
                f" got {w.actual}"
            )
    print(f"({elapsed:.1f}s)")


if __name__ == "__main__":
    main()
