#!/usr/bin/env python3
"""Run the verification campaign over the default census and print a summary.

Usage:
    python scripts/run_census.py [--suite all] [--max-order 2000] [--workers 1]

Exit status is nonzero if any check fails; failures are written as replay
bundles under ./counterexamples.
"""

import argparse
import sys
import time
from collections import Counter

from piclass.catalog import CensusRanges, census
from piclass.suite import Limits, resolve_suites, run_census_campaign, write_counterexample_bundle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", action="append", default=None,
                        help="suite selector (repeatable); default 'all'")
    parser.add_argument("--max-order", type=int, default=2000)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--bundle-dir", default="counterexamples")
    args = parser.parse_args()

    suites = resolve_suites(args.suite or ["all"])
    ranges = CensusRanges(max_order=args.max_order)
    entries = list(census(ranges))
    print(f"census: {len(entries)} groups (order cap {args.max_order})")
    print(f"suites: {', '.join(suites)}")

    t0 = time.perf_counter()
    result = run_census_campaign(entries, suites, Limits(), workers=args.workers)
    elapsed = time.perf_counter() - t0

    by_suite = Counter()
    for r in result.reports:
        by_suite[(r.result_id, r.status)] += 1
    print(f"\n{len(result.reports)} verdicts in {elapsed:.1f}s")
    for rid in sorted({r.result_id for r in result.reports}):
        counts = {s: c for (i, s), c in by_suite.items() if i == rid}
        print(f"  {rid:24} " + ", ".join(f"{s}={c}" for s, c in sorted(counts.items())))
    print("\nsummary: " + ", ".join(f"{k}={v}" for k, v in sorted(result.summary.items())))

    if result.failures:
        groups = dict(entries)
        for i, failure in enumerate(result.failures):
            grp = groups.get(failure.group)
            if grp is not None:
                path = f"{args.bundle_dir}/{failure.result_id}-{i}"
                write_counterexample_bundle(path, grp, failure)
                print(f"counterexample bundle: {path}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
