"""Benchmark: wall-clock time of the verification suites.

Measures each registered suite end to end:
- Time per run
- Number of report items and how many matched their expectation

Usage:
    python benchmarks/suite_timings.py
    python benchmarks/suite_timings.py --runs 3 --suite crt --suite padic
    python benchmarks/suite_timings.py --json
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from prodlab.lab.suites import SUITES, report_passed, run_suite


def measure(fn) -> tuple[float, object]:
    """Run fn, return (elapsed_seconds, result)."""
    start = time.perf_counter()
    result = fn()
    return time.perf_counter() - start, result


def run_benchmark(name: str, runs: int, seed: int, verbose: bool = True) -> dict:
    """Time one suite over several runs with distinct seeds."""
    if verbose:
        print(f"  {name}...", end=" ", flush=True)
    times = []
    items = passed = 0
    for r in range(runs):
        elapsed, report = measure(lambda: run_suite(name, seed + r))
        times.append(elapsed)
        items = len(report["items"])
        passed += report_passed(report)
    result = {
        "avg": round(statistics.mean(times), 3),
        "min": round(min(times), 3),
        "max": round(max(times), 3),
        "items": items,
        "passed_runs": passed,
    }
    if verbose:
        mark = "✓" if passed == runs else "✗"
        print(f"avg={result['avg']:.2f}s min={result['min']:.2f}s ({items} items) {mark}")
    return result


def main():
    parser = argparse.ArgumentParser(description="Benchmark prodlab verification suites")
    parser.add_argument("--runs", type=int, default=1, help="Runs per suite")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the first run")
    parser.add_argument("--suite", action="append", choices=sorted(SUITES), help="Suite to time (repeatable)")
    parser.add_argument("--json", action="store_true", help="Output as JSON")
    args = parser.parse_args()

    verbose = not args.json
    names = args.suite or list(SUITES)

    if verbose:
        print("=" * 60)
        print("prodlab: suite timings")
        print("=" * 60)
        print(f"  Runs:   {args.runs}")
        print(f"  Seed:   {args.seed}")

    results = {name: run_benchmark(name, args.runs, args.seed, verbose) for name in names}
    deviated = [name for name, r in results.items() if r["passed_runs"] != args.runs]

    if args.json:
        print(json.dumps({"suites": results, "config": {"runs": args.runs, "seed": args.seed}}, indent=2))
    else:
        total = sum(r["avg"] for r in results.values())
        print(f"\n  Total (avg per run): {total:.2f}s")
        if deviated:
            print(f"  Deviating suites: {', '.join(deviated)}")

    if deviated:
        sys.exit(1)


if __name__ == "__main__":
    main()
