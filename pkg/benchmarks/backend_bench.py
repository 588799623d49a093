#!/usr/bin/env python3
"""Compare the jitted and plain-numpy kernel backends.

Runs each family instance in a fresh subprocess per backend (the
backend is chosen at import time from CLIQUEPART_BACKEND), times
count_partitions best-of-N after a warmup call, and prints a CSV plus a
per-instance speedup summary on stderr. One-time jit compilation or
cache loading is excluded from the timings by warming on a tiny
instance first.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
import cliquepart as cp

spec, repeats = sys.argv[1], int(sys.argv[2])
g = cp.parse_family(spec)
cp.count_partitions(cp.gen_gmn(3, 2))  # absorb backend load
best = None
count = None
for _ in range(repeats):
    t0 = time.perf_counter()
    count = cp.count_partitions(g)
    dt = (time.perf_counter() - t0) * 1000.0
    best = dt if best is None else min(best, dt)
print(json.dumps({"backend": cp.BACKEND, "count": count, "ms": best}))
"""

DEFAULT_SPECS = ["gn:10", "hn:6", "gmn:5,6", "gmn:7,5", "twoclique:12"]


def run_one(spec: str, backend: str, repeats: int) -> dict:
    env = dict(os.environ, CLIQUEPART_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", CHILD, spec, str(repeats)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("specs", nargs="*", default=DEFAULT_SPECS,
                        help="family specs (default: %(default)s)")
    parser.add_argument("--repeats", type=int, default=3,
                        help="best-of-N timing (default: 3)")
    parser.add_argument("--output", metavar="PATH",
                        help="write the CSV here instead of stdout")
    args = parser.parse_args(argv)

    sink = open(args.output, "w", encoding="utf-8", newline="") if args.output else sys.stdout
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["spec", "backend", "count", "best_ms"])
    try:
        for spec in args.specs:
            rows = {}
            for backend in ("numba", "numpy"):
                r = run_one(spec, backend, args.repeats)
                rows[backend] = r
                writer.writerow([spec, r["backend"], r["count"], f"{r['ms']:.3f}"])
                sink.flush()
            if rows["numba"]["count"] != rows["numpy"]["count"]:
                print(f"error: backend disagreement on {spec}: "
                      f"{rows['numba']['count']} vs {rows['numpy']['count']}",
                      file=sys.stderr)
                return 1
            speed = rows["numpy"]["ms"] / max(rows["numba"]["ms"], 1e-9)
            print(f"{spec}: numba {rows['numba']['ms']:.1f} ms, "
                  f"numpy {rows['numpy']['ms']:.1f} ms, "
                  f"speedup {speed:.1f}x", file=sys.stderr)
    finally:
        if args.output:
            sink.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
