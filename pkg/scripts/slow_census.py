#!/usr/bin/env python3
"""Run the long censuses one pair at a time with timings.

    python3 scripts/slow_census.py buckets 2 3 --kmax 7
    python3 scripts/slow_census.py p100 26 149
"""

import argparse
import json
import os
import time

from covering2d.census import bounds_p100, bucket_counts, p_100
from covering2d.heuristic import kappa


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("what", choices=["buckets", "p100"])
    ap.add_argument("a", type=int)
    ap.add_argument("b", type=int)
    ap.add_argument("--kmax", type=int, default=7)
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()
    t = time.perf_counter()
    if args.what == "buckets":
        rep = bucket_counts(args.a, args.b, args.kmax, workers=args.workers)
        out = {"buckets": list(rep.buckets)}
    else:
        k7 = kappa(args.a, args.b, 7).kappa
        bounds = bounds_p100(args.a, args.b, k7)
        rep = p_100(args.a, args.b, k7, workers=args.workers)
        out = {"kappa7": float(k7), "m_max": bounds.m_max, "n_max": bounds.n_max,
               "count": rep.count, "distinct": rep.distinct_count}
    out.update(a=args.a, b=args.b, tested=rep.candidates_tested, seconds=round(time.perf_counter() - t, 1))
    print(json.dumps(out))


if __name__ == "__main__":
    main()
