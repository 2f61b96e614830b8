#!/usr/bin/env python3
"""Scan pairs b > a >= 2 for fixed-divisor obstructions and empty Pi(100) rectangles.

For each pair in the chosen set (N or N+), report whether an obstruction is
found and the census count Pi_ab(100). Pairs with Pi_ab(100) at or below
--max-count are printed, which is how the small-count lists are produced.

    python3 scripts/scan_pairs.py --b-max 120 --set N --max-count 1
"""

import argparse
import sys

from covering2d.census import pi_100
from covering2d.obstruction import classify, find_obstruction


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--b-max", type=int, default=60)
    ap.add_argument("--set", choices=["N", "N+"], default="N")
    ap.add_argument("--max-count", type=int, default=1)
    args = ap.parse_args()
    print("a\tb\tPi_ab(100)\tobstruction")
    for b in range(3, args.b_max + 1):
        for a in range(2, b):
            c = classify(a, b)
            if not (c.in_Nplus if args.set == "N+" else c.in_N):
                continue
            count = pi_100(a, b).count
            if count > args.max_count:
                continue
            ob = find_obstruction(a, b)
            tag = ",".join(map(str, sorted(ob.prime_set))) if ob else "-"
            print(f"{a}\t{b}\t{count}\t{tag}", flush=True)
    sys.stdout.flush()


if __name__ == "__main__":
    main()
