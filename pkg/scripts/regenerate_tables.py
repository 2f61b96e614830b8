#!/usr/bin/env python3
"""Write TSV versions of the published tables into an output directory.

    python3 scripts/regenerate_tables.py --which 2 4 5 --out results/
"""

import argparse
import os
import time
from pathlib import Path

from covering2d.tables import TABLES


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--which", type=int, nargs="+", choices=sorted(TABLES), default=[2, 4, 5])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for n in args.which:
        t = time.perf_counter()
        kwargs = {} if n == 2 else {"workers": args.workers}
        text = TABLES[n](**kwargs)
        path = args.out / f"table{n}.tsv"
        path.write_text(text)
        print(f"table {n}: {path} ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
