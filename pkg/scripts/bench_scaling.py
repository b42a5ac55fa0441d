"""Time one similarity trial across sizes and fit the log-log slope.

    python scripts/bench_scaling.py --sizes 64 128 256 512
"""

import argparse

from permsim.cli import COMPLEXITY_NOTE, bench


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rows, slope = bench(args.sizes, seed=args.seed)
    for n, secs in rows:
        print(f"n={n:5d}  {secs:9.3f}s")
    print(f"slope {slope:.3f}")
    print(COMPLEXITY_NOTE)


if __name__ == "__main__":
    main()
