"""Run the co-det hunt for every n in a range and write one report per n.

    python scripts/run_hunt.py --max-n 6 --budget 100 --outdir results
"""

import argparse
import time
from pathlib import Path

from permsim.detsim import TestParams
from permsim.graphio import isomorphism_classes
from permsim.hunter import hunt


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--budget", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    params = TestParams(seed=args.seed)
    for n in range(args.min_n, args.max_n + 1):
        t0 = time.perf_counter()
        report = hunt(isomorphism_classes(n), args.budget, params)
        (outdir / f"hunt_n{n}.tsv").write_text(report.to_tsv())
        print(f"n={n} ({time.perf_counter() - t0:.1f}s)")
        print(report.summary())


if __name__ == "__main__":
    main()
