"""Run the curve-solver classification and the enumerative scan; compare.

Usage: python3 scripts/classify.py [NMAX] [JOBS]   (defaults 286, 1)
"""

import sys
import time

from cyclopoint.diagonals import theorem11_scan
from cyclopoint.metallic import THEOREM_SET, MetallicParam, classify_metallic


def show(label, vals):
    print(f"{label} ({len(vals)}): " + ", ".join(
        p.display for p in sorted(vals, key=MetallicParam.sort_key)))


def main(nmax=286, jobs=1):
    t = time.time()
    found = classify_metallic()
    show(f"curve solver [{time.time() - t:.1f}s]", found)
    t = time.time()
    scan = theorem11_scan(nmax, jobs=jobs)
    show(f"scan N <= {nmax} [{time.time() - t:.1f}s]", scan)
    print("solver == scan:", found == scan)
    print("solver == listed values:", found == set(THEOREM_SET))
    # first N at which each value appears
    first = {}
    for N in range(3, nmax + 1):
        for p in theorem11_scan(N, N_min=N):
            first.setdefault(p, N)
    for p in sorted(first, key=MetallicParam.sort_key):
        print(f"  {p.display:>14}  first at N = {first[p]}")


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:]]
    main(*args)
