"""Cross-check closed forms against the exact oracle on every small web/antiweb.

Usage:
    python scripts/oracle_sweep.py [--n-max 12] [--k-max 3] [--deleted]

Prints one line per (family, n, p, k) that disagrees and a final summary;
exits non-zero on any disagreement.
"""

from __future__ import annotations

import argparse
import sys
import time

from kfold.coloring import chi_k
from kfold.criticality import chi_k_minus_v
from kfold.families import all_params, delete_vertex, materialize
from kfold.oracle import exact_chi_k


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--k-max", type=int, default=3)
    ap.add_argument("--deleted", action="store_true", help="also check chi_k(G - v) for every v")
    args = ap.parse_args()

    checked = bad = 0
    t0 = time.perf_counter()
    for params in all_params(args.n_max):
        g = materialize(params)
        for k in range(1, args.k_max + 1):
            got, want = exact_chi_k(g, k), chi_k(params, k)
            checked += 1
            if got != want:
                bad += 1
                print(f"MISMATCH {params} k={k}: oracle {got}, formula {want}")
            if args.deleted:
                want_v = chi_k_minus_v(params, k)
                for v in range(params.n):
                    got_v = exact_chi_k(delete_vertex(g, v), k)
                    checked += 1
                    if got_v != want_v:
                        bad += 1
                        print(f"MISMATCH {params} - v{v} k={k}: oracle {got_v}, formula {want_v}")
    print(f"{checked} checks, {bad} mismatches, {time.perf_counter() - t0:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
