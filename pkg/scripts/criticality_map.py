"""Print, for each web or antiweb, the set of k <= K for which it is chi_k-critical.

Usage:
    python scripts/criticality_map.py [--family web|antiweb] [--n-max 20] [--k-max 12]

Only graphs critical for at least one k are listed.  A trailing '*' marks
chi_*-critical graphs (alpha divides n - 1).
"""

from __future__ import annotations

import argparse

from kfold.criticality import is_chik_critical, is_chistar_critical
from kfold.families import Family, all_params, alpha


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--family", choices=[f.value for f in Family])
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--k-max", type=int, default=12)
    args = ap.parse_args()
    families = [Family(args.family)] if args.family else list(Family)

    for params in all_params(args.n_max, families):
        ks = [k for k in range(1, args.k_max + 1) if is_chik_critical(params, k).is_critical]
        if not ks:
            continue
        star = "*" if is_chistar_critical(params).critical else ""
        first_gap = next(k for k in range(1, args.k_max + 2) if k > args.k_max or k not in ks)
        tail = "all" if len(ks) == args.k_max else ",".join(map(str, ks))
        print(f"{params.family.value:8} n={params.n:3} p={params.p:2} alpha={alpha(params):2}  k: {tail}{star}"
              + ("" if tail == "all" else f"  (first non-critical k={first_gap})"))


if __name__ == "__main__":
    main()
