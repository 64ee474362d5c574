"""Tabulate low-weight codeword classes of one code by support geometry.

    python3 scripts/census_table.py --q 3 --rho 9 --wmax 6
"""

import argparse
from collections import Counter

from hermcodes.census import exhaustive_census
from hermcodes.code import hermitian_code, parity_check_matrix
from hermcodes.distance import brute_force_distance


def shape(e):
    r = e.support_report
    if r.collinear:
        return "collinear"
    if r.on_conic:
        return "degenerate conic" if r.conic_degenerate else "smooth conic"
    return f"other (max {r.max_collinear_subset_size} on a line)"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, required=True)
    ap.add_argument("--rho", type=int, required=True)
    ap.add_argument("--wmax", type=int, required=True)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    spec = hermitian_code(args.q, args.rho)
    d = brute_force_distance(parity_check_matrix(spec), args.wmax, jobs=args.jobs)
    print(f"q={args.q} rho={args.rho} n={spec.n} d={d}")
    if d is None:
        return
    rep = exhaustive_census(spec, args.wmax, w_min=d, jobs=args.jobs)
    for w, c in rep.counts.items():
        print(f"weight {w}: {c['classes']} classes, {c['vectors']} codewords")
        for kind, k in sorted(Counter(shape(e) for e in rep.at_weight(w)).items()):
            print(f"    {kind:40s} {k}")


if __name__ == "__main__":
    main()
