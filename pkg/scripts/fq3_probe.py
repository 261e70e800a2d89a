"""Look at the P'_n family around the conjectured fixed points (k, (2k, 2k-1, ..., k+1)).

For each n up to --n-max prints the signed count split by k.  A k with a
nonzero sum cannot be cancelled by a map that keeps k fixed, so any
involution has to move pairs between those values of k.

    python scripts/fq3_probe.py --n-max 18
"""

import argparse
from collections import defaultdict

from falsetheta import diagrams as dg
from falsetheta import partitions as pt


def signed_by_k(n):
    acc = defaultdict(int)
    for p in pt.enumerate_pairs(n, pt.FQ3P):
        acc[p.k] += pt.sign(p)
    return {key: v for key, v in sorted(acc.items()) if v}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=18)
    args = ap.parse_args()

    candidates = {}
    k = 0
    while 3 * k * (k + 1) // 2 <= args.n_max:
        p = dg.fq3_conjectured_fixed_point(k)
        candidates[pt.q_weight(p)] = p
        k += 1

    for n in range(args.n_max + 1):
        by_k = signed_by_k(n)
        total = pt.signed_count(n, pt.FQ3P)
        line = f"n={n:<3} signed={total:+d} predicted={pt.predicted_count(n, pt.FQ3P):+d}"
        line += f" nonzero k->sum: {by_k}"
        if n in candidates:
            c = candidates[n]
            line += f" candidate {c}"
        print(line)


if __name__ == "__main__":
    main()
