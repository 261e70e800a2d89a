"""Tabulate how the pairs of each weight split across the involution classes.

    python scripts/class_census.py --m 2 --r 1 --n-max 22
"""

import argparse
from collections import Counter

from falsetheta import diagrams as dg
from falsetheta import partitions as pt


def census(family, n_max):
    rows = []
    for n in range(n_max + 1):
        counts = Counter(dg.classify(p) for p in pt.enumerate_pairs(n, family))
        rows.append((n, counts))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--r", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=22)
    args = ap.parse_args()

    family = pt.General(args.m, args.r)
    classes = list(dg.PairClass)
    short = [c.value.replace("Case", "C").replace("Overlined", "o").replace("Plain", "p") for c in classes]
    print(f"{family}")
    print("   n " + " ".join(f"{s:>10}" for s in short) + "      total")
    for n, counts in census(family, args.n_max):
        cells = " ".join(f"{counts.get(c, 0):>10}" for c in classes)
        print(f"{n:>4} {cells} {sum(counts.values()):>10}")


if __name__ == "__main__":
    main()
