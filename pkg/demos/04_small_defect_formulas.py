#!/usr/bin/env python3
"""Closed forms for codes with small Singleton defect, checked against the
enumeration oracle.

MDS distributions depend on the parameters alone; near-MDS ones need one
weight count; almost-MDS ones with defect sum sigma need the sigma-1 counts
A_d..A_{d+sigma-2}.  Random search digs up genuine sigma=3 specimens and the
formula reproduces their brute-forced distributions exactly.
"""

from weightdist import GF, mds_distribution, nmds_distribution, reed_solomon_code
from weightdist.closed_forms import AmdsInput, amds_distribution
from weightdist.corpus import find_amds_specimens


def main():
    print("== MDS: formula vs. enumerated Reed-Solomon codes ==")
    for q, n, k in [(8, 7, 3), (9, 9, 4), (5, 6, 3)]:
        rs = reed_solomon_code(GF(q), n, k)
        brute = rs.weight_distribution()
        formula = mds_distribution(n, k, q)
        assert formula.counts == brute.counts
        print(f"  [{n},{k}]_{q}: {list(formula.counts)}")

    print()
    print("== near-MDS: one count pins everything ==")
    for ad in (27, 30):
        dist = nmds_distribution(8, 4, 4, ad)
        print(f"  [8,4,4]_4 with A_4={ad}: {list(dist.counts)}")

    print()
    print("== almost-MDS with defect sum 3, found by seeded search ==")
    for code, p in find_amds_specimens(sigma=3, count=3, seed=424242):
        A = code.weight_distribution()
        seeds = (A.counts[p.d], A.counts[p.d + 1])
        formula = amds_distribution(AmdsInput(p.n, p.k, p.q, 3, seeds))
        assert formula.counts == A.counts
        print(f"  [{p.n},{p.k},{p.d}]_{p.q} (d_perp={p.d_perp}), seeds {seeds}:")
        print(f"    formula == brute -> {list(formula.counts)}")


if __name__ == "__main__":
    main()
