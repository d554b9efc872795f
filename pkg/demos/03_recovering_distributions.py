#!/usr/bin/env python3
"""Recover a full weight distribution from a handful of known counts.

Both moment systems (the truncated-Pascal rows from the census identity and
the classical power-moment rows below the dual distance) have the property
that every maximal minor is nonzero, so ANY n - d_perp + 1 known counts
determine the rest -- the known indices need not be consecutive.  When
supplied counts fit no code, the solver says so instead of inventing one.
"""

from weightdist import (
    build_pascal_system,
    cross_check_systems,
    rank_relationship_report,
    solve_with_knowns,
)
from weightdist.codes import CodeParameters
from weightdist.errors import NegativeSolutionError, NonIntegralSolutionError
from weightdist.reference import NMDS_844_DISTRIBUTION_A, nmds_844_codes


def main():
    code, _ = nmds_844_codes()
    params = code.parameters()
    S = build_pascal_system(params)
    print(f"[{params.n},{params.k},{params.d}]_4 code, d_perp={params.d_perp}:"
          f" need n - d_perp + 1 = {params.n - params.d_perp + 1} knowns")

    print()
    print("knowns {A_0=1, A_1..A_3=0} plus ONE more count, at any index:")
    for extra in range(4, 9):
        knowns = {0: 1, 1: 0, 2: 0, 3: 0, extra: NMDS_844_DISTRIBUTION_A[extra]}
        got = solve_with_knowns(S, knowns)
        tag = " (non-consecutive with the zero block)" if extra > 4 else ""
        print(f"  known A_{extra}: -> {list(got.counts)}{tag}")
        assert got.counts == NMDS_844_DISTRIBUTION_A

    print()
    print("both systems, same knowns, cross-checked:")
    ap, al, agree = cross_check_systems(params, {0: 1, 1: 0, 2: 0, 3: 0, 4: 27})
    print(f"  pascal: {list(ap.counts)}")
    print(f"  pless : {list(al.counts)}")
    print(f"  agree = {agree}")

    print()
    print("impossible knowns are rejected, certifying nonexistence:")
    for knowns, label in [
        ({0: 1, 1: 0, 2: 0, 3: 0, 4: 60}, "A_4=60"),
        ({0: 1, 1: 0, 2: 0, 3: 0, 5: 61}, "A_5=61"),
    ]:
        try:
            solve_with_knowns(S, knowns)
        except (NegativeSolutionError, NonIntegralSolutionError) as e:
            print(f"  {label}: {type(e).__name__}: {e}")

    print()
    print("how the two constraint families overlap (observed ranks):")
    for p in (params, CodeParameters(n=5, k=2, d=4, d_perp=3, q=4)):
        rep = rank_relationship_report(p)
        print(f"  n={p.n} k={p.k}: pascal {rep.pascal_rank}, pless {rep.pless_rank},"
              f" stacked {rep.joint_rank} (of {rep.rows_each} rows each)")


if __name__ == "__main__":
    main()
