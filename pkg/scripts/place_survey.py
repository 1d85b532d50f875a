#!/usr/bin/env python3
"""Survey every place of a cover: gap data, semigroup structure, weights.

Example:
    python3 scripts/place_survey.py --m 9 --lambdas 1,1,3,3
"""

import argparse

from kummergaps.curves import KummerCurve
from kummergaps.gapsets import (
    gap_set,
    generic_gap_set,
    partial_gap_set,
    symmetry_predict,
    weierstrass_semigroup,
)
from kummergaps.semigroups import minimal_generators
from kummergaps.weights import bw, bw_ratio, weight
from kummergaps.errors import RatioUndefinedError


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--lambdas", required=True)
    args = parser.parse_args()

    curve = KummerCurve(args.m, tuple(int(x) for x in args.lambdas.split(",")))
    genus = curve.genus
    print(f"cover degree m = {curve.m}, multiplicities = {curve.lambdas}")
    print(f"lambda_0 = {curve.lambda0}, r = {curve.r}, genus = {genus}")
    print()

    for s in range(curve.r + 1):
        mult = curve.branch_multiplicity(s)
        name = "infinity" if s == 0 else f"branch {s}"
        if curve.is_totally_ramified(s):
            gaps = gap_set(curve, s)
            semigroup = weierstrass_semigroup(curve, s)
            print(f"place {s} ({name}, multiplicity {mult}): totally ramified")
            print(f"  gaps       : {list(gaps)}")
            print(f"  generators : {list(minimal_generators(semigroup))}")
            print(
                f"  frobenius {semigroup.frobenius}, multiplicity "
                f"{semigroup.multiplicity}, weight {weight(gaps, genus)}"
            )
            print(f"  symmetry   : {symmetry_predict(curve, s).value}")
        else:
            subset = partial_gap_set(curve, s)
            marker = "complete" if subset.complete else "partial"
            print(
                f"place group {s} ({name}, multiplicity {mult}): "
                f"{curve.fiber_size(s)} places, not totally ramified"
            )
            print(f"  known gaps ({marker}): {list(subset.values)}")
    generic = generic_gap_set(curve)
    marker = "complete" if generic.complete else "partial"
    print(f"generic place, known gaps ({marker}): {list(generic.values)}")
    print()
    print(f"total weight of totally ramified places: {bw(curve)}")
    try:
        print(f"ratio against genus^3 - genus: {bw_ratio(curve)}")
    except RatioUndefinedError:
        print("ratio against genus^3 - genus: undefined (genus < 2)")


if __name__ == "__main__":
    main()
