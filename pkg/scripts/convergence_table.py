#!/usr/bin/env python3
"""Print an aligned convergence table for a repeated branch pattern.

Example:
    python3 scripts/convergence_table.py --m 3 --pattern 1,2 --repeats 4,8,16,32,64
"""

import argparse

from kummergaps.weights import convergence_sweep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--pattern", default="1,2")
    parser.add_argument("--repeats", default="4,8,16,32,64")
    args = parser.parse_args()

    pattern = tuple(int(x) for x in args.pattern.split(","))
    repeats = [int(x) for x in args.repeats.split(",")]
    rows, notices = convergence_sweep(args.m, pattern, repeats)

    header = f"{'r':>6}  {'ratio':>16}  {'limit':>10}  {'|difference|':>16}  {'~float':>12}"
    print(f"m = {args.m}, pattern = {pattern}")
    print(header)
    print("-" * len(header))
    for row in rows:
        print(
            f"{row.r:>6}  {str(row.ratio):>16}  {str(row.limit):>10}  "
            f"{str(row.difference):>16}  {float(row.difference):>12.3e}"
        )
    for note in notices:
        print(f"note: {note}")


if __name__ == "__main__":
    main()
