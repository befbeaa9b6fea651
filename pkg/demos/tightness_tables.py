#!/usr/bin/env python3
"""
How sharp are the bounds?  Tables from the extremal constructions.

1. remark1(k, i): the per-vertex rainbow lower bound, compared with the
   exact number of rainbow triangles through the designated vertex.
2. example1(m, k): 2D- + D+ against the every-vertex threshold, while the
   designated vertex stays on no rainbow triangle.
3. example3(k, i): what the construction actually delivers next to the
   values written down for it (these disagree for small m).

Usage: python tightness_tables.py
"""

from rainbow_tournaments import census, example1, example3, remark1, thm1_bound, thm1plus_threshold
from rainbow_tournaments.constructions import example3_case


def remark_table():
    print("remark1: rainbow triangles through v vs guaranteed")
    print(f"{'k':>3}{'i':>3}{'n':>5}{'bound':>7}{'actual':>8}")
    for k in range(3, 8):
        for i in (0, 2, 4):
            res = remark1(k, i)
            v = res.designated_vertex
            actual = census(res.instance).rainbow_through[v]
            print(f"{k:>3}{i:>3}{res.instance.n:>5}{str(thm1_bound(res.instance, v)):>7}{actual:>8}")
    print()


def example1_table():
    print("example1: 2D- + D+ just above the threshold, v still rainbow-free")
    print(f"{'m':>3}{'k':>3}{'n':>5}{'i':>4}{'2D-+D+':>8}{'threshold':>11}{'through v':>11}")
    for m in range(3, 8):
        for k in range(3, m + 1):
            res = example1(m, k)
            meas = res.measured()
            thr, _ = thm1plus_threshold(meas["n"], meas["irregularity"])
            print(f"{m:>3}{k:>3}{meas['n']:>5}{meas['irregularity']:>4}{meas['mono_sum']:>8}"
                  f"{str(thr):>11}{meas['rainbow_through_v']:>11}")
    print()


def example3_table():
    print("example3: measured vs recorded values")
    print(f"{'k':>3}{'i':>3}{'case':>6}{'m':>3}{'i meas':>8}{'sum meas':>10}{'sum rec':>9}")
    for k, i in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 6), (4, 3), (5, 2), (6, 5), (8, 4)]:
        res = example3(k, i)
        case, m = example3_case(k, i)
        meas = res.measured()
        print(f"{k:>3}{i:>3}{case:>6}{m:>3}{meas['irregularity']:>8}{meas['mono_sum']:>10}"
              f"{res.stated['mono_sum']:>9}")


if __name__ == "__main__":
    remark_table()
    example1_table()
    example3_table()
