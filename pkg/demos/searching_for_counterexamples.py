#!/usr/bin/env python3
"""
Searching for rainbow-free colorings of regular tournaments.

The best known rainbow-free colorings of regular tournaments have maximum
monochromatic in-degree n/11 (blow-ups of the 11-vertex example), and it
is conjectured that nothing smaller is possible. This script

  A. solves rotational T_5 exactly, for both directions of the objective;
  B. checks that annealing reproduces the exact optima;
  C. runs the warm-started probe at n = 11 and 33;
  D. runs a cold min-D- search on rotational bases and compares with n/11.

A rainbow-free coloring with D- below n/11 in part D would be a
counterexample candidate worth an exhaustive look; none is expected.

Usage: python searching_for_counterexamples.py [--budget N] [--seed S]
"""

import argparse
import time

from rainbow_tournaments import (
    MAX_MONO,
    MIN_MONO,
    SearchConfig,
    anneal_restarts,
    conjecture_probe,
    exhaustive_search,
    rotational_tournament,
)


def part_a_b(seed):
    base = rotational_tournament(5)
    for objective in (MAX_MONO, MIN_MONO):
        exact = exhaustive_search(base, objective=objective)
        heur = anneal_restarts(SearchConfig(base, objective, budget=5000, seed=seed), seeds=range(seed, seed + 4))
        print(f"T_5 {objective:<22} exact {exact.key} ({exact.evaluations} leaves)  anneal {heur.key}")
    print()


def part_c(budget, seed):
    for n in (11, 33):
        res = conjecture_probe(n, budget=budget, seed=seed)
        print(f"probe n={n:<3} base {res.base:<16} best rainbow-free D- = {res.best_mono}")
    print()


def part_d(budget, seed):
    print(f"{'n':>4}{'n/11':>7}{'best D-':>9}{'time':>7}")
    for n in (7, 9, 11, 13, 15, 17, 19, 21, 23):
        t0 = time.perf_counter()
        res = conjecture_probe(n, budget=budget, seed=seed, objective=MIN_MONO, warm_start=False)
        best = "-" if res.best_mono is None else res.best_mono
        flag = "  <- below n/11" if res.best_mono is not None and res.best_mono * 11 < n else ""
        print(f"{n:>4}{n / 11:>7.2f}{best!s:>9}{time.perf_counter() - t0:>6.1f}s{flag}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    ap.add_argument("--budget", type=int, default=40_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    part_a_b(args.seed)
    part_c(args.budget, args.seed)
    part_d(args.budget, args.seed)


if __name__ == "__main__":
    main()
