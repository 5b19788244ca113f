"""Per-doubling wall-time growth of the cover solver.

Times solve_restricted_cover on batches of instances with n = 8, 16, 32, 64
per side and prints the growth factor between consecutive sizes. Two
families: dense random bigraphs (density 0.5, F density 0.1; these are
almost always infeasible, so only the 2SAT stage runs) and the linear-interval
problems of random triangle orders (feasible, all three stages run).

    python scripts/complexity_smoke.py [--seeds 3] [--max-n 64]
"""

import argparse
import gc
import timeit

from pirecog.chaincover import CoverProblem, build_partition_formula, solve_restricted_cover
from pirecog.genio import (
    gen_random_bipartite,
    gen_random_F,
    gen_triangle_representation,
    order_of_representation,
)
from pirecog.orders import linear_interval_problem


def instance(family: str, n: int, seed: int) -> CoverProblem:
    if family == "random":
        g = gen_random_bipartite(n, n, 0.5, seed)
        return CoverProblem(g, gen_random_F(g, 0.1, seed))
    return linear_interval_problem(order_of_representation(gen_triangle_representation(n, seed)))


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=64)
    args = ap.parse_args()
    sizes = [8]
    while sizes[-1] * 2 <= args.max_n:
        sizes.append(sizes[-1] * 2)
    print(f"{'family':8} {'n':>4} {'m':>6} {'clauses':>9} {'feasible':>8} {'sec':>8} {'growth':>7}")
    for family in ("random", "triangle"):
        prev = None
        for n in sizes:
            batch = [instance(family, n, s) for s in range(args.seeds)]
            m = sum(p.graph.m for p in batch)
            clauses = sum(len(build_partition_formula(p)[0].clauses) for p in batch)
            feasible = sum(solve_restricted_cover(p) is not None for p in batch)
            gc.collect()
            gc.disable()
            try:
                t = min(timeit.repeat(
                    lambda: [solve_restricted_cover(p) for p in batch], number=1, repeat=3
                ))
            finally:
                gc.enable()
            growth = f"{t / prev:.1f}x" if prev else ""
            print(f"{family:8} {n:4d} {m:6d} {clauses:9d} {feasible:8d} {t:8.3f} {growth:>7}")
            prev = t


if __name__ == "__main__":
    main()
