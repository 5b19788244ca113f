"""Smallest graphs (by vertices, then edges) rejected by the recognizer.

Walks the atlas of all graphs on at most 7 vertices, runs the pipeline, and
confirms each rejection with the brute-force oracle. Needs networkx.

    python scripts/find_no_instances.py [--max-n 7]
"""

import argparse
import time

import networkx as nx

from pirecog.oracles import oracle_is_simple_triangle
from pirecog.orders import simple_graph
from pirecog.recognizer import recognize_simple_triangle


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()
    first: dict[str, tuple] = {}
    counts: dict[str, int] = {}
    t0 = time.perf_counter()
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if n == 0 or n > args.max_n:
            continue
        g = simple_graph(n, nxg.edges())
        res = recognize_simple_triangle(g)
        if res.verdict:
            continue
        counts[res.reason] = counts.get(res.reason, 0) + 1
        if res.reason not in first:
            t = time.perf_counter()
            brute = oracle_is_simple_triangle(g, max_edges=n * n)
            print(f"{res.reason}: n={n} edges={sorted(g.edges)} oracle_yes={brute} "
                  f"({time.perf_counter() - t:.1f}s)")
            first[res.reason] = (n, sorted(g.edges))
    print("rejections per reason:", counts, f"total {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
