#!/usr/bin/env python3
"""Rank-growth experiment: connection-matrix ranks vs the color-space bound.

Enumerates small t-fragment families, builds the connection matrix of several
built-in models, and prints exact ranks next to the (k+2l)^t bound (k^t for
ordinary models).  Ranks may only grow as the family does; the bound never
breaks.
"""

import argparse
import itertools

from mixedpf.connection import connection_matrix, exact_rank
from mixedpf.models import charpoly_model, circuit_odd_model, matchings_model
from mixedpf.suites import enumerate_fragments


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-t", type=int, default=2)
    parser.add_argument("--family-size", type=int, default=24)
    parser.add_argument("--max-edges", type=int, default=3)
    args = parser.parse_args()

    cap = 2 * args.max_edges
    models = [
        ("charpoly(t=0)", charpoly_model(0, cap=cap), "mixed"),
        ("charpoly(t=1)", charpoly_model(1, cap=cap), "mixed"),
        ("circuit-odd(l=1)", circuit_odd_model(1, cap=cap), "mixed"),
        ("matchings", matchings_model(cap=cap), "ordinary"),
    ]

    print(f"{'t':>2} {'model':<18} {'fragments':>9} {'rank':>5} {'bound':>6}")
    for t in range(args.max_t + 1):
        fragments = list(
            itertools.islice(
                enumerate_fragments(t, max_internal=2, max_edges=args.max_edges),
                args.family_size,
            )
        )
        for name, model, mode in models:
            matrix = connection_matrix(fragments, model, mode)
            rank = exact_rank(matrix)
            base = model.k if mode == "ordinary" else model.k + model.two_ell
            bound = base**t
            flag = "" if rank <= bound else "  <-- BOUND VIOLATED"
            print(f"{t:>2} {name:<18} {len(fragments):>9} {rank:>5} {bound:>6}{flag}")


if __name__ == "__main__":
    main()
