#!/usr/bin/env python3
"""Print circuit-polynomial evaluations three ways on small Eulerian graphs.

For each graph: the transition-system oracle J(G, x), the ordinary partition
function at positive integers, the skew one at -2, and the mixed one at -1.
A quick visual check that three very different computations agree.
"""

import argparse

from mixedpf.evaluator import partition_function
from mixedpf.models import circuit_neg_model, circuit_odd_model, circuit_pos_model
from mixedpf.oracles import circuit_partition_oracle
from mixedpf.suites import enumerate_multigraphs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=3)
    parser.add_argument("--max-edges", type=int, default=4)
    parser.add_argument("--limit", type=int, default=15)
    args = parser.parse_args()

    cap = 2 * args.max_edges
    shown = 0
    for g in enumerate_multigraphs(args.max_vertices, args.max_edges):
        if not g.is_eulerian() or not g.n_edges:
            continue
        if shown >= args.limit:
            break
        shown += 1
        poly = circuit_partition_oracle(g)
        engine = {
            "J(1)": partition_function(g, circuit_pos_model(1, cap=cap), "ordinary").value,
            "J(2)": partition_function(g, circuit_pos_model(2, cap=cap), "ordinary").value,
            "J(-2)": partition_function(g, circuit_neg_model(1), "skew").value,
            "J(-1)": partition_function(g, circuit_odd_model(1, cap=cap), "mixed").value,
        }
        oracle = {
            "J(1)": poly.evaluate(1),
            "J(2)": poly.evaluate(2),
            "J(-2)": poly.evaluate(-2),
            "J(-1)": poly.evaluate(-1),
        }
        status = "ok" if engine == oracle else "MISMATCH"
        values = " ".join(f"{k}={engine[k]}" for k in engine)
        print(f"n={g.n_vertices} edges={list(g.edges)}  J={poly}  {values}  [{status}]")


if __name__ == "__main__":
    main()
