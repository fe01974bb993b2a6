"""Oracle self-consistency tests (the oracles must stand on their own)."""

import random
from fractions import Fraction

import pytest

from mixedpf.algebra import GaussianRational
from mixedpf.graph import MultiGraph, circle_graph, cycle_graph, disjoint_union
from mixedpf.oracles import (
    Polynomial,
    adjacency_determinant,
    adjacency_matrix,
    charpoly_oracle,
    circuit_partition_oracle,
    matching_count_oracle,
    sachs_oracle,
)
from mixedpf.suites import random_multigraph

K3 = cycle_graph(3)
FIG8 = MultiGraph(1, ((0, 0), (0, 0)))


def test_polynomial_basics():
    p = Polynomial((1, 0, 3))
    assert p.degree == 2
    assert p.evaluate(2) == 13
    assert str(Polynomial(())) == "0"
    assert Polynomial((0, 0)) == Polynomial(())
    q = Polynomial((-2, 1))
    assert (p * q).evaluate(5) == p.evaluate(5) * q.evaluate(5)
    assert (p + q).evaluate(5) == p.evaluate(5) + q.evaluate(5)


def test_adjacency_conventions():
    g = MultiGraph(2, ((0, 0), (0, 1), (0, 1)))
    assert adjacency_matrix(g) == [[2, 2], [2, 0]]


def test_charpoly_k3():
    # t^3 - 3t - 2
    assert charpoly_oracle(K3) == Polynomial((-2, -3, 0, 1))


def test_charpoly_single_loop():
    g = MultiGraph(1, ((0, 0),))
    assert charpoly_oracle(g) == Polynomial((-2, 1))


@pytest.mark.parametrize("n,det_at_zero", [(6, -4), (4, 0), (12, 0), (3, -2)])
def test_charpoly_cycles_at_zero(n, det_at_zero):
    assert charpoly_oracle(cycle_graph(n)).evaluate(0) == det_at_zero


def test_charpoly_rejects_circles():
    with pytest.raises(ValueError):
        charpoly_oracle(circle_graph())


def test_adjacency_determinant_values():
    assert adjacency_determinant(cycle_graph(6)) == -4
    assert adjacency_determinant(cycle_graph(12)) == 0
    two_c6 = disjoint_union(cycle_graph(6), cycle_graph(6))
    assert adjacency_determinant(two_c6) == 16


def test_sachs_examples():
    assert sachs_oracle(K3, 0) == -2
    loop = MultiGraph(1, ((0, 0),))
    assert sachs_oracle(loop, 5) == 3
    edgeless = MultiGraph(3)
    assert sachs_oracle(edgeless, Fraction(3, 2)) == Fraction(27, 8)


def test_sachs_agrees_with_charpoly():
    rng = random.Random(17)
    for _ in range(20):
        g = random_multigraph(rng, max_vertices=4, max_edges=6)
        poly = charpoly_oracle(g)
        for _ in range(5):
            t = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            assert sachs_oracle(g, t) == poly.evaluate(t)


def test_circuit_partition_examples():
    assert circuit_partition_oracle(FIG8) == Polynomial((0, 2, 1))  # x^2 + 2x
    assert circuit_partition_oracle(cycle_graph(2)) == Polynomial((0, 1))
    assert circuit_partition_oracle(circle_graph()) == Polynomial((0, 1))
    path = MultiGraph(2, ((0, 1),))
    assert circuit_partition_oracle(path).is_zero()


def test_circuit_partition_convolution():
    # J(G, x+y) = sum over subsets A of J(G(A), x) * J(G(rest), y)
    rng = random.Random(19)
    pairs = [(1, 1), (2, -1), (Fraction(1, 2), 3)]
    for _ in range(10):
        g = random_multigraph(rng, max_vertices=3, max_edges=5)
        full = circuit_partition_oracle(g)
        for x, y in pairs:
            total = GaussianRational(0)
            for mask in range(1 << g.n_edges):
                inside = tuple(g.edges[e] for e in range(g.n_edges) if mask >> e & 1)
                outside = tuple(g.edges[e] for e in range(g.n_edges) if not mask >> e & 1)
                jx = circuit_partition_oracle(MultiGraph(g.n_vertices, inside)).evaluate(x)
                jy = circuit_partition_oracle(MultiGraph(g.n_vertices, outside)).evaluate(y)
                total = total + jx * jy
            assert total == full.evaluate(GaussianRational(x) + y)


def test_oracles_multiplicative():
    rng = random.Random(23)
    for _ in range(8):
        g = random_multigraph(rng, max_vertices=3, max_edges=4)
        h = random_multigraph(rng, max_vertices=3, max_edges=4)
        u = disjoint_union(g, h)
        assert charpoly_oracle(u) == charpoly_oracle(g) * charpoly_oracle(h)
        assert circuit_partition_oracle(u) == circuit_partition_oracle(
            g
        ) * circuit_partition_oracle(h)
        assert matching_count_oracle(u) == matching_count_oracle(g) * matching_count_oracle(h)


@pytest.mark.parametrize(
    "graph,count",
    [
        (K3, 4),
        (MultiGraph(2, ((0, 1),)), 2),
        (MultiGraph(3, ((0, 1), (1, 2))), 3),
        (MultiGraph(1, ((0, 0),)), 1),  # loops never match
    ],
)
def test_matching_counts(graph, count):
    assert matching_count_oracle(graph) == count
