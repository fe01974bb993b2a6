"""Independent brute-force oracles used as ground truth in every test.

Each function here recomputes, by direct enumeration or textbook linear
algebra, a quantity that the engine reaches through a partition function:
characteristic polynomials (determinant and subgraph-expansion routes,
deliberately separate code paths), the circuit partition polynomial via
transition systems, matching counts, and matching-permutation signs via
exhaustive search.  Nothing in this module calls the evaluator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import GaussianRational, ONE, ZERO, as_gaussian
from .graph import MultiGraph
from .linalg import determinant


@dataclass(frozen=True)
class Polynomial:
    """A dense polynomial over Q(i); coefficient index = degree."""

    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = [as_gaussian(c) for c in self.coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, x) -> GaussianRational:
        x = as_gaussian(x)
        total = ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for a in range(n):
            s = self.coeffs[a] if a < len(self.coeffs) else ZERO
            t = other.coeffs[a] if a < len(other.coeffs) else ZERO
            out.append(s + t)
        return Polynomial(tuple(out))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if not ca:
                continue
            for b, cb in enumerate(other.coeffs):
                out[a + b] = out[a + b] + ca * cb
        return Polynomial(tuple(out))

    def scale(self, c) -> "Polynomial":
        c = as_gaussian(c)
        return Polynomial(tuple(c * x for x in self.coeffs))

    def shift(self, n: int) -> "Polynomial":
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return Polynomial((ZERO,) * n + self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            if d == 0:
                parts.append(f"{c}")
            else:
                mono = "x" if d == 1 else f"x^{d}"
                parts.append(mono if c == 1 else f"({c}){mono}")
        return " + ".join(parts)


def adjacency_matrix(g: MultiGraph) -> list[list[int]]:
    """Edge multiplicities off the diagonal, twice the loop count on it."""
    a = [[0] * g.n_vertices for _ in range(g.n_vertices)]
    for u, v in g.edges:
        if u == v:
            a[u][u] += 2
        else:
            a[u][v] += 1
            a[v][u] += 1
    return a


def adjacency_determinant(g: MultiGraph) -> GaussianRational:
    """det of the adjacency matrix, by exact elimination."""
    if g.n_circles:
        raise ValueError("adjacency matrix undefined for circle components")
    return determinant(adjacency_matrix(g))


def charpoly_oracle(g: MultiGraph) -> Polynomial:
    """det(tI - A) as an exact polynomial, via interpolation.

    Evaluates the determinant at n+1 integer points with fraction-free
    elimination and interpolates; the result has integer coefficients.
    """
    if g.n_circles:
        raise ValueError("characteristic polynomial undefined for circle components")
    n = g.n_vertices
    a = adjacency_matrix(g)
    points = []
    for x in range(n + 1):
        m = [
            [GaussianRational((x if r == c else 0) - a[r][c]) for c in range(n)]
            for r in range(n)
        ]
        points.append((GaussianRational(x), determinant(m)))
    return _interpolate(points)


def _interpolate(points) -> Polynomial:
    result = Polynomial()
    for i, (xi, yi) in enumerate(points):
        numerator = Polynomial((ONE,))
        denominator = ONE
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            numerator = numerator * Polynomial((-xj, ONE))
            denominator = denominator * (xi - xj)
        result = result + numerator.scale(yi / denominator)
    return result


def sachs_oracle(g: MultiGraph, t) -> GaussianRational:
    """The subgraph expansion of det(tI - A).

    Sums (-1)^(edge components) * (-2)^(cycle components) * t^(uncovered
    vertices) over the edge subsets whose components are single edges or
    cycles; loops count as cycles and parallel pairs as 2-cycles.
    """
    if g.n_circles:
        raise ValueError("Sachs expansion undefined for circle components")
    t = as_gaussian(t)
    m = g.n_edges
    n = g.n_vertices
    t_pow = [ONE]
    minus2_pow = [ONE]
    for _ in range(n):
        t_pow.append(t_pow[-1] * t)
        minus2_pow.append(minus2_pow[-1] * GaussianRational(-2))
    total = ZERO
    for mask in range(1 << m):
        chosen = [e for e in range(m) if mask >> e & 1]
        kinds = _sachs_components(g, chosen)
        if kinds is None:
            continue
        n_edge = kinds.count("edge")
        n_cycle = kinds.count("cycle")
        covered = set()
        for e in chosen:
            covered.update(g.edges[e])
        term = t_pow[n - len(covered)] * minus2_pow[n_cycle]
        total = total - term if n_edge % 2 else total + term
    return total


def _sachs_components(g: MultiGraph, chosen):
    """Classify the components of an edge subset as edges/cycles, or None."""
    deg = {}
    adj = {}
    for e in chosen:
        u, v = g.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    if any(d > 2 for d in deg.values()):
        return None
    kinds = []
    seen_v = set()
    for start in sorted(deg):
        if start in seen_v:
            continue
        stack = [start]
        comp_v = set()
        comp_e = set()
        while stack:
            u = stack.pop()
            if u in comp_v:
                continue
            comp_v.add(u)
            for e, w in adj[u]:
                comp_e.add(e)
                if w not in comp_v:
                    stack.append(w)
        seen_v.update(comp_v)
        if len(comp_e) == 1 and len(comp_v) == 2:
            kinds.append("edge")
        elif all(deg[v] == 2 for v in comp_v):
            kinds.append("cycle")
        else:
            return None
    return kinds


def circuit_partition_oracle(g: MultiGraph) -> Polynomial:
    """The circuit partition polynomial via transition-system enumeration.

    At every vertex, each unordered perfect pairing of the incident
    half-edges is one transition choice; a full choice decomposes the edges
    into closed walks, counted by x^(number of walks).  Non-Eulerian graphs
    give the zero polynomial; every circle component multiplies by x.
    """
    if any(d % 2 for d in g.degrees()):
        return Polynomial()
    per_vertex = []
    for v in range(g.n_vertices):
        hes = []
        for e, (a, b) in enumerate(g.edges):
            if a == v:
                hes.append((e, 0))
            if b == v:
                hes.append((e, 1))
        per_vertex.append(list(_all_pairings(hes)))
    counts = {}
    for combo in itertools.product(*per_vertex):
        transition = {}
        for pairing in combo:
            for h1, h2 in pairing:
                transition[h1] = h2
                transition[h2] = h1
        circuits = _count_closed_walks(g, transition)
        counts[circuits] = counts.get(circuits, 0) + 1
    if not counts:
        counts = {0: 1}
    coeffs = [0] * (max(counts) + 1)
    for c, n in counts.items():
        coeffs[c] = n
    return Polynomial(tuple(coeffs)).shift(g.n_circles)


def _all_pairings(items):
    items = list(items)
    if not items:
        yield []
        return
    first = items.pop(0)
    for i, other in enumerate(items):
        for rest in _all_pairings(items[:i] + items[i + 1 :]):
            yield [(first, other)] + rest


def _count_closed_walks(g: MultiGraph, transition) -> int:
    visited = set()
    circuits = 0
    for he in sorted(transition):
        if he in visited:
            continue
        circuits += 1
        cur = he
        while cur not in visited:
            visited.add(cur)
            crossed = (cur[0], 1 - cur[1])
            visited.add(crossed)
            cur = transition[crossed]
    return circuits


def matching_count_oracle(g: MultiGraph) -> int:
    """Number of edge subsets forming matchings, the empty one included.

    Loops never take part: they meet their vertex twice.
    """
    candidates = [e for e, (u, v) in enumerate(g.edges) if u != v]
    count = 0
    for mask in range(1 << len(candidates)):
        used = set()
        ok = True
        for pos, e in enumerate(candidates):
            if not mask >> pos & 1:
                continue
            u, v = g.edges[e]
            if u in used or v in used:
                ok = False
                break
            used.add(u)
            used.add(v)
        if ok:
            count += 1
    return count


def permutation_sign_oracle(m, n) -> int:
    """Sign of a permutation sending one matching's arcs onto the other's.

    Exhaustive search over all permutations of the common ground set; all
    permutations achieving the mapping share one sign, so the first found is
    returned.
    """
    if m.ground_set() != n.ground_set():
        raise ValueError("matchings live on different ground sets")
    elements = sorted(m.ground_set())
    index = {x: i for i, x in enumerate(elements)}
    target = set(m.arcs)
    for images in itertools.permutations(elements):
        mapping = {x: images[i] for i, x in enumerate(elements)}
        if {(mapping[u], mapping[v]) for u, v in n.arcs} == target:
            positions = tuple(index[images[i]] for i in range(len(elements)))
            inversions = sum(
                1
                for a in range(len(positions))
                for b in range(a + 1, len(positions))
                if positions[a] > positions[b]
            )
            return -1 if inversions % 2 else 1
    raise ValueError("no permutation maps the matchings onto each other")
