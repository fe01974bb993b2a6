"""Half-edge multigraphs and fragments, plus the Eulerian machinery.

Graphs may have loops, parallel edges and vertexless circle components; a
t-fragment additionally carries t labeled vertices of degree one whose
incident edges are its open ends.  Half-edges (edge id, side) are the
primitive incidence objects: orientations and local pairings of loops are
ill-defined on plain edge lists.

All structures are immutable after construction; every operation returns
fresh values, so everything here is safe for data-parallel use.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field

#: a half-edge is (edge id, side) with side 0 at the first endpoint, 1 at the second
HalfEdge = tuple


@dataclass(frozen=True)
class MultiGraph:
    """A finite multigraph: loops and parallel edges allowed.

    ``n_circles`` counts vertexless circle components; they carry no
    colorable structure beyond a multiplicative factor in partition
    functions.  Degrees count loops twice.
    """

    n_vertices: int
    edges: tuple = ()
    n_circles: int = 0

    def __post_init__(self):
        if self.n_vertices < 0 or self.n_circles < 0:
            raise ValueError("negative vertex or circle count")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (0 <= a < self.n_vertices and 0 <= b < self.n_vertices):
                raise ValueError(f"edge ({a},{b}) has endpoint outside range")
        object.__setattr__(self, "edges", edges)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def degrees(self) -> list[int]:
        d = [0] * self.n_vertices
        for a, b in self.edges:
            d[a] += 1
            d[b] += 1
        return d

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_eulerian(self) -> bool:
        """Every vertex has even degree (circles are always even)."""
        return all(d % 2 == 0 for d in self.degrees())


EMPTY_GRAPH = MultiGraph(0)


def circle_graph(n: int = 1) -> MultiGraph:
    """n disjoint vertexless circles."""
    return MultiGraph(0, (), n)


def cycle_graph(n: int) -> MultiGraph:
    """The cycle on n vertices; n=1 is a loop, n=2 a pair of parallel edges."""
    if n < 1:
        raise ValueError("cycle length must be positive")
    if n == 1:
        return MultiGraph(1, ((0, 0),))
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


@dataclass(frozen=True)
class Fragment:
    """A graph with an ordered list of labeled degree-one vertices.

    Label i (1-based) is ``labels[i-1]``; the edge incident with a labeled
    vertex is the open end carrying that label.  A graph is the t=0 case.
    """

    graph: MultiGraph
    labels: tuple = ()

    def __post_init__(self):
        labels = tuple(int(v) for v in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise ValueError("labeled vertices must be distinct")
        degs = self.graph.degrees()
        for v in labels:
            if not 0 <= v < self.graph.n_vertices:
                raise ValueError(f"labeled vertex {v} out of range")
            if degs[v] != 1:
                raise ValueError(f"labeled vertex {v} has degree {degs[v]}, not 1")

    @property
    def t(self) -> int:
        return len(self.labels)

    def open_end(self, pos: int) -> tuple[int, int]:
        """(edge id, side) of the open end at label position pos (0-based)."""
        v = self.labels[pos]
        for e, (a, b) in enumerate(self.graph.edges):
            if a == v:
                return e, 0
            if b == v:
                return e, 1
        raise AssertionError("labeled vertex with no incident edge")


def as_fragment(g) -> Fragment:
    if isinstance(g, Fragment):
        return g
    if isinstance(g, MultiGraph):
        return Fragment(g, ())
    raise TypeError(f"expected MultiGraph or Fragment, got {type(g).__name__}")


def is_eulerian_subset(frag, subset) -> bool:
    """Every unlabeled vertex has even subset-degree (loops count twice)."""
    frag = as_fragment(frag)
    labeled = set(frag.labels)
    deg = defaultdict(int)
    for e in subset:
        a, b = frag.graph.edges[e]
        deg[a] += 1
        deg[b] += 1
    return all(d % 2 == 0 for v, d in deg.items() if v not in labeled)


def enumerate_eulerian_subsets(frag) -> list[frozenset]:
    """All edge subsets whose unlabeled vertices have even subset-degree.

    Includes the empty set; for a plain graph these are exactly the members
    of the cycle space (the even subgraphs).
    """
    frag = as_fragment(frag)
    m = frag.graph.n_edges
    out = []
    for mask in range(1 << m):
        subset = frozenset(e for e in range(m) if mask >> e & 1)
        if is_eulerian_subset(frag, subset):
            out.append(subset)
    return out


@dataclass(frozen=True)
class EulerianState:
    """An Eulerian orientation plus a compatible local pairing of a subset.

    ``orientation[e]`` is True when edge e runs first->second endpoint; the
    pairing maps each unlabeled vertex to ordered (incoming, outgoing)
    half-edge pairs.  Open ends at labeled vertices are oriented but never
    paired.
    """

    subset: frozenset
    orientation: dict
    pairing: dict


def is_incoming(state: EulerianState, he: HalfEdge) -> bool:
    e, side = he
    head_side = 1 if state.orientation[e] else 0
    return side == head_side


def _vertex_of(graph: MultiGraph, he: HalfEdge) -> int:
    e, side = he
    return graph.edges[e][side]


def eulerian_state(frag, subset, seed: int = 0) -> EulerianState:
    """Build a valid orientation and compatible pairing for an Eulerian subset.

    The walk peels directed trails between labeled vertices first and then
    circuits; the seed permutes half-edge visit order, so different seeds
    reach different valid states (which is what the invariance tests need).
    """
    frag = as_fragment(frag)
    g = frag.graph
    subset = frozenset(subset)
    if not is_eulerian_subset(frag, subset):
        raise ValueError("subset is not Eulerian: some unlabeled vertex has odd degree")
    rng = random.Random(seed)
    labeled = set(frag.labels)

    unused = defaultdict(list)
    for e in sorted(subset):
        a, b = g.edges[e]
        unused[a].append((e, 0))
        unused[b].append((e, 1))
    for v in unused:
        rng.shuffle(unused[v])

    orientation = {}
    pairing = defaultdict(list)

    def orient_out(he):
        e, side = he
        orientation[e] = side == 0

    def partner(he):
        return (he[0], 1 - he[1])

    # trails: start at labeled vertices whose open end lies in the subset
    starts = [v for v in frag.labels if unused[v]]
    rng.shuffle(starts)
    for v0 in starts:
        if not unused[v0]:
            continue  # already consumed as the far end of an earlier trail
        h = unused[v0].pop()
        orient_out(h)
        while True:
            hp = partner(h)
            w = _vertex_of(g, hp)
            unused[w].remove(hp)
            if w in labeled:
                break
            hn = rng.choice(unused[w])
            unused[w].remove(hn)
            pairing[w].append((hp, hn))
            orient_out(hn)
            h = hn

    # circuits on the remaining half-edges (all at unlabeled vertices now)
    while True:
        rem = sorted(v for v in unused if unused[v])
        if not rem:
            break
        v0 = rng.choice(rem)
        h0 = rng.choice(unused[v0])
        unused[v0].remove(h0)
        orient_out(h0)
        h = h0
        while True:
            hp = partner(h)
            w = _vertex_of(g, hp)
            unused[w].remove(hp)
            if w == v0:
                # closing with the reserved start half-edge is always an option
                pick = rng.randrange(len(unused[w]) + 1)
                if pick == len(unused[w]):
                    pairing[w].append((hp, h0))
                    break
                hn = unused[w][pick]
            else:
                hn = rng.choice(unused[w])
            unused[w].remove(hn)
            pairing[w].append((hp, hn))
            orient_out(hn)
            h = hn

    return EulerianState(
        subset, orientation, {v: tuple(ps) for v, ps in pairing.items()}
    )


def validate_state(frag, state: EulerianState) -> None:
    """Raise ValueError unless the state is a valid (orientation, pairing)."""
    frag = as_fragment(frag)
    g = frag.graph
    labeled = set(frag.labels)
    if not is_eulerian_subset(frag, state.subset):
        raise ValueError("state subset is not Eulerian")
    if set(state.orientation) != set(state.subset):
        raise ValueError("orientation must cover exactly the subset edges")
    seen = defaultdict(list)
    for v, pairs in state.pairing.items():
        if v in labeled:
            if pairs:
                raise ValueError(f"labeled vertex {v} must not carry pairings")
            continue
        for hin, hout in pairs:
            for he in (hin, hout):
                e, side = he
                if e not in state.subset:
                    raise ValueError(f"paired half-edge {he} outside subset")
                if _vertex_of(g, he) != v:
                    raise ValueError(f"half-edge {he} paired at wrong vertex {v}")
            if not is_incoming(state, hin):
                raise ValueError(f"first half-edge of pair {(hin, hout)} not incoming")
            if is_incoming(state, hout):
                raise ValueError(f"second half-edge of pair {(hin, hout)} not outgoing")
            seen[v].append(hin)
            seen[v].append(hout)
    expected = defaultdict(list)
    for e in state.subset:
        a, b = g.edges[e]
        if a not in labeled:
            expected[a].append((e, 0))
        if b not in labeled:
            expected[b].append((e, 1))
    for v in set(expected) | set(seen):
        if sorted(expected[v]) != sorted(seen[v]):
            raise ValueError(f"pairing at vertex {v} does not partition its half-edges")


@dataclass(frozen=True)
class Walk:
    """One circuit or trail of a pairing's walk decomposition."""

    kind: str  # "trail" | "circuit"
    start_label: int | None  # 1-based label numbers, None for circuits
    end_label: int | None
    edges: tuple
    steps: tuple  # ((vertex, (in_he, out_he)), ...) at interior vertices


def walk_decomposition(frag, state: EulerianState) -> list[Walk]:
    """Trace the circuits and labeled-to-labeled trails of a state."""
    frag = as_fragment(frag)
    g = frag.graph
    labeled = set(frag.labels)
    label_no = {v: i + 1 for i, v in enumerate(frag.labels)}
    out_of = {}
    for v, pairs in state.pairing.items():
        for hin, hout in pairs:
            out_of[hin] = (v, hout)
    used_pairs = set()
    walks = []

    def trace(h_start):
        """Follow pairings from an outgoing half-edge until a trail ends or
        the walk returns to h_start."""
        edges = [h_start[0]]
        steps = []
        h = h_start
        while True:
            hp = (h[0], 1 - h[1])
            w = _vertex_of(g, hp)
            if w in labeled:
                return edges, steps, label_no[w]
            v, hout = out_of[hp]
            if hout == h_start:
                steps.append((v, (hp, hout)))
                return edges, steps, None
            used_pairs.add((v, hp, hout))
            steps.append((v, (hp, hout)))
            edges.append(hout[0])
            h = hout

    for pos, v in enumerate(frag.labels):
        if v not in labeled:
            continue
        hes = [
            (e, s)
            for e, (a, b) in enumerate(g.edges)
            for s, u in ((0, a), (1, b))
            if u == v and e in state.subset
        ]
        if not hes:
            continue
        (he,) = hes
        if is_incoming(state, he):
            continue  # trail is traced from its start label
        edges, steps, end = trace(he)
        walks.append(Walk("trail", pos + 1, end, tuple(edges), tuple(steps)))

    for v in sorted(state.pairing):
        for hin, hout in state.pairing[v]:
            if (v, hin, hout) in used_pairs:
                continue
            # an unused pair belongs to a circuit; start the walk at hout
            edges, steps, end = trace(hout)
            assert end is None
            for s_v, (s_in, s_out) in steps:
                used_pairs.add((s_v, s_in, s_out))
            walks.append(Walk("circuit", None, None, tuple(edges), tuple(steps)))

    return walks


def decompose(state: EulerianState, frag) -> tuple[int, tuple]:
    """Count circuits and list the directed label-to-label trails.

    Returns (number of circuits, ((from_label, to_label), ...)) with labels
    1-based; the trail arcs form the directed perfect matching induced on the
    labels touched by the subset.
    """
    walks = walk_decomposition(frag, state)
    circuits = sum(1 for w in walks if w.kind == "circuit")
    trails = tuple(
        (w.start_label, w.end_label) for w in walks if w.kind == "trail"
    )
    return circuits, trails


def flip_walk(frag, state: EulerianState, walk: Walk) -> EulerianState:
    """Invert one walk: reverse its arcs and swap its pairings.

    The result is again a valid state for the same subset (the reversed walk
    is traversed in the opposite direction).
    """
    frag = as_fragment(frag)
    orientation = dict(state.orientation)
    for e in walk.edges:
        orientation[e] = not orientation[e]
    flipped = {(v, pair) for v, pair in walk.steps}
    pairing = {}
    for v, pairs in state.pairing.items():
        new_pairs = []
        for hin, hout in pairs:
            if (v, (hin, hout)) in flipped:
                new_pairs.append((hout, hin))
            else:
                new_pairs.append((hin, hout))
        pairing[v] = tuple(new_pairs)
    new_state = EulerianState(state.subset, orientation, pairing)
    validate_state(frag, new_state)
    return new_state


# -- gluing and unions ------------------------------------------------------


@dataclass(frozen=True)
class GlueResult:
    """A glued graph plus provenance maps from the two fragments' edges.

    Each map sends an old edge id to ("edge", new id) or ("circle", index);
    ``new_circles`` counts the circles created by label-to-label closures
    (input circles carry over in front of them).
    """

    graph: MultiGraph
    edge_map1: dict
    edge_map2: dict
    new_circles: int


def glue_with_maps(f1: Fragment, f2: Fragment) -> GlueResult:
    """Glue equal labels of two t-fragments, tracking edge provenance.

    Labeled vertices disappear; open ends with equal labels fuse into single
    edges, and chains of open-open edges that close up through labels alone
    become circles.
    """
    f1, f2 = as_fragment(f1), as_fragment(f2)
    if f1.t != f2.t:
        raise ValueError(f"cannot glue fragments with t={f1.t} and t={f2.t}")
    frags = (f1, f2)

    vmap = [{}, {}]
    nxt = 0
    for fi, fr in enumerate(frags):
        lab = set(fr.labels)
        for v in range(fr.graph.n_vertices):
            if v not in lab:
                vmap[fi][v] = nxt
                nxt += 1
    label_pos = [{v: i for i, v in enumerate(fr.labels)} for fr in frags]

    def end_desc(fi, e, side):
        v = frags[fi].graph.edges[e][side]
        if v in label_pos[fi]:
            return ("p", (fi, label_pos[fi][v]))
        return ("v", vmap[fi][v])

    attach = {}
    open_edges = set()
    for fi, fr in enumerate(frags):
        for e, (a, b) in enumerate(fr.graph.edges):
            for side, v in ((0, a), (1, b)):
                if v in label_pos[fi]:
                    attach[(fi, label_pos[fi][v])] = (fi, e, side)
                    open_edges.add((fi, e))

    new_edges = []
    emap = [{}, {}]
    for fi, fr in enumerate(frags):
        for e, (a, b) in enumerate(fr.graph.edges):
            if (fi, e) not in open_edges:
                emap[fi][e] = ("edge", len(new_edges))
                new_edges.append((vmap[fi][a], vmap[fi][b]))

    visited = set()
    # chains anchored at an internal vertex become single edges
    for fi in (0, 1):
        for e in range(frags[fi].graph.n_edges):
            if (fi, e) not in open_edges or (fi, e) in visited:
                continue
            d0, d1 = end_desc(fi, e, 0), end_desc(fi, e, 1)
            if d0[0] == "p" and d1[0] == "p":
                continue
            enter_side = 0 if d0[0] == "v" else 1
            start_v = end_desc(fi, e, enter_side)[1]
            chain = [(fi, e)]
            cur, side = (fi, e), enter_side
            while True:
                dd = end_desc(cur[0], cur[1], 1 - side)
                if dd[0] == "v":
                    end_v = dd[1]
                    break
                pfi, ppos = dd[1]
                nfi, ne, nside = attach[(1 - pfi, ppos)]
                cur, side = (nfi, ne), nside
                chain.append(cur)
            nid = len(new_edges)
            new_edges.append((start_v, end_v))
            for item in chain:
                visited.add(item)
                emap[item[0]][item[1]] = ("edge", nid)

    # what remains are pure label cycles: each one closes into a circle
    created = 0
    for fi in (0, 1):
        for e in range(frags[fi].graph.n_edges):
            if (fi, e) not in open_edges or (fi, e) in visited:
                continue
            cyc = [(fi, e)]
            cur, side = (fi, e), 0
            while True:
                pfi, ppos = end_desc(cur[0], cur[1], 1 - side)[1]
                nfi, ne, nside = attach[(1 - pfi, ppos)]
                if (nfi, ne) == (fi, e):
                    break
                cyc.append((nfi, ne))
                cur, side = (nfi, ne), nside
            for item in cyc:
                visited.add(item)
                emap[item[0]][item[1]] = ("circle", created)
            created += 1

    n_circles = f1.graph.n_circles + f2.graph.n_circles + created
    graph = MultiGraph(nxt, tuple(new_edges), n_circles)
    return GlueResult(graph, emap[0], emap[1], created)


def glue(f1: Fragment, f2: Fragment) -> MultiGraph:
    """The graph obtained by fusing equal-labeled open ends of two fragments."""
    return glue_with_maps(f1, f2).graph


def disjoint_union(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    shifted = tuple((a + g.n_vertices, b + g.n_vertices) for a, b in h.edges)
    return MultiGraph(
        g.n_vertices + h.n_vertices,
        g.edges + shifted,
        g.n_circles + h.n_circles,
    )


def build_G_pi(k: int, pi) -> MultiGraph:
    """Disjoint cycles C_{6c} over the cycle lengths c of a permutation of k+1.

    ``pi`` maps position to image; 0-based tuples of range(k+1) are expected
    (1-based permutations of [k+1] are accepted and normalized).
    """
    pi = tuple(int(x) for x in pi)
    n = k + 1
    if sorted(pi) == list(range(1, n + 1)):
        pi = tuple(x - 1 for x in pi)
    if sorted(pi) != list(range(n)):
        raise ValueError(f"not a permutation of {n} elements: {pi}")
    seen = [False] * n
    graph = EMPTY_GRAPH
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = pi[x]
            length += 1
        graph = disjoint_union(graph, cycle_graph(6 * length))
    return graph


# -- text format --------------------------------------------------------------


def parse_fragments(text: str) -> list[Fragment]:
    """Parse the one-declaration-per-line graph format, '#' starting comments.

    Each block begins with ``vertices N`` and may contain ``edge u v``,
    ``circle`` and ``label v`` lines; a new ``vertices`` line starts the next
    block.  Parsing is strict: unknown keywords, out-of-range ids, labels of
    degree != 1, and circles declared inside fragments are all errors.
    """
    blocks = []
    current = None

    def close(lineno):
        if current is None:
            return
        n, edges, circles, labels = current
        graph = MultiGraph(n, tuple(edges), circles)
        if labels and circles:
            raise ValueError(
                f"line {lineno}: fragments may not declare circle components"
            )
        try:
            blocks.append(Fragment(graph, tuple(labels)))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw, args = parts[0], parts[1:]
        if kw == "vertices":
            close(lineno)
            if len(args) != 1 or not args[0].isdigit():
                raise ValueError(f"line {lineno}: expected 'vertices N'")
            current = [int(args[0]), [], 0, []]
            continue
        if current is None:
            raise ValueError(f"line {lineno}: '{kw}' before any 'vertices' line")
        n = current[0]
        if kw == "edge":
            if len(args) != 2:
                raise ValueError(f"line {lineno}: expected 'edge u v'")
            try:
                u, v = int(args[0]), int(args[1])
            except ValueError:
                raise ValueError(f"line {lineno}: edge endpoints must be integers") from None
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"line {lineno}: edge endpoint out of range 0..{n - 1}")
            current[1].append((u, v))
        elif kw == "circle":
            if args:
                raise ValueError(f"line {lineno}: 'circle' takes no arguments")
            current[2] += 1
        elif kw == "label":
            if len(args) != 1:
                raise ValueError(f"line {lineno}: expected 'label v'")
            try:
                v = int(args[0])
            except ValueError:
                raise ValueError(f"line {lineno}: label vertex must be an integer") from None
            if not 0 <= v < n:
                raise ValueError(f"line {lineno}: label vertex out of range 0..{n - 1}")
            current[3].append(v)
        else:
            raise ValueError(f"line {lineno}: unknown keyword '{kw}'")
    close("end")
    return blocks


def parse_graph(text: str) -> MultiGraph:
    """Parse a file holding exactly one unlabeled graph block."""
    blocks = parse_fragments(text)
    if len(blocks) != 1:
        raise ValueError(f"expected exactly one graph block, found {len(blocks)}")
    frag = blocks[0]
    if frag.t:
        raise ValueError("expected a plain graph, found a fragment with labels")
    return frag.graph


def format_fragment(frag) -> str:
    """Render a graph or fragment in the text format."""
    frag = as_fragment(frag)
    lines = [f"vertices {frag.graph.n_vertices}"]
    lines += [f"edge {a} {b}" for a, b in frag.graph.edges]
    lines += ["circle"] * frag.graph.n_circles
    lines += [f"label {v}" for v in frag.labels]
    return "\n".join(lines) + "\n"
