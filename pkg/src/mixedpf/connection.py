"""Edge-connection matrices, matching signs and fragment Gram tensors.

The rank story: the connection matrix of a mixed partition function is the
Gram matrix, under the supersymmetric bilinear form, of one tensor per
fragment living in the (k+2*ell)^t-dimensional mixed color space.  This
module builds those tensors, the signs of directed perfect matchings they
need, the pairing itself, and exact ranks of finite connection submatrices.

One convention deserves a note: the tensor prefactor attached to a subset
touching |S| labels is i^(|S|/2) (principal root).  For |S| divisible by 4
this is the real sign (-1)^(|S|/4); for |S| = 2 mod 4 it is the imaginary
unit, which is exactly what makes the two fragments' prefactors multiply to
(-1)^(|S|/2) and cancel the symplectic pairing signs at the glued labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import GaussianRational, I, ONE, ZERO, as_gaussian, dual_basis
from .evaluator import _SubsetContext, partition_function
from .graph import (
    EulerianState,
    Fragment,
    as_fragment,
    decompose,
    eulerian_state,
    glue,
    is_eulerian_subset,
    is_incoming,
    validate_state,
)
from .linalg import matrix_rank
from .models import EdgeColoringModel


def permutation_sign(perm) -> int:
    """Sign of a permutation given as a tuple of images (0-based)."""
    perm = tuple(perm)
    inversions = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class DirectedMatching:
    """A directed perfect matching on its ground set of integers."""

    arcs: tuple

    def __post_init__(self):
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        seen = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"matching arc ({u},{v}) is a loop")
            for x in (u, v):
                if x in seen:
                    raise ValueError(f"element {x} covered twice")
                seen.add(x)

    def ground_set(self) -> frozenset:
        return frozenset(x for arc in self.arcs for x in arc)


def matching_sign(m: DirectedMatching, n: DirectedMatching) -> int:
    """Sign of any permutation sending one matching's arc set to the other's.

    Computed without searching permutations: (-1)^(c + o) where c counts
    components of the arc union and o is the flip parity needed to make the
    union an Eulerian digraph (well defined because every component is an
    even cycle).
    """
    if m.ground_set() != n.ground_set():
        raise ValueError("matchings live on different ground sets")
    arcs = list(m.arcs) + list(n.arcs)
    if not arcs:
        return 1
    incident = {}
    for idx, (u, v) in enumerate(arcs):
        incident.setdefault(u, []).append(idx)
        incident.setdefault(v, []).append(idx)
    visited = [False] * len(arcs)
    components = 0
    flips = 0
    for start in range(len(arcs)):
        if visited[start]:
            continue
        components += 1
        visited[start] = True
        u0, v0 = arcs[start]
        cur, prev = v0, start
        while cur != u0:
            (nxt,) = [a for a in incident[cur] if a != prev]
            visited[nxt] = True
            x, y = arcs[nxt]
            if x == cur:
                cur = y
            else:
                flips += 1
                cur = x
            prev = nxt
    return -1 if (components + flips) % 2 else 1


def canonical_matching_sign(m: DirectedMatching) -> int:
    """Sign of m against (s1,s2),(s3,s4),... on its sorted ground set."""
    elements = sorted(m.ground_set())
    canonical = DirectedMatching(
        tuple((elements[a], elements[a + 1]) for a in range(0, len(elements), 2))
    )
    return matching_sign(m, canonical)


@dataclass(frozen=True)
class FragmentTensor:
    """A dense vector in the t-fold tensor power of the mixed color space."""

    t: int
    k: int
    two_ell: int
    coeffs: tuple

    def __post_init__(self):
        base = self.k + self.two_ell
        if len(self.coeffs) != base**self.t:
            raise ValueError("coefficient vector has wrong dimension")
        object.__setattr__(self, "coeffs", tuple(as_gaussian(c) for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, FragmentTensor):
            return NotImplemented
        if (self.t, self.k, self.two_ell) != (other.t, other.k, other.two_ell):
            raise ValueError("tensor shape mismatch")
        return FragmentTensor(
            self.t,
            self.k,
            self.two_ell,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    @classmethod
    def zero(cls, t: int, k: int, two_ell: int) -> "FragmentTensor":
        return cls(t, k, two_ell, (ZERO,) * (k + two_ell) ** t)


def fragment_tensor(
    frag: Fragment,
    subset,
    model: EdgeColoringModel,
    state: EulerianState | None = None,
) -> FragmentTensor:
    """The Gram tensor of a fragment and one of its Eulerian subsets.

    Coefficients collect, over all colorings, the product of internal-vertex
    weights times one basis vector per label: the symmetric color's vector at
    labels off the subset, and the exterior color's f (incoming) or g
    (outgoing, expanded to a signed f) at labels on it.  The whole tensor is
    scaled by i^(|S|/2), the sign of the trail matching, and the circuit
    parity.
    """
    frag = as_fragment(frag)
    subset = frozenset(subset)
    if not is_eulerian_subset(frag, subset):
        raise ValueError("subset is not Eulerian")
    if state is None:
        state = eulerian_state(frag, subset, 0)
    else:
        if frozenset(state.subset) != subset:
            raise ValueError("state was built for a different subset")
        validate_state(frag, state)

    k, two_ell = model.k, model.two_ell
    ell = two_ell // 2
    base = k + two_ell
    t = frag.t

    circuits, trails = decompose(state, frag)
    prefactor = ONE
    if trails:
        prefactor = I ** len(trails)  # i^(|S|/2): one factor per trail
        if canonical_matching_sign(DirectedMatching(trails)) < 0:
            prefactor = -prefactor
    if circuits % 2:
        prefactor = -prefactor

    slots = []
    for pos in range(t):
        e, side = frag.open_end(pos)
        if e in subset:
            kind = "f" if is_incoming(state, (e, side)) else "g"
        else:
            kind = "e"
        slots.append((kind, e))

    coeffs = [ZERO] * base**t

    def collect(colors, product):
        idx = 0
        negate = False
        for kind, e in slots:
            c = colors[e]
            if kind == "e":
                coord = c - 1
            elif kind == "f":
                coord = k + c - 1
            else:
                s, j = dual_basis(c, ell)
                if s < 0:
                    negate = not negate
                coord = k + j - 1
            idx = idx * base + coord
        coeffs[idx] = coeffs[idx] - product if negate else coeffs[idx] + product

    ctx = _SubsetContext(frag, subset, state, k, two_ell)
    ctx.run(model, collect)
    if prefactor != 1:
        coeffs = [prefactor * c for c in coeffs]
    return FragmentTensor(t, k, two_ell, tuple(coeffs))


def gram_pairing(t1: FragmentTensor, t2: FragmentTensor) -> GaussianRational:
    """The supersymmetric form applied factorwise across the t tensor slots."""
    if (t1.t, t1.k, t1.two_ell) != (t2.t, t2.k, t2.two_ell):
        raise ValueError("tensor shape mismatch in Gram pairing")
    k, two_ell, t = t1.k, t1.two_ell, t1.t
    ell = two_ell // 2
    base = k + two_ell
    partner = list(range(base))
    sign = [1] * base
    for j in range(1, two_ell + 1):
        p = k + j - 1
        if j <= ell:
            partner[p] = k + j + ell - 1
        else:
            partner[p] = k + j - ell - 1
            sign[p] = -1

    total = ZERO
    for idx, val in enumerate(t1.coeffs):
        if not val:
            continue
        rem = idx
        coords = []
        for _ in range(t):
            coords.append(rem % base)
            rem //= base
        coords.reverse()
        midx = 0
        s = 1
        for c in coords:
            midx = midx * base + partner[c]
            s *= sign[c]
        other = t2.coeffs[midx]
        if other:
            term = val * other
            total = total + term if s > 0 else total - term
    return total


@dataclass(frozen=True)
class ConnectionMatrix:
    """A finite edge-connection submatrix over an explicit fragment family."""

    t: int
    fragments: tuple
    entries: tuple  # rows of GaussianRational

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.entries) + "\n"


def connection_matrix(
    fragments, model: EdgeColoringModel, mode: str = "mixed"
) -> ConnectionMatrix:
    """Entries f(F_i * F_j) of the partition function over glued pairs.

    Partition functions are isomorphism-invariant and gluing is symmetric,
    so only the upper triangle is evaluated and mirrored.
    """
    fragments = tuple(as_fragment(f) for f in fragments)
    if not fragments:
        return ConnectionMatrix(0, (), ())
    t = fragments[0].t
    if any(f.t != t for f in fragments):
        raise ValueError("all fragments must share the same number of labels")
    n = len(fragments)
    rows = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            value = partition_function(glue(fragments[a], fragments[b]), model, mode).value
            rows[a][b] = value
            rows[b][a] = value
    return ConnectionMatrix(t, fragments, tuple(tuple(row) for row in rows))


def exact_rank(matrix: ConnectionMatrix) -> int:
    """Rank over Q(i) via fraction-free elimination with exact pivoting."""
    return matrix_rank(matrix.entries)


def dglrs_constraint_sum(f, k: int) -> GaussianRational:
    """Signed sum of a graph parameter over the 6-cycle permutation family.

    For each permutation of k+1 elements, the test graph is the disjoint
    union of cycles C_(6c) over its cycle lengths; an ordinary k-color
    partition function must sum these values, weighted by permutation signs,
    to zero.  Suitable oracles (determinant of the adjacency matrix) violate
    it, which is the certificate that they are not ordinary partition
    functions.
    """
    from .graph import build_G_pi

    total = ZERO
    for pi in itertools.permutations(range(k + 1)):
        value = as_gaussian(f(build_G_pi(k, pi)))
        total = total + value if permutation_sign(pi) > 0 else total - value
    return total
