"""Edge-coloring models: sparse exact functionals on color patterns.

A (k, 2*ell)-color model assigns a Gaussian-rational weight to every local
pattern (multiset of symmetric colors, wedge of exterior colors) a vertex can
see.  Entries are stored canonically: exterior indices strictly increasing,
absent key meaning weight zero.  Requests with dual-flagged (g) positions are
resolved at evaluation time so all sign bookkeeping lives in one place.

Weights with infinite support (e.g. "weight t on every pure-symmetric
pattern") are materialized up to an explicit per-vertex degree cap; the cap
makes evaluation total without changing any value, and evaluating past it is
an error rather than a silent zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    GaussianRational,
    I,
    ZERO,
    as_gaussian,
    double_factorial_odd,
    normalize_wedge,
    sym_counts,
)


@dataclass(frozen=True)
class LocalEvaluationRequest:
    """One vertex's color pattern: symmetric colors plus flagged wedge word.

    ``ext`` entries are (index, is_dual) pairs; a dual flag requests the
    g-vector instead of the f-vector at that position.
    """

    sym: tuple
    ext: tuple


class EdgeColoringModel:
    """A finitely supported functional on (k, 2*ell) color patterns."""

    __slots__ = ("k", "two_ell", "entries", "cap")

    def __init__(self, k: int, two_ell: int, entries, cap: int | None = None):
        if k < 0:
            raise ValueError("k must be nonnegative")
        if two_ell < 0 or two_ell % 2:
            raise ValueError("two_ell must be even and nonnegative")
        if cap is not None and cap < 0:
            raise ValueError("degree cap must be nonnegative")
        self.k = k
        self.two_ell = two_ell
        self.cap = cap
        table = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for item in items:
            if isinstance(entries, dict):
                (sym, ext), value = item
            else:
                sym, ext, value = item
            sym = tuple(int(c) for c in sym)
            ext = tuple(int(i) for i in ext)
            if len(sym) != k or any(c < 0 for c in sym):
                raise ValueError(f"bad symmetric counts vector {sym} for k={k}")
            if any(not 1 <= i <= two_ell for i in ext):
                raise ValueError(f"exterior index out of range in {ext}")
            if any(ext[a] >= ext[a + 1] for a in range(len(ext) - 1)):
                raise ValueError(f"exterior indices not strictly increasing: {ext}")
            value = as_gaussian(value)
            if value:
                table[(sym, ext)] = value
        self.entries = table

    def __eq__(self, other):
        if not isinstance(other, EdgeColoringModel):
            return NotImplemented
        return (
            self.k == other.k
            and self.two_ell == other.two_ell
            and self.cap == other.cap
            and self.entries == other.entries
        )

    def __repr__(self):
        return (
            f"EdgeColoringModel(k={self.k}, two_ell={self.two_ell}, "
            f"{len(self.entries)} entries, cap={self.cap})"
        )

    def value(self, sym: tuple, ext: tuple) -> GaussianRational:
        """Raw lookup of a canonical entry (absent means zero)."""
        return self.entries.get((tuple(sym), tuple(ext)), ZERO)

    def evaluate(self, sym_colors, ext_positions) -> GaussianRational:
        """Weight of a local pattern, resolving duals and wedge signs.

        ``sym_colors`` is a multiset of colors in [1, k]; ``ext_positions``
        a sequence of (index, is_dual) pairs.  Repeated exterior factors give
        zero; a request beyond the degree cap is an error.
        """
        sym_colors = tuple(sym_colors)
        ext_positions = tuple(ext_positions)
        if self.cap is not None and len(sym_colors) + len(ext_positions) > self.cap:
            raise ValueError(
                f"request of degree {len(sym_colors) + len(ext_positions)} "
                f"exceeds the model's degree cap {self.cap}"
            )
        counts = sym_counts(sym_colors, self.k)
        sign, ext = normalize_wedge(ext_positions, self.two_ell)
        if sign == 0:
            return ZERO
        val = self.entries.get((counts, ext))
        if val is None:
            return ZERO
        return val if sign > 0 else -val


def evaluate_local(model: EdgeColoringModel, request: LocalEvaluationRequest) -> GaussianRational:
    return model.evaluate(request.sym, request.ext)


# -- built-in models ----------------------------------------------------------


def matchings_model(cap: int = 8) -> EdgeColoringModel:
    """The (2,0) model whose ordinary partition function counts matchings.

    Weight 1 on every pattern seeing color 2 at most once, zero otherwise;
    the edges colored 2 then range exactly over the matchings.
    """
    entries = []
    for n1 in range(cap + 1):
        entries.append(((n1, 0), (), 1))
        if n1 + 1 <= cap:
            entries.append(((n1, 1), (), 1))
    return EdgeColoringModel(2, 0, entries, cap=cap)


def charpoly_model(t, cap: int = 8) -> EdgeColoringModel:
    """The (2,2) model whose mixed partition function is det(tI - A).

    Weights: t on pure e_1 powers, sqrt(-1) on patterns with a single e_2,
    and 1 on e_1 powers wedged with f_1 ^ g_1 (stored canonically as -1 at
    f_1 ^ f_2).  Everything else is zero.
    """
    t = as_gaussian(t)
    entries = []
    for d in range(cap + 1):
        if t:
            entries.append(((d, 0), (), t))
        if d + 1 <= cap:
            entries.append(((d, 1), (), I))
        if d + 2 <= cap:
            entries.append(((d, 0), (1, 2), -1))
    return EdgeColoringModel(2, 2, entries, cap=cap)


def circuit_pos_model(k: int, cap: int = 8) -> EdgeColoringModel:
    """The (k,0) model evaluating the circuit partition polynomial at k.

    Weight is the product of (alpha_i - 1)!! over the color multiplicities,
    with the even-argument double factorial defined as zero, so only
    all-even patterns survive.
    """
    if k < 1:
        raise ValueError("circuit_pos_model needs k >= 1")
    entries = []
    for total in range(0, cap + 1, 2):
        for alpha in _compositions(total, k):
            weight = 1
            for a in alpha:
                weight *= double_factorial_odd(a - 1)
            if weight:
                entries.append((alpha, (), weight))
    return EdgeColoringModel(k, 0, entries, cap=cap)


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def circuit_neg_model(ell: int) -> EdgeColoringModel:
    """The (0, 2*ell) model evaluating the circuit partition polynomial at -2*ell.

    Weight 1 on each wedge of f_i ^ g_i over a subset S of [ell]; expanding
    g_i = -f_{i+ell} and sorting stores the entry at the canonical index set
    with the accumulated sign.  Support is genuinely finite, so no cap.
    """
    if ell < 1:
        raise ValueError("circuit_neg_model needs ell >= 1")
    entries = []
    for r in range(ell + 1):
        for subset in itertools.combinations(range(1, ell + 1), r):
            positions = []
            for i in subset:
                positions.append((i, False))
                positions.append((i, True))
            sign, ext = normalize_wedge(positions, 2 * ell)
            entries.append(((), ext, sign))
    return EdgeColoringModel(0, 2 * ell, entries)


def tensor_model(h0: EdgeColoringModel, h1: EdgeColoringModel) -> EdgeColoringModel:
    """Componentwise product of a purely symmetric and a purely exterior model."""
    if h0.two_ell != 0:
        raise ValueError("first tensor factor must be purely symmetric (two_ell=0)")
    if h1.k != 0:
        raise ValueError("second tensor factor must be purely exterior (k=0)")
    entries = []
    for (sym, _), v0 in h0.entries.items():
        for (_, ext), v1 in h1.entries.items():
            entries.append((sym, ext, v0 * v1))
    return EdgeColoringModel(h0.k, h1.two_ell, entries, cap=h0.cap)


def circuit_odd_model(ell: int, cap: int = 8) -> EdgeColoringModel:
    """The (1, 2*ell) tensor model evaluating the circuit polynomial at 1-2*ell."""
    return tensor_model(circuit_pos_model(1, cap=cap), circuit_neg_model(ell))


# -- JSON format and CLI model specs ------------------------------------------


def model_to_json(model: EdgeColoringModel) -> dict:
    entries = [
        {"sym": list(sym), "ext": list(ext), "value": value.to_json()}
        for (sym, ext), value in sorted(model.entries.items())
    ]
    return {
        "k": model.k,
        "two_ell": model.two_ell,
        "cap": model.cap,
        "entries": entries,
    }


def model_from_json(obj: dict) -> EdgeColoringModel:
    try:
        k = int(obj["k"])
        two_ell = int(obj["two_ell"])
    except (KeyError, TypeError, ValueError):
        raise ValueError("model JSON needs integer 'k' and 'two_ell'") from None
    cap = obj.get("cap")
    if cap is not None:
        cap = int(cap)
    entries = []
    for item in obj.get("entries", []):
        entries.append(
            (
                tuple(item["sym"]),
                tuple(item["ext"]),
                GaussianRational.from_json(item["value"]),
            )
        )
    return EdgeColoringModel(k, two_ell, entries, cap=cap)


BUILTIN_MODELS = ("matchings", "charpoly", "circuit-pos", "circuit-neg", "circuit-odd")


def model_from_spec(spec: str, cap: int = 8) -> EdgeColoringModel:
    """Build a named model from a CLI spec like "charpoly?t=3/2".

    Known names: matchings, charpoly?t=..., circuit-pos?k=...,
    circuit-neg?l=..., circuit-odd?l=... .
    """
    name, _, query = spec.partition("?")
    params = {}
    if query:
        for piece in query.split("&"):
            key, eq, value = piece.partition("=")
            if not eq:
                raise ValueError(f"malformed model parameter '{piece}'")
            params[key] = value
    try:
        if name == "matchings":
            _expect_keys(params, ())
            return matchings_model(cap=cap)
        if name == "charpoly":
            _expect_keys(params, ("t",))
            return charpoly_model(GaussianRational.from_string(params["t"]), cap=cap)
        if name == "circuit-pos":
            _expect_keys(params, ("k",))
            return circuit_pos_model(int(params["k"]), cap=cap)
        if name == "circuit-neg":
            _expect_keys(params, ("l",))
            return circuit_neg_model(int(params["l"]))
        if name == "circuit-odd":
            _expect_keys(params, ("l",))
            return circuit_odd_model(int(params["l"]), cap=cap)
    except KeyError as exc:
        raise ValueError(f"model '{name}' is missing parameter {exc}") from None
    raise ValueError(f"unknown model '{name}' (known: {', '.join(BUILTIN_MODELS)})")


def _expect_keys(params, allowed):
    extra = set(params) - set(allowed)
    if extra:
        raise ValueError(f"unexpected model parameters: {', '.join(sorted(extra))}")
