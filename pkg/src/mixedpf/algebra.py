"""Exact scalars in Q(i) and the basis bookkeeping shared by the whole engine.

Everything downstream (partition functions, Gram tensors, matrix ranks) is
computed in the field Q(i); nothing in this package ever rounds.  This module
also owns the dual exterior basis, normalization of wedge words into the
canonical strictly-increasing form, and the supersymmetric bilinear form on
the mixed color space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _component(x):
    # integral values are kept as plain ints: their arithmetic is an order of
    # magnitude faster than Fraction's, and most engine values are integers
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _div_exact(a, b):
    """a / b for int-or-Fraction components, never leaving exact arithmetic."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        q, r = divmod(a, b)
        if not r:
            return q
        return Fraction(a, b)
    result = Fraction(a) / Fraction(b)
    return result.numerator if result.denominator == 1 else result


class GaussianRational:
    """An element a + b*i of Q(i) with exact rational components.

    Components are plain ints when integral and ``Fraction`` otherwise
    (always in lowest terms with positive denominator).  Instances are
    immutable by convention (never mutate ``re``/``im``) and are therefore
    safe to share freely across parallel workers.  Equality and hashing agree
    with plain ints and Fractions whenever ``im == 0``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _component(re)
        self.im = _component(im)

    # -- construction / serialization ------------------------------------

    @classmethod
    def from_string(cls, s: str) -> "GaussianRational":
        """Parse the format produced by ``str``: "3", "-1/2", "i", "2-3/4i"."""
        text = s.strip().replace(" ", "")
        if not text:
            raise ValueError("empty Gaussian rational literal")
        if not text.endswith("i"):
            return cls(Fraction(text))
        body = text[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "", body
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = Fraction(im_part)
        re = Fraction(re_part) if re_part else Fraction(0)
        return cls(re, im)

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if isinstance(obj, str):
            return cls.from_string(obj)
        if isinstance(obj, int):
            return cls(obj)
        if isinstance(obj, dict):
            return cls(Fraction(obj.get("re", "0")), Fraction(obj.get("im", "0")))
        raise ValueError(f"cannot read Gaussian rational from {obj!r}")

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return _gr(self.re, -self.im)

    def norm(self):
        """The field norm a^2 + b^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return _gr(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return _gr(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return _gr(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return _gr(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return _gr(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return _gr(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            b, d = self.im, other.im
            if not b:
                if not d:
                    return _gr(self.re * other.re, 0)
                return _gr(self.re * other.re, self.re * d)
            a, c = self.re, other.re
            if not d:
                return _gr(a * c, b * c)
            return _gr(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return _gr(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return _gr(_div_exact(self.re, n), _div_exact(-self.im, n))

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            if not other.im:
                return _gr(
                    _div_exact(self.re, other.re), _div_exact(self.im, other.re)
                )
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return _gr(_div_exact(self.re, other), _div_exact(self.im, other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = _gr(Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        if not self.re:
            return imag if self.im > 0 else f"-{imag}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{imag}"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"


def _gr(re: Fraction, im: Fraction) -> GaussianRational:
    # fast path: skip Fraction coercion when components are already exact
    g = GaussianRational.__new__(GaussianRational)
    g.re = re
    g.im = im
    return g


#: the square root of -1
I = GaussianRational(0, 1)

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def as_gaussian(x) -> GaussianRational:
    """Coerce an int, Fraction or GaussianRational to GaussianRational."""
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def double_factorial_odd(n: int) -> int:
    """n * (n-2) * ... * 1 for odd n >= -1; 0 for even n >= 0.

    The empty product gives (-1)!! = 1, and even arguments are defined to be
    zero (that convention is what makes the circuit-counting weights below
    vanish on odd-degree color patterns).
    """
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    if n % 2 == 0:
        return 0
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def dual_basis(i: int, ell: int) -> tuple[int, int]:
    """The dual g_i of the exterior basis vector f_i, as a signed index.

    Returns (sign, j) with g_i = sign * f_j:  (-1, i+ell) when i <= ell and
    (+1, i-ell) when i > ell.  Indices are 1-based and must lie in [1, 2*ell].
    """
    if not 1 <= i <= 2 * ell:
        raise ValueError(f"exterior index {i} out of range [1, {2 * ell}]")
    if i <= ell:
        return (-1, i + ell)
    return (1, i - ell)


def normalize_wedge(positions, two_ell: int) -> tuple[int, tuple[int, ...]]:
    """Normalize a wedge word into canonical strictly-increasing form.

    ``positions`` is a sequence of (index, is_dual) pairs; dual entries are
    expanded through :func:`dual_basis` first.  Returns (sign, indices) where
    sign is +-1 and carries both the dual expansion and the sorting
    transpositions; sign 0 (with an empty tuple) means a factor repeats and
    the wedge vanishes.
    """
    ell = two_ell // 2
    sign = 1
    idx = []
    for j, dual in positions:
        if dual:
            s, j = dual_basis(j, ell)
            if s < 0:
                sign = -sign
        elif not 1 <= j <= two_ell:
            raise ValueError(f"exterior index {j} out of range [1, {two_ell}]")
        idx.append(j)
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        val = idx[a]
        b = a - 1
        while b >= 0 and idx[b] > val:
            idx[b + 1] = idx[b]
            b -= 1
            sign = -sign
        idx[b + 1] = val
    for a in range(len(idx) - 1):
        if idx[a] == idx[a + 1]:
            return 0, ()
    return sign, tuple(idx)


def sym_counts(colors, k: int) -> tuple[int, ...]:
    """Turn a multiset of symmetric colors in [1, k] into a counts vector."""
    counts = [0] * k
    for c in colors:
        if not 1 <= c <= k:
            raise ValueError(f"symmetric color {c} out of range [1, {k}]")
        counts[c - 1] += 1
    return tuple(counts)


@dataclass(frozen=True)
class MixedVector:
    """A vector in the (k + 2*ell)-dimensional mixed color space.

    The first k coordinates live in the symmetric block, the last 2*ell in
    the exterior block.
    """

    k: int
    two_ell: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.k + self.two_ell:
            raise ValueError("MixedVector entry count does not match k + 2*ell")
        object.__setattr__(
            self, "entries", tuple(as_gaussian(x) for x in self.entries)
        )

    @classmethod
    def zero(cls, k: int, two_ell: int) -> "MixedVector":
        return cls(k, two_ell, (ZERO,) * (k + two_ell))

    @classmethod
    def e_basis(cls, k: int, two_ell: int, i: int) -> "MixedVector":
        """The i-th symmetric basis vector (1-based)."""
        if not 1 <= i <= k:
            raise ValueError(f"symmetric index {i} out of range [1, {k}]")
        entries = [ZERO] * (k + two_ell)
        entries[i - 1] = ONE
        return cls(k, two_ell, tuple(entries))

    @classmethod
    def f_basis(cls, k: int, two_ell: int, i: int) -> "MixedVector":
        """The i-th exterior basis vector (1-based)."""
        if not 1 <= i <= two_ell:
            raise ValueError(f"exterior index {i} out of range [1, {two_ell}]")
        entries = [ZERO] * (k + two_ell)
        entries[k + i - 1] = ONE
        return cls(k, two_ell, tuple(entries))

    def __add__(self, other):
        if not isinstance(other, MixedVector):
            return NotImplemented
        if (self.k, self.two_ell) != (other.k, other.two_ell):
            raise ValueError("MixedVector shape mismatch")
        return MixedVector(
            self.k,
            self.two_ell,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def scaled(self, c) -> "MixedVector":
        c = as_gaussian(c)
        return MixedVector(self.k, self.two_ell, tuple(c * x for x in self.entries))


def super_bilinear_form(x: MixedVector, y: MixedVector) -> GaussianRational:
    """[x, y]: symmetric on the k-block, skew-symplectic on the 2*ell-block.

    The exterior part pairs through the block matrix ((0, I), (-I, 0)), so
    <f_i, f_{i+ell}> = 1 = -<f_{i+ell}, f_i> and the whole form is
    nondegenerate.
    """
    if (x.k, x.two_ell) != (y.k, y.two_ell):
        raise ValueError("MixedVector shape mismatch in bilinear form")
    k, ell = x.k, x.two_ell // 2
    total = ZERO
    for a in range(k):
        total = total + x.entries[a] * y.entries[a]
    for j in range(ell):
        # <x, y> += x_j * y_{j+ell} - x_{j+ell} * y_j on the exterior block
        total = total + x.entries[k + j] * y.entries[k + ell + j]
        total = total - x.entries[k + ell + j] * y.entries[k + j]
    return total
