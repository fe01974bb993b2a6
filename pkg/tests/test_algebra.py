"""Exact-arithmetic and basis-bookkeeping tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedpf.algebra import (
    GaussianRational,
    I,
    MixedVector,
    double_factorial_odd,
    dual_basis,
    normalize_wedge,
    super_bilinear_form,
    sym_counts,
)

rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
gaussians = st.builds(GaussianRational, rationals, rationals)


# -- GaussianRational ---------------------------------------------------------


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(gaussians)
def test_additive_and_multiplicative_inverse(a):
    assert a + (-a) == 0
    if a:
        assert a * a.inverse() == 1
        assert (a / a) == 1


@given(gaussians)
def test_string_roundtrip(a):
    assert GaussianRational.from_string(str(a)) == a


@given(gaussians)
def test_json_roundtrip(a):
    assert GaussianRational.from_json(a.to_json()) == a


@pytest.mark.parametrize(
    "text,value",
    [
        ("0", GaussianRational(0)),
        ("-3/2", GaussianRational(Fraction(-3, 2))),
        ("i", I),
        ("-i", -I),
        ("2i", GaussianRational(0, 2)),
        ("1+i", GaussianRational(1, 1)),
        ("1/2-3/4i", GaussianRational(Fraction(1, 2), Fraction(-3, 4))),
    ],
)
def test_parse_examples(text, value):
    assert GaussianRational.from_string(text) == value


def test_parse_rejects_garbage():
    for bad in ("", "one", "1//2", "1+2"):
        with pytest.raises(ValueError):
            GaussianRational.from_string(bad)


def test_i_squared():
    assert I * I == -1
    assert I**2 == GaussianRational(-1)
    assert I**-1 == -I


def test_components_always_reduced():
    x = GaussianRational(Fraction(4, 2), Fraction(6, 4))
    assert x.re == 2 and x.im == Fraction(3, 2)
    y = x / 3
    assert Fraction(y.re).denominator == 3


def test_hash_matches_plain_numbers():
    assert hash(GaussianRational(7)) == hash(7)
    assert GaussianRational(7) == 7
    assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
    assert GaussianRational(1, 1) != 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)


# -- dual basis ---------------------------------------------------------------


@pytest.mark.parametrize(
    "i,ell,expected",
    [
        (1, 2, (-1, 3)),
        (3, 2, (1, 1)),
        (2, 1, (1, 1)),
    ],
)
def test_dual_basis_examples(i, ell, expected):
    assert dual_basis(i, ell) == expected


@pytest.mark.parametrize("i,ell", [(0, 2), (5, 2), (1, 0)])
def test_dual_basis_range_errors(i, ell):
    with pytest.raises(ValueError):
        dual_basis(i, ell)


@given(st.integers(1, 6), st.data())
def test_dual_basis_involution(ell, data):
    i = data.draw(st.integers(1, 2 * ell))
    s1, j = dual_basis(i, ell)
    s2, back = dual_basis(j, ell)
    assert back == i
    assert s1 * s2 == -1


# -- double factorial ---------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(5, 15), (4, 0), (-1, 1), (1, 1), (7, 105), (0, 0)])
def test_double_factorial(n, expected):
    assert double_factorial_odd(n) == expected


def test_double_factorial_domain():
    with pytest.raises(ValueError):
        double_factorial_odd(-2)


# -- bilinear form ------------------------------------------------------------


def test_bilinear_form_basis_examples():
    e1 = MixedVector.e_basis(1, 2, 1)
    assert super_bilinear_form(e1, e1) == 1
    f1 = MixedVector.f_basis(1, 2, 1)
    f2 = MixedVector.f_basis(1, 2, 2)
    assert super_bilinear_form(f1, f2) == 1
    assert super_bilinear_form(f2, f1) == -1
    assert super_bilinear_form(f1, f1) == 0


def test_symmetry_split_on_basis():
    k, two_ell = 2, 4
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            x, y = MixedVector.e_basis(k, two_ell, a), MixedVector.e_basis(k, two_ell, b)
            assert super_bilinear_form(x, y) == super_bilinear_form(y, x)
    for a in range(1, two_ell + 1):
        for b in range(1, two_ell + 1):
            x, y = MixedVector.f_basis(k, two_ell, a), MixedVector.f_basis(k, two_ell, b)
            assert super_bilinear_form(x, y) == -super_bilinear_form(y, x)


def test_f_g_pairing_values():
    # <f_i, g_i> = -1 and <g_i, f_i> = 1 for every i
    for ell in (1, 2):
        two_ell = 2 * ell
        for i in range(1, two_ell + 1):
            sign, j = dual_basis(i, ell)
            f = MixedVector.f_basis(0, two_ell, i)
            g = MixedVector.f_basis(0, two_ell, j).scaled(sign)
            assert super_bilinear_form(f, g) == -1
            assert super_bilinear_form(g, f) == 1


@settings(max_examples=40)
@given(st.data())
def test_bilinearity(data):
    k, two_ell = 2, 2
    dim = k + two_ell
    vec = st.tuples(*[gaussians for _ in range(dim)])
    x = MixedVector(k, two_ell, data.draw(vec))
    xp = MixedVector(k, two_ell, data.draw(vec))
    y = MixedVector(k, two_ell, data.draw(vec))
    a = data.draw(gaussians)
    b = data.draw(gaussians)
    left = super_bilinear_form(x.scaled(a) + xp.scaled(b), y)
    right = a * super_bilinear_form(x, y) + b * super_bilinear_form(xp, y)
    assert left == right


def test_bilinear_form_shape_mismatch():
    with pytest.raises(ValueError):
        super_bilinear_form(MixedVector.zero(1, 2), MixedVector.zero(2, 2))


# -- wedge normalization --------------------------------------------------------


def test_normalize_wedge_sorting_and_duals():
    assert normalize_wedge([(1, False), (2, False)], 2) == (1, (1, 2))
    assert normalize_wedge([(2, False), (1, False)], 2) == (-1, (1, 2))
    assert normalize_wedge([(1, False), (1, False)], 2) == (0, ())
    # g_1 expands to -f_2
    assert normalize_wedge([(1, True)], 2) == (-1, (2,))
    assert normalize_wedge([(2, True)], 2) == (1, (1,))


def test_sym_counts():
    assert sym_counts((1, 1, 2), 2) == (2, 1)
    assert sym_counts((), 3) == (0, 0, 0)
    with pytest.raises(ValueError):
        sym_counts((3,), 2)
