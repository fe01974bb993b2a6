"""Model construction, local evaluation and serialization tests."""

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mixedpf.algebra import GaussianRational, I
from mixedpf.models import (
    EdgeColoringModel,
    LocalEvaluationRequest,
    charpoly_model,
    circuit_neg_model,
    circuit_odd_model,
    circuit_pos_model,
    evaluate_local,
    matchings_model,
    model_from_json,
    model_from_spec,
    model_to_json,
    tensor_model,
)


def single_entry_model():
    # k=1, two_ell=2, weight 1 on (e1^2, f1 ^ f2)
    return EdgeColoringModel(1, 2, [((2,), (1, 2), 1)])


def test_evaluate_local_examples():
    h = single_entry_model()
    assert h.evaluate((1, 1), ((2, False), (1, False))) == -1  # one transposition
    assert h.evaluate((1, 1), ((1, False), (1, True))) == -1  # g_1 = -f_2
    assert h.evaluate((1, 1), ((1, False), (1, False))) == 0  # repeated factor


def test_evaluate_local_request_wrapper():
    h = single_entry_model()
    req = LocalEvaluationRequest((1, 1), ((1, False), (2, False)))
    assert evaluate_local(h, req) == 1


def test_antisymmetry_under_swaps():
    h = single_entry_model()
    for a in (1, 2):
        for b in (1, 2):
            v1 = h.evaluate((1, 1), ((a, False), (b, False)))
            v2 = h.evaluate((1, 1), ((b, False), (a, False)))
            assert v1 == -v2 or (v1 == 0 and v2 == 0)


@given(st.integers(1, 2), st.integers(1, 4))
def test_dual_expansion_consistency(ell, i):
    two_ell = 2 * ell
    if i > two_ell:
        i = (i - 1) % two_ell + 1
    entries = [
        ((), tuple(range(1, r + 1)), 1) for r in range(1, two_ell + 1)
    ]
    h = EdgeColoringModel(0, two_ell, entries)
    dual = h.evaluate((), ((i, True),))
    if i <= ell:
        assert dual == -h.evaluate((), ((i + ell, False),))
    else:
        assert dual == h.evaluate((), ((i - ell, False),))


def test_out_of_range_rejected():
    h = single_entry_model()
    with pytest.raises(ValueError):
        h.evaluate((2,), ())
    with pytest.raises(ValueError):
        h.evaluate((), ((3, False),))


def test_cap_enforced():
    h = matchings_model(cap=3)
    with pytest.raises(ValueError, match="cap"):
        h.evaluate((1, 1, 1, 1), ())


def test_entry_validation():
    with pytest.raises(ValueError):
        EdgeColoringModel(1, 2, [((1,), (2, 1), 1)])  # not increasing
    with pytest.raises(ValueError):
        EdgeColoringModel(1, 2, [((1, 1), (), 1)])  # wrong sym length
    with pytest.raises(ValueError):
        EdgeColoringModel(1, 3, [])  # odd two_ell


# -- built-ins -----------------------------------------------------------------


def test_matchings_model_values():
    h = matchings_model(cap=4)
    assert h.evaluate((1, 1, 2), ()) == 1
    assert h.evaluate((2, 2), ()) == 0
    assert h.evaluate((), ()) == 1


def test_charpoly_model_values():
    h = charpoly_model(Fraction(3, 2), cap=4)
    assert h.evaluate((1, 1), ((1, False), (1, True))) == 1
    assert h.evaluate((1, 2), ()) == I
    assert h.evaluate((2, 2), ()) == 0
    assert h.evaluate((1, 1), ()) == Fraction(3, 2)


def test_charpoly_model_support():
    h = charpoly_model(2, cap=5)
    for (sym, ext) in h.entries:
        assert sym[1] in (0, 1)
        assert ext in ((), (1, 2))
        if ext:
            assert sym[1] == 0


def test_charpoly_model_zero_t_drops_entries():
    h = charpoly_model(0, cap=4)
    assert h.evaluate((1, 1), ()) == 0


def test_circuit_pos_model_values():
    h1 = circuit_pos_model(1, cap=6)
    assert h1.evaluate((1, 1, 1, 1), ()) == 3  # (4-1)!! = 3
    assert h1.evaluate((1, 1, 1), ()) == 0  # odd degree vanishes
    h2 = circuit_pos_model(2, cap=6)
    assert h2.evaluate((1, 1, 2, 2), ()) == 1


def test_circuit_neg_model_values():
    h = circuit_neg_model(1)
    assert h.evaluate((), ((1, False), (1, True))) == 1
    assert h.evaluate((), ((1, False), (2, False))) == -1
    h2 = circuit_neg_model(2)
    assert h2.evaluate((), ((1, False), (2, True))) == 0
    assert h2.evaluate((), ((1, False), (1, True), (2, False), (2, True))) == 1


def test_tensor_model_values():
    h = tensor_model(circuit_pos_model(1, cap=4), circuit_neg_model(1))
    assert h.evaluate((1, 1), ((1, False), (1, True))) == 1
    assert h.evaluate((), ()) == 1
    assert h.evaluate((1, 1, 1), ((1, False),)) == 0
    assert h == circuit_odd_model(1, cap=4)


def test_tensor_model_rejects_mixed_inputs():
    with pytest.raises(ValueError):
        tensor_model(circuit_neg_model(1), circuit_neg_model(1))
    with pytest.raises(ValueError):
        tensor_model(circuit_pos_model(1), circuit_pos_model(1))


# -- serialization and specs ------------------------------------------------------


def test_model_json_roundtrip():
    h = charpoly_model(Fraction(-5, 3), cap=5)
    blob = json.dumps(model_to_json(h))
    assert model_from_json(json.loads(blob)) == h


def test_model_json_format_shape():
    obj = model_to_json(circuit_neg_model(1))
    assert obj["k"] == 0 and obj["two_ell"] == 2 and obj["cap"] is None
    entry = obj["entries"][0]
    assert set(entry) == {"sym", "ext", "value"}
    assert set(entry["value"]) == {"re", "im"}


@pytest.mark.parametrize(
    "spec",
    ["matchings", "charpoly?t=0", "charpoly?t=-3/2", "circuit-pos?k=2", "circuit-neg?l=1", "circuit-odd?l=1"],
)
def test_model_specs_parse(spec):
    h = model_from_spec(spec, cap=6)
    assert isinstance(h, EdgeColoringModel)


def test_model_spec_errors():
    with pytest.raises(ValueError):
        model_from_spec("unknown")
    with pytest.raises(ValueError):
        model_from_spec("charpoly")  # missing t
    with pytest.raises(ValueError):
        model_from_spec("matchings?bogus=1")
