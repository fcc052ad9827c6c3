import json

import pytest

import wildforms
from wildforms import Form


def test_parse_and_print_round_trip():
    f = Form.parse("x0*x1^2 + x1*x2*x4 + x3*x4^2")
    assert f.nvars == 5
    assert f.degree == 3
    again = Form.parse(str(f))
    assert f == again


def test_catalog_hilbert_functions():
    assert Form.named("H5").hilbert_function() == [1, 5, 7, 7, 5, 1]
    assert Form.named("Ikeda").hilbert_function() == [1, 4, 10, 10, 4, 1]
    assert Form.named("Perazzo").hilbert_function() == [1, 5, 5, 1]


def test_conciseness_and_bounds():
    g3 = Form.gd(3)
    assert g3.is_concise()
    assert g3.rank_lower_bound() == 5
    assert g3.hessian_vanishes(seed=7)
    assert not Form.parse("x0^3 + x1^3 + x2^3").hessian_vanishes(seed=7)


def test_wildness_verdicts():
    rep = wildforms.analyze("G3", certify_family=True, seed=11)
    assert rep["wildness"]["verdict"] == "Wild"
    assert rep["wildness"]["certificate"] == "verified-decomposition(5)"

    fermat = wildforms.analyze("x0^3 + x1^3 + x2^3", seed=11)
    assert fermat["wildness"]["verdict"] == "NotWild"

    h5 = wildforms.analyze("H5", seed=11)
    assert h5["wildness"]["verdict"] == "NotApplicable"
    assert h5["wildness"]["reason"] == "NonMinimalBorderRank"


def test_decomposition_round_trip():
    dec = wildforms.gd_decomposition_json(3)
    parsed = json.loads(dec)
    assert parsed["s"] == 1
    assert len(parsed["summands"]) == 5
    assert wildforms.verify_decomposition(dec, Form.gd(3))

    scheme = wildforms.limiting_scheme(dec, Form.gd(3))
    assert scheme["length"] == 5
    assert scheme["contained_in_annihilator"]


def test_fn_decomposition():
    dec = wildforms.fn_decomposition_json(7)
    assert wildforms.verify_decomposition(dec, Form.fn(7))
    assert len(json.loads(dec)["summands"]) == 8


def test_annihilator_and_algebra():
    gens = Form.parse("x0^2*x1", 2).annihilator_generators()
    assert sorted(gens) == ["y0^3", "y1^2"]
    alg = wildforms.apolar_algebra_json(Form.parse("x0^3 + x1^3"))
    assert wildforms.is_gorenstein(alg)


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        Form.parse("x0^2 +")
    with pytest.raises(ValueError):
        Form.named("nope")
