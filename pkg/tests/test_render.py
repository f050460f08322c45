import json

import pytest

from mzvfrac import (
    FracTerm,
    LinComb,
    closed_form_product,
    euler_decomposition,
    lincomb_from_json,
    lincomb_to_json,
    render_lincomb,
)
from mzvfrac.render import latex_variable, term_latex


def test_text_rendering():
    lc = euler_decomposition(2, 2)
    assert (
        render_lincomb(lc, "text")
        == "<2,2;m,n> + 2*<3,1;m,n> + <2,2;n,m> + 2*<3,1;n,m>"
    )
    assert render_lincomb(LinComb(), "text") == "0"
    neg = LinComb([(FracTerm((2,), ("u",)), -1), (FracTerm((3,), ("u",)), 1)])
    assert render_lincomb(neg, "text") == "-<2;u> + <3;u>"


def test_latex_variable_subscripts():
    assert latex_variable("u1") == "u_{1}"
    assert latex_variable("u12") == "u_{12}"
    assert latex_variable("m") == "m"
    assert latex_variable("var_2") == "var\\_2"


def test_term_latex():
    term = FracTerm((3, 1), ("m", "n"))
    assert term_latex(term, 2) == "\\frac{2}{(m+n)^{3}n}"
    assert term_latex(FracTerm((2,), ("u1",))) == "\\frac{1}{u_{1}^{2}}"
    assert term_latex(FracTerm((), ()), 5) == "5"


def test_latex_three_fraction_terms():
    lc = closed_form_product(
        FracTerm((1,), ("u1",)), FracTerm((1, 1), ("v1", "v2"))
    )
    rendered = render_lincomb(lc, "latex")
    assert rendered.count("\\frac") == 3
    assert "\\frac{1}{(u_{1}+v_{1}+v_{2})(v_{1}+v_{2})v_{2}}" in rendered


def test_json_schema_and_round_trip():
    lc = euler_decomposition(2, 2)
    emitted = lincomb_to_json(lc)
    payload = json.loads(emitted)
    assert payload == {
        "terms": [
            {"coef": "1", "s": [2, 2], "u": ["m", "n"]},
            {"coef": "2", "s": [3, 1], "u": ["m", "n"]},
            {"coef": "1", "s": [2, 2], "u": ["n", "m"]},
            {"coef": "2", "s": [3, 1], "u": ["n", "m"]},
        ]
    }
    parsed = lincomb_from_json(emitted)
    assert parsed == lc
    assert lincomb_to_json(parsed) == emitted  # byte-identical


def test_json_handles_empty_and_unit():
    assert json.loads(lincomb_to_json(LinComb())) == {"terms": []}
    unit = LinComb.single(FracTerm((), ()), 3)
    round_tripped = lincomb_from_json(lincomb_to_json(unit))
    assert round_tripped == unit


def test_json_rejects_bad_payloads():
    with pytest.raises(ValueError):
        lincomb_from_json('{"terms":[{"coef":"1","s":[0],"u":["u"]}]}')
    with pytest.raises(ValueError):
        lincomb_from_json('{"terms":[{"coef":"1","s":[1,1],"u":["u"]}]}')


def test_unknown_format():
    with pytest.raises(ValueError):
        render_lincomb(LinComb(), "html")
