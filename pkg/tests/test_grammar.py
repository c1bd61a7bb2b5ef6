import json

import pytest
from hypothesis import given, settings

from conftest import green_elements, labels
from d4green.grammar import (
    ParseError,
    element_to_json,
    parse_element,
    parse_pres_element,
    pres_to_json,
    render_element,
    render_label,
    render_pres_element,
)
from d4green.green import ETA_INF, GreenElement, band, eta, omega, projective, simple_one, simple_two
from d4green.presentation import (
    PresElement,
    from_green,
    mono_band,
    mono_one,
    mono_x,
    mono_x2,
)


def test_parse_basic_terms():
    e = parse_element("[V(2,0)] + 2*[P(1)]")
    assert e == GreenElement([(simple_two(0), 1), (projective(1), 2)])


def test_parse_cosyzygy():
    assert parse_element("[O^-3V(1)]") == GreenElement.from_label(omega(-3, 1))


def test_parse_band_difference():
    e = parse_element("[M_2(0,5/7)] - [M_2(0,oo)]")
    assert e.coeff(band(2, 0, '5/7')) == 1
    assert e.coeff(band(2, 0, ETA_INF)) == -1


def test_parse_leading_sign():
    e = parse_element("-2*[V(0)] + [V(1)]")
    assert e.coeff(simple_one(0)) == -2
    assert e.coeff(simple_one(1)) == 1


def test_parse_negative_eta():
    assert parse_element("[M_1(1,-2)]") == GreenElement.from_label(band(1, 1, -2))


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_element("[V(3)]")
    assert err.value.pos == 3
    with pytest.raises(ParseError):
        parse_element("[O^0V(0)]")
    with pytest.raises(ParseError):
        parse_element("[M_0(0,1)]")
    with pytest.raises(ParseError):
        parse_element("[V(0)] ++ [V(1)]")
    with pytest.raises(ParseError):
        parse_element("2[V(0)]")


def test_render_zero():
    assert render_element(GreenElement.zero()) == "0"


def test_render_orders_canonically():
    e = GreenElement([(omega(1, 1), 1), (projective(1), 3)])
    assert render_element(e) == "3*[P(1)] + [O^1V(1)]"


def test_render_negative_leading_term():
    e = GreenElement([(simple_one(0), -2), (projective(0), 1)])
    assert render_element(e) == "-2*[V(0)] + [P(0)]"


@given(labels(max_s=12))
@settings(max_examples=150)
def test_label_round_trip(label):
    assert parse_element(render_label(label)) == GreenElement.from_label(label)


@given(green_elements(max_s=6))
@settings(max_examples=150)
def test_element_round_trip(e):
    assert parse_element(render_element(e)) == e


def test_json_schema():
    e = parse_element("[M_2(0,5/7)] + 2*[O^-1V(0)]")
    payload = element_to_json(e)
    assert payload == {
        "terms": [
            {"label": {"kind": "cosyzygy", "r": 0, "s": 1}, "coeff": 2},
            {"label": {"kind": "band", "r": 0, "s": 2, "eta": "5/7"}, "coeff": 1},
        ]
    }
    # deterministic serialisation
    assert json.dumps(payload) == json.dumps(element_to_json(parse_element(render_element(e))))


def test_pres_parse_normalises():
    assert parse_pres_element("y*z") == PresElement(
        [(mono_one(), 1), (mono_x2(), 2)]
    )
    assert parse_pres_element("x^3") == PresElement([(mono_x(), 2), (mono_x(1), 2)])
    assert parse_pres_element("g*g") == PresElement.unit()
    assert parse_pres_element("X_{2,1/3}") == PresElement.from_monomial(mono_band(2, '1/3'))
    assert parse_pres_element("1 + 2*x^2 - 12*g") == PresElement(
        [(mono_one(), 1), (mono_x2(), 2), (mono_one(1), -12)]
    )


def test_pres_parse_errors():
    with pytest.raises(ParseError):
        parse_pres_element("w")
    with pytest.raises(ParseError):
        parse_pres_element("X_{0,1}")
    with pytest.raises(ParseError):
        parse_pres_element("x**2")


def test_pres_render_round_trip():
    e = parse_element("[O^2V(1)] - [P(0)] + 3*[M_1(1,oo)]")
    p = from_green(e)
    assert parse_pres_element(render_pres_element(p)) == p


def test_pres_json():
    p = parse_pres_element("2*g*y^2 - x")
    payload = pres_to_json(p)
    kinds = [t["monomial"]["kind"] for t in payload["terms"]]
    assert kinds == ["x", "y"]
    assert payload["terms"][1]["monomial"] == {"g": 1, "kind": "y", "n": 2}
