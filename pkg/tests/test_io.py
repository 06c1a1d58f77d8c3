from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skein_torus.dt import FaceDiagram
from skein_torus.errors import MalformedData
from skein_torus.io import (
    diagram_from_json,
    diagram_to_json,
    dumps,
    element_from_json,
    element_to_json,
    form_from_json,
    form_to_json,
    load_json_arg,
    monogon_from_json,
    monogon_to_json,
    scalar_from_json,
    scalar_to_json,
    triangulation_from_json,
    triangulation_to_json,
)
from skein_torus.presented import monogon_word
from skein_torus.triangulation import ideal_triangle, monogon, punctured_torus, square

from strategies import elements, forms, scalars


@given(scalars)
def test_scalar_round_trip(s):
    assert scalar_from_json(json.loads(dumps(scalar_to_json(s)))) == s


@given(st.data())
def test_element_and_form_round_trip(data):
    f = data.draw(forms())
    a = data.draw(elements(f))
    g = form_from_json(json.loads(dumps(form_to_json(f))))
    assert g == f
    assert element_from_json(json.loads(dumps(element_to_json(a))), g) == a


def test_monogon_round_trip():
    a = monogon_word([-1, 1, -1, 1])
    assert monogon_from_json(monogon_to_json(a)) == a


@pytest.mark.parametrize("T", [ideal_triangle(), monogon(), square(), punctured_torus()])
def test_triangulation_round_trip(T):
    assert triangulation_from_json(json.loads(dumps(triangulation_to_json(T)))) == T


def test_diagram_round_trip():
    d = FaceDiagram.build(2, {"a12": 1, "a11": 1}, (3, -1))
    assert diagram_from_json(diagram_to_json(d)) == d


def test_malformed_inputs(tmp_path):
    with pytest.raises(MalformedData):
        load_json_arg("{not json")
    with pytest.raises(MalformedData):
        load_json_arg(str(tmp_path / "missing.json"))
    with pytest.raises(MalformedData):
        scalar_from_json("q")
    with pytest.raises(MalformedData):
        triangulation_from_json({"edges": [{"id": "a"}], "faces": [{"type": "hexagon"}]})


def test_dumps_is_key_sorted():
    assert dumps({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}'
