from __future__ import annotations

import json
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from skein_torus.cli import run

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def _registry() -> Registry:
    resources = []
    for p in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(p.read_text())
        resources.append((p.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validator(name: str) -> Draft202012Validator:
    return Draft202012Validator(json.loads((SCHEMAS / f"{name}.schema.json").read_text()), registry=REGISTRY)


@pytest.mark.parametrize("path", sorted(SCHEMAS.glob("*.schema.json")), ids=lambda p: p.name)
def test_schema_is_valid(path):
    Draft202012Validator.check_schema(json.loads(path.read_text()))


TRI = ('{"edges": [{"id": "a", "boundary": true}, {"id": "b", "boundary": true}, '
       '{"id": "c", "boundary": true}], "faces": [{"type": "tri", "sides": ["a", "b", "c"]}]}')
FAMILY = '[{"type": 3, "counts": {"a12": 1}, "twists": [1, 0, 0]}, {"type": 3, "counts": {"a13": 1}}]'

CASES = [
    (["trace", "pants", "--type", "2", "--component", "a11", "--twist", "1"], "element"),
    (["trace", "multicurve", "--diagram", '{"type": 3, "counts": {"l1": 1, "a23": 1}}'], "element"),
    (["surface", "phi", "--builtin", "2,0", "--family", FAMILY], "element"),
    (["tri", "matrix", "--tri", TRI, "--doubled"], "form"),
    (["tri", "member", "--tri", TRI, "--n", "2,2,2,2,2,2"], "membership"),
    (["coords", "member", "--type", "1", "--n", "0", "--t", "-1"], "membership"),
    (["coords", "decompose", "--type", "3", "--n", "2,0,0", "--t", "0,2,0"], "diagram"),
    (["coords", "normalize", "--builtin", "2,0", "--family", FAMILY], "family"),
    (["presented", "monogon-mul", "--a", '{"terms": [{"a": 0, "b": 1, "coeff": 1}]}',
      "--b", '{"terms": [{"a": 1, "b": 0, "coeff": 1}]}'], "monogon"),
    (["presented", "sigma02-mul", "--a", '{"p1": 1}', "--b", '{"p0": 1, "p1": 1}'], "sigma02"),
    (["verify", "--suite", "gkdim"], "verify"),
    (["coords", "decompose", "--type", "1", "--n", "0", "--t", "-1"], "error"),
]


@pytest.mark.parametrize("argv, schema", CASES, ids=[" ".join(c[0][:2]) + f" -> {c[1]}" for c in CASES])
def test_cli_output_matches_schema(capsys, argv, schema):
    run(argv)
    validator(schema).validate(json.loads(capsys.readouterr().out))


def test_split_pieces_match_face_coord_schema(capsys):
    run(["coords", "split", "--builtin", "2,0", "--n", "0,0,2", "--t", "4,0,0"])
    v = validator("face-coord")
    for piece in json.loads(capsys.readouterr().out):
        v.validate(piece)
