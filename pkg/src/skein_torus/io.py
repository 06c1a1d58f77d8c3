"""JSON and LaTeX encodings of the value types.

Scalars are lists of ``{"q2": int, "v2": [int, ...], "c": int}`` with doubled
exponents; a bare integer is accepted as a constant on input.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from .dt import FaceCoord, FaceDiagram, GlobalCoord
from .errors import MalformedData
from .ground import EMPTY, GroundScalar, VarSet
from .presented import MonogonElement, Sigma02Element, Sigma03Element, SIGMA02_VARS, SIGMA03_VARS
from .torus import AntisymForm, TorusElement
from .triangulation import Edge, Monogon, SurfaceData, Triangle, Triangulation


def load_json_arg(arg: str) -> Any:
    """Inline JSON when the text starts with '{' or '[', otherwise a file path."""
    text = arg.strip()
    if text[:1] in ("{", "["):
        source = text
    else:
        path = Path(arg)
        if not path.is_file():
            raise MalformedData(f"no such file: {arg}")
        source = path.read_text()
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise MalformedData(f"invalid JSON in {arg[:40]!r}: {exc}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# -- scalars -----------------------------------------------------------------

def scalar_to_json(s: GroundScalar) -> list[dict]:
    return [{"q2": q2, "v2": list(v2), "c": c} for (q2, v2), c in s.items()]


def scalar_from_json(obj: Any, varset: VarSet = EMPTY) -> GroundScalar:
    if isinstance(obj, int):
        return GroundScalar.const(obj, varset)
    if not isinstance(obj, list):
        raise MalformedData("a scalar is an integer or a list of terms")
    try:
        return GroundScalar([((int(t["q2"]), tuple(t.get("v2", [0] * len(varset)))), int(t["c"]))
                             for t in obj], varset)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedData(f"bad scalar term: {exc}") from None


# -- torus ---------------------------------------------------------------------

def form_to_json(f: AntisymForm) -> dict:
    return {"generators": list(f.gens), "matrix": [list(r) for r in f.mat]}


def form_from_json(obj: Mapping) -> AntisymForm:
    try:
        return AntisymForm.from_rows(obj["generators"], obj["matrix"])
    except (KeyError, TypeError) as exc:
        raise MalformedData(f"bad form JSON: {exc}") from None


def element_to_json(a: TorusElement) -> dict:
    return {
        "generators": list(a.form.gens),
        "vars": list(a.varset.names),
        "terms": [{"exp": list(k), "coeff": scalar_to_json(c)} for k, c in a.items()],
    }


def element_from_json(obj: Mapping, form: AntisymForm) -> TorusElement:
    varset = VarSet(tuple(obj.get("vars", ())))
    try:
        terms = {tuple(t["exp"]): scalar_from_json(t["coeff"], varset) for t in obj["terms"]}
    except (KeyError, TypeError) as exc:
        raise MalformedData(f"bad element JSON: {exc}") from None
    return TorusElement(form, terms, varset)


# -- presented algebras ---------------------------------------------------------

def monogon_to_json(a: MonogonElement) -> dict:
    return {"terms": [{"a": a_, "b": b_, "coeff": scalar_to_json(c)}
                      for (a_, b_), c in sorted(a.terms.items())]}


def monogon_from_json(obj: Mapping) -> MonogonElement:
    try:
        return MonogonElement({(int(t["a"]), int(t["b"])): scalar_from_json(t["coeff"])
                               for t in obj["terms"]})
    except (KeyError, TypeError) as exc:
        raise MalformedData(f"bad monogon JSON: {exc}") from None


def sigma02_to_json(a: Sigma02Element) -> dict:
    return {"vars": list(SIGMA02_VARS.names), "p0": scalar_to_json(a.p0), "p1": scalar_to_json(a.p1)}


def sigma02_from_json(obj: Mapping) -> Sigma02Element:
    return Sigma02Element(scalar_from_json(obj.get("p0", 0), SIGMA02_VARS),
                          scalar_from_json(obj.get("p1", 0), SIGMA02_VARS))


def sigma03_to_json(a: Sigma03Element) -> dict:
    return {"vars": list(SIGMA03_VARS.names), "coeffs": [scalar_to_json(c) for c in a.coeffs]}


# -- triangulations ---------------------------------------------------------------

def triangulation_from_json(obj: Mapping) -> Triangulation:
    try:
        edges = tuple(Edge(str(e["id"]), bool(e.get("boundary", False))) for e in obj["edges"])
        faces = []
        for f in obj["faces"]:
            if f["type"] == "tri":
                faces.append(Triangle(tuple(str(s) for s in f["sides"])))
            elif f["type"] == "monogon":
                faces.append(Monogon(str(f["edge"])))
            else:
                raise MalformedData(f"unknown face type {f['type']!r}")
        surf = obj.get("surface")
        surface = (SurfaceData(int(surf["chi"]), int(surf["boundary_punctures"]), int(surf["circles"]))
                   if surf else None)
    except (KeyError, TypeError) as exc:
        raise MalformedData(f"bad triangulation JSON: {exc}") from None
    return Triangulation(edges, tuple(faces), surface)


def triangulation_to_json(T: Triangulation) -> dict:
    faces = [{"type": "tri", "sides": list(f.sides)} if isinstance(f, Triangle)
             else {"type": "monogon", "edge": f.edge} for f in T.faces]
    out: dict = {"edges": [{"id": e.id, "boundary": e.boundary} for e in T.edges], "faces": faces}
    if T.surface:
        out["surface"] = {"chi": T.surface.chi, "boundary_punctures": T.surface.boundary_punctures,
                          "circles": T.surface.circles}
    return out


# -- coordinates -------------------------------------------------------------------

def face_coord_to_json(c: FaceCoord) -> dict:
    return {"type": c.face_type, "n": list(c.n), "t": list(c.t)}


def global_coord_to_json(c: GlobalCoord) -> dict:
    return {"n": list(c.n), "t": list(c.t)}


def diagram_to_json(d: FaceDiagram) -> dict:
    return {"type": d.face_type, "counts": {t: c for t, c in d.counts}, "twists": list(d.twists)}


def diagram_from_json(obj: Mapping) -> FaceDiagram:
    try:
        return FaceDiagram.build(int(obj["type"]), dict(obj.get("counts", {})), obj.get("twists"))
    except (KeyError, TypeError) as exc:
        raise MalformedData(f"bad diagram JSON: {exc}") from None


# -- LaTeX -----------------------------------------------------------------------------

def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _gen_tex(name: str) -> str:
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if m:
        return f"{m.group(1)}_{m.group(2)}"
    if "_" in name:
        head, rest = name.split("_", 1)
        return f"{head}_{{{rest}}}"
    return name


def _power(base: str, e: Fraction | int) -> str:
    e = Fraction(e)
    return base if e == 1 else f"{base}^{{{_frac(e)}}}"


def scalar_latex(s: GroundScalar) -> str:
    if s.is_zero():
        return "0"
    parts = []
    for (q2, v2), c in sorted(s.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
        factors = []
        if q2:
            factors.append(_power("q", Fraction(q2, 2)))
        for name, e in zip(s.varset.names, v2):
            if e:
                factors.append(_power(_gen_tex(name), Fraction(e, 2)))
        body = " ".join(factors)
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{c} {body}")
    return " + ".join(parts).replace("+ -", "- ")


def _coeff_prefix(c: GroundScalar) -> str:
    if c == 1:
        return ""
    if c == -1:
        return "-"
    text = scalar_latex(c)
    return f"({text})" if len(c) > 1 else text + " "


def torus_latex(a: TorusElement) -> str:
    """Weyl monomials in generator order; brackets only around products."""
    if a.is_zero():
        return "0"
    parts = []
    for k, c in sorted(a.terms.items(), reverse=True):
        factors = [_power(_gen_tex(g), e) for g, e in zip(a.form.gens, k) if e]
        if not factors:
            mono = ""
        elif len(factors) == 1:
            mono = factors[0]
        else:
            mono = "[" + " ".join(factors) + "]_{W}"
        if not mono:
            parts.append(scalar_latex(c) if len(c) == 1 else f"({scalar_latex(c)})")
        else:
            parts.append(_coeff_prefix(c) + mono)
    return " + ".join(parts).replace("+ -", "- ")


def monogon_latex(a: MonogonElement) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for (i, j), c in sorted(a.terms.items(), reverse=True):
        factors = [f for f in (_power("u_+", i) if i else "", _power("u_-", j) if j else "") if f]
        mono = " ".join(factors)
        parts.append((_coeff_prefix(c) + mono) if mono else scalar_latex(c))
    return " + ".join(parts).replace("+ -", "- ")


def sigma02_latex(a: Sigma02Element) -> str:
    parts = []
    if not a.p0.is_zero():
        parts.append(scalar_latex(a.p0) if len(a.p0) == 1 else f"({scalar_latex(a.p0)})")
    if not a.p1.is_zero():
        parts.append(_coeff_prefix(a.p1) + r"\alpha")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def sigma03_latex(a: Sigma03Element) -> str:
    parts = []
    for i, c in enumerate(a.coeffs):
        if c.is_zero():
            continue
        if i == 0:
            parts.append(scalar_latex(c) if len(c) == 1 else f"({scalar_latex(c)})")
        else:
            parts.append(_coeff_prefix(c) + rf"\alpha_{i}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def emit_latex(value: Any) -> str:
    if isinstance(value, TorusElement):
        return torus_latex(value)
    if isinstance(value, MonogonElement):
        return monogon_latex(value)
    if isinstance(value, Sigma02Element):
        return sigma02_latex(value)
    if isinstance(value, Sigma03Element):
        return sigma03_latex(value)
    if isinstance(value, GroundScalar):
        return scalar_latex(value)
    raise TypeError(f"no LaTeX rendering for {type(value).__name__}")
