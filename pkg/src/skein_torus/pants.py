"""Closed-form quantum traces of strongly simple diagrams in the three pants.

The target torus of a P_j face has generators x_1..x_j, u_1..u_j with
x_{i+1} x_i = q x_i x_{i+1} (cyclically for j = 3), commuting u's and
u_i x_k = q^{delta_ik} x_k u_i.  Exponent vectors are (n_1..n_j, t_1..t_j).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from .dt import FaceDiagram, _check_tag, bold_endpoints, face_coord, mod3
from .errors import MalformedData
from .ground import GroundScalar, q_pow
from .torus import AntisymForm, DegreeFunctional, TorusElement, lead_term, reflection_normalize


@lru_cache(maxsize=None)
def pants_form(face_type: int) -> AntisymForm:
    j = face_type
    gens = [f"x{i}" for i in range(1, j + 1)] + [f"u{i}" for i in range(1, j + 1)]
    entries: dict[tuple[str, str], int] = {}
    if j == 3:
        for i in (1, 2, 3):
            entries[(f"x{mod3(i + 1)}", f"x{i}")] = 1
    elif j == 2:
        entries[("x2", "x1")] = 1
    for i in range(1, j + 1):
        entries[(f"u{i}", f"x{i}")] = 1
    return AntisymForm.from_entries(gens, entries)


@lru_cache(maxsize=None)
def pants_degree_functional(face_type: int) -> DegreeFunctional:
    j = face_type
    n_sum = [1] * j + [0] * j
    t_sum = [0] * j + [1] * j
    third = [0] * (2 * j)
    if j == 2:
        third[j] = 1
    return DegreeFunctional.from_rows([n_sum, t_sum, third])


def pants_degree(face_type: int, k: Sequence[int]) -> tuple[int, ...]:
    return pants_degree_functional(face_type)(k)


Term = tuple[str, tuple[int, ...], tuple[int, ...]]  # (coefficient kind, x part, u part)


def _e(j: int, *pairs: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * j
    for i, val in pairs:
        v[i - 1] += val
    return tuple(v)


def _base_terms(face_type: int, tag: str) -> list[Term]:
    """Untwisted traces as sums of Weyl monomials."""
    j = face_type
    z = (0,) * j
    if tag.startswith("l"):
        i = int(tag[1])
        return [("1", z, _e(j, (i, 2))), ("1", z, _e(j, (i, -2)))]
    a, b = int(tag[1]), int(tag[2])
    if j == 3:
        if a != b:
            return [("1", _e(3, (a, 1), (b, 1)), z)]
        i = a
        x = _e(3, (i, 2))
        return [("1", x, _e(3, (mod3(i + 1), 2))),
                ("1", x, _e(3, (i, 2), (mod3(i + 2), -2)))]
    if j == 2:
        table = {
            "a12": [("1", (1, 1), z)],
            "a13": [("1", (1, 0), z), ("1", (1, 0), (-2, 2))],
            "a23": [("1", (0, 1), z)],
            "a11": [("1", (2, 0), (2, 0)), ("1", (2, 0), (-2, 4)), ("q+1/q", (2, 0), (0, 2))],
            "a22": [("1", (0, 2), z)],
        }
        return table[tag]
    table1 = {
        "a23": [("1", z, (1,)), ("1", z, (-1,))],
        "a12": [("1", (1,), z)],
        "a13": [("1", (1,), (-1,))],
        "a11": [("1", (2,), z)],
    }
    return table1[tag]


def _coeff(kind: str) -> GroundScalar:
    return GroundScalar.const(1) if kind == "1" else q_pow(1) + q_pow(-1)


def _twist_vector(face_type: int, tag: str, m: int | Sequence[int]) -> tuple[int, ...]:
    if isinstance(m, int):
        sides = bold_endpoints(face_type, tag)
        v = [0] * face_type
        if sides and m:
            v[sides[0] - 1] = m
        return tuple(v)
    if len(m) != face_type:
        raise MalformedData(f"twist vector needs {face_type} entries")
    return tuple(m)


def trace_component(face_type: int, tag: str, m: int | Sequence[int] = 0) -> TorusElement:
    """Reflection-normalized trace of a standard curve after twisting.

    An integer ``m`` twists at the first bold side the curve meets; a vector
    gives one power per side.  Twisting a side the curve misses is a no-op.
    """
    _check_tag(face_type, tag)
    tw = _twist_vector(face_type, tag, m)
    meets = set(bold_endpoints(face_type, tag))
    shift = tuple(2 * p if (i + 1) in meets else 0 for i, p in enumerate(tw))
    form = pants_form(face_type)
    out: dict[tuple[int, ...], GroundScalar] = {}
    for kind, x, u in _base_terms(face_type, tag):
        k = x + tuple(a + s for a, s in zip(u, shift))
        out[k] = out[k] + _coeff(kind) if k in out else _coeff(kind)
    return TorusElement(form, out)


def u_square(face_type: int, i: int, sign: int = 1) -> TorusElement:
    return TorusElement.gen(pants_form(face_type), f"u{i}", 2 * sign)


def loop_element(face_type: int, i: int) -> TorusElement:
    return u_square(face_type, i) + u_square(face_type, i, -1)


TraceFn = Callable[[int, str, "int | Sequence[int]"], TorusElement]


def trace_recursion_check(face_type: int, tag: str, i: int, m: int, k: int,
                          trace_fn: TraceFn = trace_component) -> bool:
    """q^k f(m+2) - (u_i^2 + u_i^{-2}) f(m+1) + q^{-k} f(m) == 0 for twists at side i."""
    if k == 0:
        raise MalformedData("the recursion needs a curve meeting b_i")
    if i not in bold_endpoints(face_type, tag):
        raise MalformedData(f"{tag} does not meet b{i}")

    def f(p: int) -> TorusElement:
        return trace_fn(face_type, tag, _e(face_type, (i, p)))

    expr = (f(m + 2).scale(q_pow(k)) - loop_element(face_type, i) * f(m + 1)
            + f(m).scale(q_pow(-k)))
    return expr.is_zero()


def trace_multicurve(face_type: int, d: FaceDiagram) -> TorusElement:
    if d.face_type != face_type:
        raise MalformedData("face type mismatch")
    out = TorusElement.one(pants_form(face_type))
    for comp in d.components():
        out = out * trace_component(face_type, comp.tag, comp.twist)
    return reflection_normalize(out)


def highest_term_check(face_type: int, d: FaceDiagram) -> bool:
    """Single dominant term with exponent nu(d) and a q^{1/2}-power coefficient."""
    tr = trace_multicurve(face_type, d)
    lead = lead_term(tr, pants_degree_functional(face_type))
    if len(lead.terms) != 1:
        return False
    k, c = lead.terms[0]
    if k != face_coord(d).vector or not c.is_monomial():
        return False
    ((_, _), coef), = c.items()
    return coef == 1


def twist_diagram(d: FaceDiagram, i: int, power: int = 1) -> FaceDiagram:
    tw = list(d.twists)
    tw[i - 1] += power
    return FaceDiagram(d.face_type, d.counts, tuple(tw))


def twist_property_check(face_type: int, i: int, d: FaceDiagram) -> bool:
    """tr(theta_i(d)) == q^{-k} u_i^2 tr(d) with k = |d meets b_i|."""
    k = d.n[i - 1]
    if k == 0:
        raise MalformedData(f"diagram misses b{i}")
    lhs = trace_multicurve(face_type, twist_diagram(d, i))
    rhs = (u_square(face_type, i) * trace_multicurve(face_type, d)).scale(q_pow(-k))
    return lhs == rhs


def boundary_grading_check(face_type: int, d: FaceDiagram) -> bool:
    """Every term has x_i-degree equal to the number of endpoints on b_i."""
    n = d.n
    return all(k[:face_type] == n for k in trace_multicurve(face_type, d).terms)

