from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skein_torus.dt import FaceDiagram, GlobalCoord, build_datum, family_coord, global_member
from skein_torus.errors import ProjectionError, UnmatchedFamily
from skein_torus.pants import trace_multicurve
from skein_torus.surface import (
    dual_graph_form,
    dual_graph_form_from_vertices,
    embed_face,
    gk_dimension,
    global_form,
    gre_product,
    pairing,
    phi,
    phi_lead_check,
    phi_of_coord,
    project,
    project_exponent,
    surface_model,
)
from skein_torus.torus import TorusElement, lead_term

D20 = build_datum(2, 0)
E3 = FaceDiagram.build(3, {})


def test_single_vertex_sign_rule():
    # Counterclockwise (c, leg, a): a sits immediately clockwise of c.
    f = dual_graph_form_from_vertices(["a", "c"], [("c", None, "a")])
    assert f.entry("a", "c") == 1


def test_opposite_vertices_cancel():
    f = dual_graph_form_from_vertices(["a", "b"], [("a", "b", None), ("b", "a", None)])
    assert f.entry("a", "b") == 0


def test_theta_graph_hand_count():
    # Vertex 1 reads (c1, c3, c2) counterclockwise and vertex 2 reads (c2, c1, c3).
    # Clockwise-neighbour pairs: vertex 1 gives (c2,c1), (c1,c3), (c3,c2); vertex 2
    # gives (c3,c2), (c2,c1), (c1,c3).  Each pair adds 1.
    Q = dual_graph_form(D20)
    assert Q.entry("c2", "c1") == Q.entry("c1", "c3") == Q.entry("c3", "c2") == 2
    assert Q.mat == ((0, -2, 2), (2, 0, -2), (-2, 2, 0))


def test_symplectic_double_blocks():
    Qt = global_form(D20)
    r = D20.r
    for a in range(r):
        for b in range(r):
            assert Qt.mat[a][r + b] == (-1 if a == b else 0)
            assert Qt.mat[r + a][r + b] == 0


def test_tensor_torus_embeddings_are_homomorphisms():
    model = surface_model(D20)
    for fi in range(len(D20.faces)):
        a = FaceDiagram.build(3, {"a12": 1}, (1, 0, 0))
        b = FaceDiagram.build(3, {"l3": 1})
        ta, tb = trace_multicurve(3, a), trace_multicurve(3, b)
        assert embed_face(model, fi, ta * tb) == embed_face(model, fi, ta) * embed_face(model, fi, tb)


def _loop_family(curve: str, lift: int):
    fi, si = D20.where(curve, lift)
    fam = [E3, E3]
    fam[fi] = FaceDiagram.build(3, {f"l{si}": 1})
    return tuple(fam)


def _u(k: int, power: int):
    model = surface_model(D20)
    e = [0] * (2 * D20.r)
    e[D20.r + k] = power
    return TorusElement.monomial(model.form, e)


@pytest.mark.parametrize("k, curve", list(enumerate(["c1", "c2", "c3"])))
def test_phi_of_loop(k, curve):
    expected = _u(k, 2) + _u(k, -2)
    assert phi(D20, _loop_family(curve, 1)) == expected
    assert phi(D20, _loop_family(curve, 2)) == expected


def test_phi_of_empty_family():
    assert phi(D20, (E3, E3)) == TorusElement.one(surface_model(D20).form)


def test_phi_rejects_unmatched():
    with pytest.raises(UnmatchedFamily):
        phi(D20, (FaceDiagram.build(3, {"a12": 1}), E3))


def test_curve_crossing_c1_once_per_side():
    # Face 0 reads (c1'', c2', c3') and face 1 reads (c2'', c3'', c1').
    fam = (FaceDiagram.build(3, {"a12": 1}), FaceDiagram.build(3, {"a13": 1}))
    value = phi(D20, fam)
    (k, c), = lead_term(value, surface_model(D20).degree).terms
    assert k == (1, 1, 0, 0, 0, 0) == family_coord(D20, fam).vector
    assert c == 1
    assert all(e[:3] == (1, 1, 0) for e in value.terms)


def test_loop_lead():
    (k, c), = lead_term(phi(D20, _loop_family("c1", 1)), surface_model(D20).degree).terms
    assert k == (0, 0, 0, 2, 0, 0) and c == 1


def test_projection_rejects_non_diamond():
    model = surface_model(D20)
    bad = TorusElement.monomial(model.tensor_form, (1,) + (0,) * 11)
    with pytest.raises(ProjectionError):
        project(model, bad)


def test_lead_check_negative_control():
    fam = (FaceDiagram.build(3, {"a12": 1}, (2, 0, 0)), FaceDiagram.build(3, {"a13": 1}))
    assert phi_lead_check(D20, fam)
    assert not phi_lead_check(D20, fam, twist_sign=-1)


def test_pairing_blocks():
    k = GlobalCoord((1, 2, 3), (0, 0, 0))
    l = GlobalCoord((0, 0, 0), (4, 5, 6))
    assert pairing(D20, k, l) == -(4 + 10 + 18)


def test_gre_product_with_zero():
    l = GlobalCoord((1, 1, 0), (2, 0, 0))
    assert gre_product(D20, GlobalCoord((0, 0, 0), (0, 0, 0)), l) == (Fraction(0), l)


def _members(bound: int = 2):
    rng = random.Random(7)
    out = []
    while len(out) < 12:
        c = GlobalCoord(tuple(rng.randint(0, bound) for _ in range(3)), tuple(rng.randint(-bound, bound) for _ in range(3)))
        if global_member(D20, c):
            out.append(c)
    return out


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(_members()), st.sampled_from(_members()))
def test_graded_product_rule(k, l):
    degree = surface_model(D20).degree
    half, s = gre_product(D20, k, l)
    (e1, c1), = lead_term(phi_of_coord(D20, k) * phi_of_coord(D20, l), degree).terms
    (e2, c2), = lead_term(phi_of_coord(D20, s), degree).terms
    assert e1 == e2 == s.vector
    assert c1 == c2.shift_q2(int(2 * half))


@pytest.mark.parametrize("g, m, expected", [(2, 0, 6), (2, 1, 8), (0, 5, 4), (1, 2, 4), (1, 1, 2), (3, 0, 12)])
def test_gk_dimension(g, m, expected):
    assert gk_dimension(build_datum(g, m)) == expected


def _diamond_vectors():
    coord = st.integers(-3, 3)
    return st.tuples(st.tuples(coord, coord, coord), st.tuples(*[coord] * 6)).map(
        lambda p: tuple(y for y in p[0] for _ in range(2)) + p[1])


@given(_diamond_vectors(), _diamond_vectors())
def test_projection_preserves_pairing_on_diamond(k, l):
    model = surface_model(D20)
    pk, pl = project_exponent(model, k), project_exponent(model, l)
    assert model.tensor_form.pairing(k, l) == model.form.pairing(pk, pl)
