from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from skein_torus.errors import MalformedData
from skein_torus.ground import q_pow
from skein_torus.torus import TorusElement, check_hom, mono_hom
from skein_torus.triangulation import (
    SurfaceData,
    cut_edge,
    doubled_matrix,
    face_matrix,
    graded_trace_model,
    ideal_triangle,
    lambda_delta_member,
    lambda_delta_rank,
    lambda_delta_violation,
    monogon,
    printed_rank_formula,
    punctured_torus,
    random_member,
    random_triangulation,
    rank_from_surface,
    square,
    thrice_punctured_sphere,
)


def test_triangle_relation_q_xa_xb_equals_xb_xa():
    f = face_matrix(ideal_triangle())
    xa, xb, xc = (TorusElement.gen(f, g) for g in "abc")
    for s, t in ((xa, xb), (xb, xc), (xc, xa)):
        assert (s * t).scale(q_pow(1)) == t * s


def test_monogon_face_matrix_is_zero():
    assert face_matrix(monogon()).mat == ((0,),)


def test_square_by_corner_count():
    # Triangle (a, b, d) has corners a|b, b|d, d|a; triangle (d, c, f) has d|c, c|f, f|d.
    # Each corner x|y contributes Q(x, y) -= 1.
    T = square()
    expected = {("a", "b"): -1, ("b", "d"): -1, ("d", "a"): -1,
                ("d", "c"): -1, ("c", "f"): -1, ("f", "d"): -1}
    f = face_matrix(T)
    for s, t in itertools.product(T.edge_ids, repeat=2):
        want = expected.get((s, t), 0) - expected.get((t, s), 0)
        assert f.entry(s, t) == want, (s, t)


def test_punctured_torus_corners():
    # Corners a|b, b|c, c|a in each of the two triangles.
    f = face_matrix(punctured_torus())
    assert (f.entry("a", "b"), f.entry("b", "c"), f.entry("c", "a")) == (-2, -2, -2)


def test_thrice_punctured_sphere_corners_cancel():
    # Corners a|b, b|c, c|a against a|c, c|b, b|a.
    assert all(v == 0 for row in face_matrix(thrice_punctured_sphere()).mat for v in row)


def test_doubled_matrix():
    assert doubled_matrix(punctured_torus()) == face_matrix(punctured_torus())
    d = doubled_matrix(monogon())
    assert d.gens == ("e", "e^") and d.entry("e^", "e") == 1 and d.entry("e", "e^") == -1


def test_membership_examples():
    tri = ideal_triangle()
    assert lambda_delta_member(tri, {k: 2 for k in tri.tilde})
    assert not lambda_delta_member(tri, {"a": 3, "b": 1, "c": 1, "a^": 0, "b^": 0, "c^": 0})
    bad = {"a": 4, "b": 1, "c": 1, "a^": 0, "b^": 0, "c^": 0}
    assert "n(a) <= n(b) + n(c)" in lambda_delta_violation(tri, bad)
    assert not lambda_delta_member(monogon(), {"e": 1, "e^": 4})


def test_malformed_coordinate():
    with pytest.raises(MalformedData):
        lambda_delta_member(monogon(), {"e": 1})


def _enumerated_rank(T, bound):
    members = [v for v in itertools.product(range(bound + 1), repeat=len(T.tilde))
               if lambda_delta_member(T, v)]
    return int(sympy.Matrix(members).rank())


@pytest.mark.parametrize("T, expected", [(monogon(), 2), (ideal_triangle(), 6), (square(), 9),
                                         (punctured_torus(), 3)])
def test_rank(T, expected):
    assert lambda_delta_rank(T) == expected == len(T.tilde)
    assert _enumerated_rank(T, 4) == expected


@pytest.mark.parametrize("T", [monogon(), ideal_triangle(), square(), punctured_torus()])
def test_rank_from_surface_invariants(T):
    assert rank_from_surface(T.surface) == len(T.tilde)


def test_printed_rank_formula_counterexample():
    # The monogon has one edge and one hat but the formula 2|P| + 2|M| - 3 chi returns 4.
    assert printed_rank_formula(SurfaceData(0, 1, 1)) == 4
    assert len(monogon().tilde) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(0, 2))
def test_random_triangulation_closure_and_rank(seed, n_tri, n_mono):
    rng = random.Random(seed)
    T = random_triangulation(rng, n_tri, n_mono)
    a, b = random_member(T, rng), random_member(T, rng)
    assert lambda_delta_member(T, {k: a[k] + b[k] for k in a})
    assert lambda_delta_rank(T) == len(T.tilde) == rank_from_surface(T.surface)


@pytest.mark.parametrize("T", [square(), punctured_torus()])
def test_cut_edge(T):
    for e in T.interior:
        cut = cut_edge(T, e)
        check_hom(cut.H, face_matrix(T), face_matrix(cut.triangulation))
        base = face_matrix(T)
        elt = sum((TorusElement.monomial(base, k) for k in itertools.product(range(-1, 2), repeat=len(T.edges))),
                  TorusElement.zero(base))
        img = mono_hom(cut.H, base, face_matrix(cut.triangulation), elt)
        assert all(cut.in_image(k) for k in img.terms)
        assert len(img) == len(elt)


def test_cut_rejects_boundary_edge():
    with pytest.raises(MalformedData):
        cut_edge(square(), "a")


def test_graded_model_product():
    T = square()
    model = graded_trace_model(T)
    two = {k: 2 for k in T.tilde}
    zero = {k: 0 for k in T.tilde}
    assert model.product(two, zero) == (Fraction(0), two)
    bumped = dict(two, a=4)
    half, total = model.product(two, bumped)
    assert total == {k: two[k] + bumped[k] for k in T.tilde}
    assert half == Fraction(model.form.pairing([two[k] for k in T.tilde], [bumped[k] for k in T.tilde]), 2)
