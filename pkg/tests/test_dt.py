from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skein_torus.dt import (
    TAGS,
    DTDatum,
    FaceCoord,
    FaceDiagram,
    GlobalCoord,
    Lift,
    PantsFace,
    add_function,
    build_datum,
    datum_from_json,
    datum_to_json,
    decompose_face_coord,
    face_coord,
    family_coord,
    family_from_coord,
    global_member,
    global_violation,
    lambda_member,
    loop_move,
    normalize_matched,
    patch_coordinates,
    split_coordinates,
    standard_coord,
    t_move,
    twist_coord,
)
from skein_torus.errors import ExcludedSurface, IllegalTag, MalformedData, MembershipError, UnmatchedFamily

SIGMA20 = build_datum(2, 0)
EMPTY3 = FaceDiagram.build(3, {})


def fc(j, n, t):
    return FaceCoord(j, tuple(n), tuple(t))


def test_add_function_examples():
    assert all(add_function(3, i, (2, 2, 2)) == 0 for i in (1, 2, 3))
    assert all(add_function(2, 2, n) == 0 for n in itertools.product(range(5), repeat=2))
    # With n = (0, 0, 2) the single side with endpoints forces two returns around b_1.
    assert add_function(3, 1, (0, 0, 2)) == 2


@pytest.mark.parametrize("j, tag, n, t", [
    (3, "l2", (0, 0, 0), (0, 2, 0)),
    (3, "a11", (2, 0, 0), (0, 2, 0)),
    (1, "a13", (1,), (-1,)),
])
def test_standard_coord(j, tag, n, t):
    assert standard_coord(j, tag) == fc(j, n, t)


def test_illegal_tag():
    with pytest.raises(IllegalTag):
        standard_coord(1, "a22")


def test_twist_coord():
    c = fc(3, (2, 0, 0), (0, 0, 0))
    assert twist_coord(3, 1, c) == fc(3, (2, 0, 0), (2, 0, 0))
    assert twist_coord(3, 2, c) == c


def test_face_coord_examples():
    assert face_coord(FaceDiagram.build(3, {"a23": 1, "l1": 1})) == fc(3, (0, 1, 1), (2, 0, 0))
    assert face_coord(EMPTY3) == FaceCoord.zero(3)
    assert face_coord(FaceDiagram.build(2, {"a12": 1}, (3, 0))) == fc(2, (1, 1), (6, 0))


def test_decompose_examples():
    assert decompose_face_coord(3, fc(3, (0, 0, 0), (4, 0, 0))) == FaceDiagram.build(3, {"l1": 2})
    assert decompose_face_coord(3, fc(3, (2, 0, 0), (0, 2, 0))) == FaceDiagram.build(3, {"a11": 1})


def test_lambda_member_examples():
    assert lambda_member(3, fc(3, (1, 1, 0), (0, 0, 0)))
    assert not lambda_member(3, fc(3, (1, 1, 1), (0, 0, 0)))
    assert not lambda_member(1, fc(1, (0,), (-1,)))


def test_decompose_rejects_non_members():
    with pytest.raises(MembershipError):
        decompose_face_coord(1, fc(1, (0,), (-1,)))


@given(st.data())
def test_face_round_trip(data):
    j = data.draw(st.sampled_from([1, 2, 3]))
    n = data.draw(st.tuples(*[st.integers(0, 8)] * j))
    t = data.draw(st.tuples(*[st.integers(-8, 8)] * j))
    c = fc(j, n, t)
    if lambda_member(j, c):
        assert face_coord(decompose_face_coord(j, c)) == c


@given(st.data())
def test_face_coord_additive_on_disjoint_unions(data):
    j = data.draw(st.sampled_from([1, 2, 3]))
    loops = [t for t in TAGS[j] if t.startswith("l")]
    base = data.draw(st.sampled_from([t for t in TAGS[j] if not t.startswith("l")]))
    extra = data.draw(st.sampled_from(loops)) if loops else None
    if extra is None or extra[1] in base[1:]:
        return
    d = FaceDiagram.build(j, {base: 1, extra: 1})
    assert face_coord(d) == standard_coord(j, base) + standard_coord(j, extra)


def test_global_membership_examples():
    zero = GlobalCoord((0, 0, 0), (0, 0, 0))
    assert global_member(SIGMA20, zero)
    assert not global_member(SIGMA20, GlobalCoord((1, 0, 0), (0, 0, 0)))
    # On both faces c1 sees one neighbor with two endpoints: Add' + Add'' = 2 + 2.
    assert "t(c1) = 0 < 4" in global_violation(SIGMA20, GlobalCoord((0, 0, 2), (0, 0, 0)))
    assert global_member(SIGMA20, GlobalCoord((0, 0, 2), (4, 0, 0)))


def test_split_loop_goes_to_double_prime_side():
    pieces = split_coordinates(SIGMA20, GlobalCoord((0, 0, 0), (2, 0, 0)))
    fi, si = SIGMA20.where("c1", 2)
    assert pieces[fi].t[si - 1] == 2
    fi, si = SIGMA20.where("c1", 1)
    assert pieces[fi].t[si - 1] == 0


def test_patch_rejects_unmatched():
    with pytest.raises(UnmatchedFamily):
        patch_coordinates(SIGMA20, [fc(3, (2, 0, 0), (0, 0, 0)), FaceCoord.zero(3)])


@settings(max_examples=150)
@given(st.tuples(*[st.integers(0, 4)] * 3), st.tuples(*[st.integers(-4, 4)] * 3))
def test_global_round_trip(n, t):
    c = GlobalCoord(n, t)
    if not global_member(SIGMA20, c):
        return
    assert patch_coordinates(SIGMA20, split_coordinates(SIGMA20, c)) == c
    assert family_coord(SIGMA20, family_from_coord(SIGMA20, c)) == c


def test_normalize_moves_loop_to_prime_lift():
    f2, s2 = SIGMA20.where("c1", 2)
    f1, s1 = SIGMA20.where("c1", 1)
    fam = [EMPTY3, EMPTY3]
    fam[f2] = FaceDiagram.build(3, {f"l{s2}": 1})
    canon = [EMPTY3, EMPTY3]
    canon[f1] = FaceDiagram.build(3, {f"l{s1}": 1})
    assert normalize_matched(SIGMA20, fam) == tuple(canon)
    assert normalize_matched(SIGMA20, canon) == tuple(canon)


def test_moves_preserve_coordinates():
    fam = (FaceDiagram.build(3, {"a23": 1}, (0, 1, 0)), FaceDiagram.build(3, {"a12": 1}, (2, 0, 0)))
    nu = family_coord(SIGMA20, fam)
    assert family_coord(SIGMA20, t_move(SIGMA20, fam, "c2", 3)) == nu
    assert family_coord(SIGMA20, normalize_matched(SIGMA20, fam)) == nu
    looped = (FaceDiagram.build(3, {"l1": 1}), EMPTY3)
    assert family_coord(SIGMA20, loop_move(SIGMA20, looped, "c1")) == family_coord(SIGMA20, looped)


@pytest.mark.parametrize("g, m", [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 0)])
def test_excluded_surfaces(g, m):
    with pytest.raises(ExcludedSurface):
        build_datum(g, m)


@pytest.mark.parametrize("g, m", [(2, 0), (2, 1), (0, 5), (0, 6), (1, 1), (1, 2), (3, 0), (3, 2)])
def test_build_datum_counts_and_json(g, m):
    D = build_datum(g, m)
    assert D.r == 3 * g - 3 + m
    assert len(D.faces) == 2 * g - 2 + m
    assert datum_from_json(datum_to_json(D)) == D


def test_datum_validation():
    good = build_datum(0, 5)
    flipped = tuple(PantsFace(f.type, tuple(Lift(l.curve, 3 - l.lift) for l in f.bold), f.dashed)
                    for f in good.faces)
    with pytest.raises(MalformedData, match="P1 face"):
        DTDatum(0, 5, good.curves, flipped)
    with pytest.raises(MalformedData, match="curves"):
        DTDatum(0, 5, good.curves[:1], good.faces)
