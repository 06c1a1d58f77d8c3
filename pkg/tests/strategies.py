"""Hypothesis strategies shared across the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from skein_torus.ground import GroundScalar
from skein_torus.torus import AntisymForm, TorusElement


@st.composite
def forms(draw, max_rank: int = 4, bound: int = 3) -> AntisymForm:
    r = draw(st.integers(1, max_rank))
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            v = draw(st.integers(-bound, bound))
            m[i][j], m[j][i] = v, -v
    return AntisymForm.from_rows([f"x{i}" for i in range(1, r + 1)], m)


scalars = st.dictionaries(st.tuples(st.integers(-4, 4), st.just(())), st.integers(-3, 3),
                          max_size=3).map(GroundScalar)


@st.composite
def elements(draw, form: AntisymForm, max_terms: int = 3) -> TorusElement:
    exps = st.tuples(*[st.integers(-2, 2) for _ in form.gens])
    return TorusElement(form, draw(st.dictionaries(exps, scalars, max_size=max_terms)))
