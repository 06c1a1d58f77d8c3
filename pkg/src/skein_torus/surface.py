"""Gluing pants traces into the global torus of a pants decomposition.

Every lift (c, 1) = c' and (c, 2) = c'' of a decomposition curve carries a
pair x, u in the tensor torus.  Face tori embed block-diagonally; elements
whose x-exponents agree on c' and c'' (the diamond part) project to the
global torus with y_c = x_{c'} and u_c = u_{c'} + u_{c''}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .dt import (
    C_DOUBLE,
    C_PRIME,
    DTDatum,
    FaceDiagram,
    GlobalCoord,
    check_matched,
    family_coord,
    family_from_coord,
    global_member,
    global_violation,
    normalize_matched,
)
from .errors import MalformedData, MembershipError, ProjectionError
from .ground import GroundScalar
from .pants import pants_form, trace_multicurve
from .torus import (
    AntisymForm,
    DegreeFunctional,
    Monoid,
    TorusElement,
    check_hom,
    lead_term,
    reflection_normalize,
    symplectic_double,
)

Vertex = tuple[Optional[str], Optional[str], Optional[str]]


def dual_graph_form_from_vertices(curves: Sequence[str], vertices: Sequence[Sequence[str | None]]) -> AntisymForm:
    """Each vertex lists its three half-edges counterclockwise (None for a
    leg to the surface boundary).  A half-edge of a sitting immediately
    clockwise of a half-edge of c adds +1 to Q(a, c)."""
    idx = {c: i for i, c in enumerate(curves)}
    m = [[0] * len(curves) for _ in curves]
    for v in vertices:
        if len(v) != 3:
            raise MalformedData(f"vertex {v} is not trivalent")
        for i in range(3):
            a, c = v[i - 1], v[i]
            if a is None or c is None:
                continue
            if a not in idx or c not in idx:
                raise MalformedData(f"unknown curve at vertex {v}")
            m[idx[a]][idx[c]] += 1
            m[idx[c]][idx[a]] -= 1
    return AntisymForm.from_rows(curves, m)


def face_vertices(D: DTDatum) -> list[Vertex]:
    """Counterclockwise half-edge order (b1, b3, b2) at each face's vertex."""
    out: list[Vertex] = []
    for f in D.faces:
        labels: list[str | None] = [l.curve for l in f.bold] + [None] * (3 - f.type)
        out.append((labels[0], labels[2], labels[1]))
    return out


def dual_graph_form(D: DTDatum) -> AntisymForm:
    return dual_graph_form_from_vertices(D.curves, face_vertices(D))


def global_form(D: DTDatum) -> AntisymForm:
    return symplectic_double(dual_graph_form(D))


def lift_name(curve: str, lift: int) -> str:
    return curve + ("'" if lift == C_PRIME else "''")


@dataclass(frozen=True)
class SurfaceModel:
    datum: DTDatum
    lifts: tuple[tuple[str, int], ...]
    tensor_form: AntisymForm
    form: AntisymForm
    embeddings: tuple[tuple[tuple[int, ...], ...], ...]
    degree: DegreeFunctional

    @property
    def r(self) -> int:
        return self.datum.r


@lru_cache(maxsize=64)
def surface_model(D: DTDatum) -> SurfaceModel:
    lifts = tuple((c, k) for c in D.curves for k in (C_PRIME, C_DOUBLE))
    L = len(lifts)
    pos = {lift: i for i, lift in enumerate(lifts)}
    gens = [f"x_{lift_name(*l)}" for l in lifts] + [f"u_{lift_name(*l)}" for l in lifts]
    mat = [[0] * (2 * L) for _ in range(2 * L)]
    embeddings = []
    for f in D.faces:
        j = f.type
        H = [[0] * (2 * L) for _ in range(2 * j)]
        for si, lift in enumerate(f.bold):
            p = pos[(lift.curve, lift.lift)]
            H[si][p] = 1
            H[j + si][L + p] = 1
        src = pants_form(j)
        targets = [H[a].index(1) for a in range(2 * j)]
        for a in range(2 * j):
            for b in range(2 * j):
                mat[targets[a]][targets[b]] += src.mat[a][b]
        embeddings.append(tuple(tuple(row) for row in H))
    tensor = AntisymForm.from_rows(gens, mat)
    for f, H in zip(D.faces, embeddings):
        check_hom(H, pants_form(f.type), tensor)
    r = D.r
    mb = D.m_bar
    rows = [[1] * r + [0] * r, [0] * r + [1] * r]
    for k in range(mb):
        row = [0] * (2 * r)
        row[r + k] = 1
        rows.append(row)
    return SurfaceModel(D, lifts, tensor, global_form(D), tuple(embeddings),
                        DegreeFunctional.from_rows(rows))


def embed_face(model: SurfaceModel, fi: int, a: TorusElement) -> TorusElement:
    """Image of a face-torus element under its block embedding."""
    H = model.embeddings[fi]
    cols = [row.index(1) for row in H]
    width = model.tensor_form.rank

    def image(k: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * width
        for e, c in zip(k, cols):
            out[c] += e
        return tuple(out)

    return a.map_exponents(image, model.tensor_form)


def in_diamond(model: SurfaceModel, k: Sequence[int]) -> bool:
    return all(k[2 * i] == k[2 * i + 1] for i in range(model.r))


def project_exponent(model: SurfaceModel, k: Sequence[int], twist_sign: int = 1) -> tuple[int, ...]:
    r, L = model.r, 2 * model.r
    if not in_diamond(model, k):
        raise ProjectionError(f"exponent {tuple(k)} has unequal x-degrees on some c' and c''")
    y = [k[2 * i] for i in range(r)]
    u = [twist_sign * (k[L + 2 * i] + k[L + 2 * i + 1]) for i in range(r)]
    return tuple(y + u)


def project(model: SurfaceModel, a: TorusElement, twist_sign: int = 1) -> TorusElement:
    out: dict[tuple[int, ...], GroundScalar] = {}
    for k, c in a.terms.items():
        e = project_exponent(model, k, twist_sign)
        out[e] = out[e] + c if e in out else c
    return TorusElement(model.form, out, a.varset)


def phi(D: DTDatum, family: Sequence[FaceDiagram], normalize: bool = True,
        twist_sign: int = 1) -> TorusElement:
    """Global image of a matched family of face diagrams."""
    check_matched(D, family)
    fam = normalize_matched(D, family) if normalize else tuple(family)
    model = surface_model(D)
    total = TorusElement.one(model.tensor_form)
    for fi, (f, d) in enumerate(zip(D.faces, fam)):
        total = total * embed_face(model, fi, trace_multicurve(f.type, d))
    return reflection_normalize(project(model, total, twist_sign))


def phi_of_coord(D: DTDatum, c: GlobalCoord) -> TorusElement:
    return phi(D, family_from_coord(D, c))


def edegree(D: DTDatum, k: Sequence[int]) -> tuple[int, ...]:
    return surface_model(D).degree(k)


def phi_lead_check(D: DTDatum, family: Sequence[FaceDiagram], twist_sign: int = 1) -> bool:
    """The E-degree lead of phi is exactly Y^nu with coefficient 1."""
    value = phi(D, family, twist_sign=twist_sign)
    if value.is_zero():
        return False
    lead = lead_term(value, surface_model(D).degree)
    if len(lead.terms) != 1:
        return False
    k, c = lead.terms[0]
    return k == family_coord(D, family).vector and c == 1


def pairing(D: DTDatum, k: GlobalCoord, l: GlobalCoord) -> int:
    return global_form(D).pairing(k.vector, l.vector)


def gre_product(D: DTDatum, k: GlobalCoord, l: GlobalCoord) -> tuple[Fraction, GlobalCoord]:
    """(1/2 <k, l>, k + l) in the graded monomial model."""
    for v in (k, l):
        why = global_violation(D, v)
        if why:
            raise MembershipError(f"global condition: {why}")
    s = k + l
    if not global_member(D, s):
        raise AssertionError("the coordinate monoid is not closed here")
    return Fraction(pairing(D, k, l), 2), s


def coordinate_monoid(D: DTDatum) -> Monoid:
    r = D.r
    base = [2] * r
    probes = [tuple(base + [0] * r)]
    for a in range(r):
        n = list(base)
        n[a] += 2
        probes.append(tuple(n + [0] * r))
    for c in range(r):
        t = [0] * r
        t[c] = 2
        probes.append(tuple(base + t))

    def member(v: tuple[int, ...]) -> bool:
        return global_member(D, GlobalCoord(v[:r], v[r:]))

    return Monoid(2 * r, member, tuple(probes))


def gk_dimension(D: DTDatum) -> int:
    """Rank of the group generated by the coordinate monoid."""
    return coordinate_monoid(D).group_rank()
