"""Ideal triangulations with triangle and monogon faces.

Faces store their sides in counterclockwise order, so orientation is part of
the data.  Each boundary edge ``e`` gets a hatted copy named ``e^``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

import sympy

from .errors import MalformedData, MembershipError
from .torus import AntisymForm, check_hom

HAT = "^"


def hat(e: str) -> str:
    return e + HAT


@dataclass(frozen=True)
class Edge:
    id: str
    boundary: bool = False


@dataclass(frozen=True)
class Triangle:
    sides: tuple[str, str, str]


@dataclass(frozen=True)
class Monogon:
    edge: str


Face = Union[Triangle, Monogon]


@dataclass(frozen=True)
class SurfaceData:
    """Euler characteristic, number of boundary punctures, number of circle boundaries."""

    chi: int
    boundary_punctures: int
    circles: int


def rank_from_surface(s: SurfaceData) -> int:
    """3|P_boundary| - |circles| - 3 chi, the count of edges plus hatted edges."""
    return 3 * s.boundary_punctures - s.circles - 3 * s.chi


def printed_rank_formula(s: SurfaceData) -> int:
    """2|P_boundary| + 2|circles| - 3 chi, kept for comparison only."""
    return 2 * s.boundary_punctures + 2 * s.circles - 3 * s.chi


@dataclass(frozen=True)
class Triangulation:
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]
    surface: SurfaceData | None = None
    _ids: tuple[str, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ids = tuple(e.id for e in self.edges)
        if len(set(ids)) != len(ids):
            raise MalformedData("duplicate edge ids")
        for e in ids:
            if e.endswith(HAT):
                raise MalformedData(f"edge id {e!r} may not end with {HAT!r}")
        sides: Counter[str] = Counter()
        for f in self.faces:
            if isinstance(f, Triangle):
                if len(f.sides) != 3:
                    raise MalformedData("a triangle needs exactly three sides")
                sides.update(f.sides)
            elif isinstance(f, Monogon):
                sides[f.edge] += 1
            else:
                raise MalformedData(f"unknown face {f!r}")
        unknown = set(sides) - set(ids)
        if unknown:
            raise MalformedData(f"faces use unknown edges {sorted(unknown)}")
        for e in self.edges:
            want = 1 if e.boundary else 2
            if sides[e.id] != want:
                kind = "boundary" if e.boundary else "interior"
                raise MalformedData(
                    f"{kind} edge {e.id!r} bounds {sides[e.id]} face-sides, expected {want}")
        object.__setattr__(self, "_ids", ids)
        if self.surface is not None:
            if self.surface.circles != self.n_monogons:
                raise MalformedData(
                    f"{self.surface.circles} circle boundaries but {self.n_monogons} monogon faces")
            if rank_from_surface(self.surface) != len(self.tilde):
                raise MalformedData(
                    f"surface data predicts {rank_from_surface(self.surface)} coordinates, "
                    f"triangulation has {len(self.tilde)}")

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return self._ids

    @property
    def interior(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges if not e.boundary)

    @property
    def boundary(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges if e.boundary)

    @property
    def tilde(self) -> tuple[str, ...]:
        """Edges followed by hatted boundary edges."""
        return self._ids + tuple(hat(e) for e in self.boundary)

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        return tuple(f for f in self.faces if isinstance(f, Triangle))

    @property
    def n_monogons(self) -> int:
        return sum(isinstance(f, Monogon) for f in self.faces)

    def derived_surface(self) -> SurfaceData:
        """Surface invariants read off the combinatorics."""
        nb = len(self.boundary)
        return SurfaceData(nb - len(self.edges) + len(self.triangles), nb, self.n_monogons)


# -- standard examples -----------------------------------------------------

def ideal_triangle(a: str = "a", b: str = "b", c: str = "c") -> Triangulation:
    return Triangulation((Edge(a, True), Edge(b, True), Edge(c, True)), (Triangle((a, b, c)),),
                         SurfaceData(1, 3, 0))


def monogon(e: str = "e") -> Triangulation:
    return Triangulation((Edge(e, True),), (Monogon(e),), SurfaceData(0, 1, 1))


def square() -> Triangulation:
    """Two triangles sharing the diagonal d; boundary edges a, b, c, f."""
    edges = (Edge("a", True), Edge("b", True), Edge("c", True), Edge("f", True), Edge("d"))
    return Triangulation(edges, (Triangle(("a", "b", "d")), Triangle(("d", "c", "f"))),
                         SurfaceData(1, 4, 0))


def punctured_torus() -> Triangulation:
    """Two triangles with the same cyclic order (a, b, c)."""
    edges = (Edge("a"), Edge("b"), Edge("c"))
    return Triangulation(edges, (Triangle(("a", "b", "c")), Triangle(("a", "b", "c"))),
                         SurfaceData(-1, 0, 0))


def thrice_punctured_sphere() -> Triangulation:
    """Two triangles with opposite cyclic orders."""
    edges = (Edge("a"), Edge("b"), Edge("c"))
    return Triangulation(edges, (Triangle(("a", "b", "c")), Triangle(("a", "c", "b"))),
                         SurfaceData(-1, 0, 0))


def random_triangulation(rng: random.Random, n_triangles: int, n_monogons: int = 0) -> Triangulation:
    """Glue triangle sides (and monogon edges) pairwise at random; unpaired sides become boundary."""
    slots: list[tuple[int, int]] = [(f, s) for f in range(n_triangles) for s in range(3)]
    slots += [(n_triangles + m, 0) for m in range(n_monogons)]
    rng.shuffle(slots)
    n_pairs = rng.randint(0, len(slots) // 2)
    names: dict[tuple[int, int], str] = {}
    edges: list[Edge] = []
    for p in range(n_pairs):
        e = f"e{p}"
        names[slots[2 * p]] = names[slots[2 * p + 1]] = e
        edges.append(Edge(e))
    for k, slot in enumerate(slots[2 * n_pairs:]):
        e = f"b{k}"
        names[slot] = e
        edges.append(Edge(e, True))
    faces: list[Face] = [Triangle(tuple(names[(f, s)] for s in range(3))) for f in range(n_triangles)]
    faces += [Monogon(names[(n_triangles + m, 0)]) for m in range(n_monogons)]
    t = Triangulation(tuple(edges), tuple(faces))
    return Triangulation(t.edges, t.faces, t.derived_surface())


# -- forms -------------------------------------------------------------------

def face_matrix(T: Triangulation) -> AntisymForm:
    """Corner count over triangles: with sides (a, b, c) counterclockwise each
    corner contributes Q(a, b) -= 1, so that q x_a x_b = x_b x_a."""
    idx = {e: i for i, e in enumerate(T.edge_ids)}
    m = [[0] * len(idx) for _ in idx]
    for tri in T.triangles:
        for i in range(3):
            a, b = idx[tri.sides[i]], idx[tri.sides[(i + 1) % 3]]
            m[a][b] -= 1
            m[b][a] += 1
    return AntisymForm.from_rows(T.edge_ids, m)


def doubled_matrix(T: Triangulation) -> AntisymForm:
    """face_matrix extended by Q(e^, e) = 1 = -Q(e, e^) for boundary edges."""
    base = face_matrix(T)
    gens = T.tilde
    r = len(gens)
    m = [[0] * r for _ in range(r)]
    for i, row in enumerate(base.mat):
        m[i][:len(row)] = row
    for e in T.boundary:
        i, j = gens.index(hat(e)), gens.index(e)
        m[i][j] = 1
        m[j][i] = -1
    return AntisymForm.from_rows(gens, m)


# -- coordinates -------------------------------------------------------------

TriCoord = Mapping[str, int]


def _as_coord(T: Triangulation, n: TriCoord | Sequence[int]) -> dict[str, int]:
    if isinstance(n, Mapping):
        missing = set(T.tilde) - set(n)
        extra = set(n) - set(T.tilde)
        if missing or extra:
            raise MalformedData(f"coordinate keys mismatch: missing {sorted(missing)}, extra {sorted(extra)}")
        return {k: int(n[k]) for k in T.tilde}
    if len(n) != len(T.tilde):
        raise MalformedData(f"coordinate vector needs {len(T.tilde)} entries")
    return dict(zip(T.tilde, (int(x) for x in n)))


def lambda_delta_violation(T: Triangulation, n: TriCoord | Sequence[int]) -> str | None:
    """Human-readable first violated condition, or None for members."""
    c = _as_coord(T, n)
    for k, v in c.items():
        if v < 0:
            return f"negative entry n({k})={v}"
    for tri in T.triangles:
        vals = [c[s] for s in tri.sides]
        if sum(vals) % 2:
            return f"odd sum at triple {tri.sides}"
        for i in range(3):
            if vals[i] > vals[(i + 1) % 3] + vals[(i + 2) % 3]:
                a, b, cc = (tri.sides[(i + j) % 3] for j in range(3))
                return f"n({a}) <= n({b}) + n({cc}) violated at triple {tri.sides}"
    for e in T.boundary:
        h = c[hat(e)]
        if h % 2:
            return f"n({hat(e)}) is odd"
        if h > 2 * c[e]:
            return f"n({hat(e)}) <= 2 n({e}) violated"
    return None


def lambda_delta_member(T: Triangulation, n: TriCoord | Sequence[int]) -> bool:
    return lambda_delta_violation(T, n) is None


def lambda_delta_probes(T: Triangulation) -> list[tuple[int, ...]]:
    """The constant vector 2 and each 2 + 2 d_a."""
    r = len(T.tilde)
    out = [tuple([2] * r)]
    for i in range(r):
        out.append(tuple(4 if j == i else 2 for j in range(r)))
    return out


def lambda_delta_rank(T: Triangulation) -> int:
    """Rank of the group generated by the members, cross-checked against surface data."""
    probes = lambda_delta_probes(T)
    for p in probes:
        if not lambda_delta_member(T, p):
            raise MembershipError(f"probe {p} is not a member")
    rank = int(sympy.Matrix([list(p) for p in probes]).rank())
    if rank != len(T.tilde):
        raise MalformedData(f"probe rank {rank} differs from {len(T.tilde)}")
    if T.surface is not None and rank_from_surface(T.surface) != rank:
        raise MalformedData("inconsistent surface data")
    return rank


def random_member(T: Triangulation, rng: random.Random, bound: int = 4,
                  tries: int = 10_000) -> dict[str, int]:
    """Rejection sample on unhatted edges; hatted entries drawn from the allowed range."""
    for _ in range(tries):
        c = {e: rng.randint(0, bound) for e in T.edge_ids}
        for e in T.boundary:
            c[hat(e)] = 2 * rng.randint(0, c[e])
        if lambda_delta_member(T, c):
            return c
    raise RuntimeError("no member found; loosen the bound")


# -- cutting -----------------------------------------------------------------

@dataclass(frozen=True)
class Cut:
    triangulation: Triangulation
    H: tuple[tuple[int, ...], ...]
    first: str
    second: str

    def in_image(self, k: Sequence[int]) -> bool:
        """Image monomials have equal exponents at the two new edges."""
        ids = self.triangulation.edge_ids
        return k[ids.index(self.first)] == k[ids.index(self.second)]


def cut_edge(T: Triangulation, e: str) -> Cut:
    """Split interior edge e into boundary edges e' (first face-side met) and e''."""
    if e not in T.interior:
        raise MalformedData(f"{e!r} is not an interior edge")
    first, second = e + "'", e + "''"
    if first in T.edge_ids or second in T.edge_ids:
        raise MalformedData(f"names {first!r}/{second!r} already taken")
    seen = [0]

    def rename(s: str) -> str:
        if s != e:
            return s
        seen[0] += 1
        return first if seen[0] == 1 else second

    faces: list[Face] = []
    for f in T.faces:
        if isinstance(f, Triangle):
            faces.append(Triangle(tuple(rename(s) for s in f.sides)))
        else:
            faces.append(Monogon(rename(f.edge)))
    edges: list[Edge] = []
    for ed in T.edges:
        if ed.id == e:
            edges += [Edge(first, True), Edge(second, True)]
        else:
            edges.append(ed)
    cut = Triangulation(tuple(edges), tuple(faces))
    cut = Triangulation(cut.edges, cut.faces, cut.derived_surface())
    H = []
    for a in T.edge_ids:
        row = [0] * len(cut.edge_ids)
        for target in ((first, second) if a == e else (a,)):
            row[cut.edge_ids.index(target)] = 1
        H.append(tuple(row))
    H_t = tuple(H)
    check_hom(H_t, face_matrix(T), face_matrix(cut))
    return Cut(cut, H_t, first, second)


# -- graded model --------------------------------------------------------------

@dataclass(frozen=True)
class GradedTraceModel:
    """Monomial algebra on the members of Lambda with the doubled form."""

    triangulation: Triangulation

    @property
    def form(self) -> AntisymForm:
        return doubled_matrix(self.triangulation)

    def product(self, n: TriCoord | Sequence[int], m: TriCoord | Sequence[int]) -> tuple[Fraction, dict[str, int]]:
        T = self.triangulation
        a, b = _as_coord(T, n), _as_coord(T, m)
        for v in (a, b):
            why = lambda_delta_violation(T, v)
            if why:
                raise MembershipError(f"Lambda condition: {why}")
        ka = [a[g] for g in T.tilde]
        kb = [b[g] for g in T.tilde]
        s = {g: a[g] + b[g] for g in T.tilde}
        if not lambda_delta_member(T, s):
            raise AssertionError("Lambda is not closed under addition here")
        return Fraction(self.form.pairing(ka, kb), 2), s


def graded_trace_model(T: Triangulation) -> GradedTraceModel:
    return GradedTraceModel(T)
