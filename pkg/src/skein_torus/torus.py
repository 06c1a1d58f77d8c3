"""Quantum tori in the Weyl-normalized monomial basis.

A torus is fixed by an antisymmetric integer form Q on an ordered list of
generators, with relations x_i x_j = q^{Q_ij} x_j x_i.  Elements are stored
as ``{exponent vector: GroundScalar}`` where the exponent vector names the
Weyl monomial x^k; the product rule is

    x^k * x^l = q^{<k,l>/2} x^{k+l},   <k,l> = sum_ij Q_ij k_i l_j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import sympy

from .errors import (
    CompatibilityError,
    FormMismatch,
    MalformedData,
    NotProportional,
    UnknownGenerator,
    VarSetMismatch,
    ZeroElement,
)
from .ground import EMPTY, GroundScalar, VarSet, gs_q_ratio

Exp = tuple[int, ...]


@dataclass(frozen=True)
class AntisymForm:
    gens: tuple[str, ...]
    mat: tuple[tuple[int, ...], ...]
    _pairs: tuple[tuple[int, int, int], ...] = field(default=(), init=False, repr=False,
                                                     compare=False)

    def __post_init__(self) -> None:
        r = len(self.gens)
        if len(set(self.gens)) != r:
            raise MalformedData(f"duplicate generators in {self.gens}")
        if len(self.mat) != r or any(len(row) != r for row in self.mat):
            raise MalformedData("form matrix must be square and match the generator list")
        for i in range(r):
            if self.mat[i][i]:
                raise MalformedData(f"nonzero diagonal entry at {self.gens[i]}")
            for j in range(i):
                if self.mat[i][j] != -self.mat[j][i]:
                    raise MalformedData(f"form not antisymmetric at ({self.gens[i]}, {self.gens[j]})")
        pairs = tuple((i, j, self.mat[i][j]) for i in range(r) for j in range(r) if self.mat[i][j])
        object.__setattr__(self, "_pairs", pairs)

    @classmethod
    def from_rows(cls, gens: Sequence[str], rows: Sequence[Sequence[int]]) -> AntisymForm:
        return cls(tuple(gens), tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_entries(cls, gens: Sequence[str], entries: Mapping[tuple[str, str], int]) -> AntisymForm:
        """Build from the upper data ``{(a, b): Q(a,b)}``; Q(b,a) is filled in."""
        idx = {g: i for i, g in enumerate(gens)}
        m = [[0] * len(gens) for _ in gens]
        for (a, b), v in entries.items():
            i, j = idx[a], idx[b]
            m[i][j] += v
            m[j][i] -= v
        return cls.from_rows(gens, m)

    @classmethod
    def zero(cls, gens: Sequence[str]) -> AntisymForm:
        return cls.from_rows(gens, [[0] * len(gens) for _ in gens])

    @property
    def rank(self) -> int:
        return len(self.gens)

    def index(self, gen: str) -> int:
        try:
            return self.gens.index(gen)
        except ValueError:
            raise UnknownGenerator(f"{gen!r} is not a generator of {self.gens}") from None

    def pairing(self, k: Sequence[int], l: Sequence[int]) -> int:
        """<k, l>_Q."""
        return sum(v * k[i] * l[j] for i, j, v in self._pairs)

    def entry(self, a: str, b: str) -> int:
        return self.mat[self.index(a)][self.index(b)]


class TorusElement:
    __slots__ = ("form", "varset", "_terms")

    def __init__(self, form: AntisymForm, terms: Mapping[Exp, GroundScalar] | None = None,
                 varset: VarSet = EMPTY) -> None:
        self.form = form
        self.varset = varset
        clean: dict[Exp, GroundScalar] = {}
        for k, c in (terms or {}).items():
            k = tuple(int(x) for x in k)
            if len(k) != form.rank:
                raise MalformedData(f"exponent {k} does not fit generators {form.gens}")
            if isinstance(c, int):
                c = GroundScalar.const(c, varset)
            if c.varset != varset:
                raise VarSetMismatch(f"{c.varset.names} vs {varset.names}")
            if k in clean:
                c = clean[k] + c
            if c.is_zero():
                clean.pop(k, None)
            else:
                clean[k] = c
        self._terms = clean

    @classmethod
    def _raw(cls, form: AntisymForm, terms: dict[Exp, GroundScalar], varset: VarSet) -> TorusElement:
        obj = cls.__new__(cls)
        obj.form = form
        obj.varset = varset
        obj._terms = terms
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, form: AntisymForm, k: Sequence[int], coeff: GroundScalar | int = 1,
                 varset: VarSet = EMPTY) -> TorusElement:
        return cls(form, {tuple(k): coeff}, varset)

    @classmethod
    def one(cls, form: AntisymForm, varset: VarSet = EMPTY) -> TorusElement:
        return cls.monomial(form, (0,) * form.rank, 1, varset)

    @classmethod
    def zero(cls, form: AntisymForm, varset: VarSet = EMPTY) -> TorusElement:
        return cls(form, {}, varset)

    @classmethod
    def gen(cls, form: AntisymForm, name: str, power: int = 1, varset: VarSet = EMPTY) -> TorusElement:
        k = [0] * form.rank
        k[form.index(name)] = power
        return cls.monomial(form, k, 1, varset)

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[Exp, GroundScalar]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exp, GroundScalar]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, k: Sequence[int]) -> GroundScalar:
        return self._terms.get(tuple(k), GroundScalar.const(0, self.varset))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return (self.form == other.form and self.varset == other.varset
                and self._terms == other._terms)

    def __hash__(self) -> int:
        return hash((self.form.gens, self.varset, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"({c.to_text()})*x^{k}" for k, c in self.items()) or "0"
        return f"TorusElement({body})"

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: TorusElement) -> None:
        if other.form != self.form:
            raise FormMismatch(f"forms on {self.form.gens} and {other.form.gens} differ")
        if other.varset != self.varset:
            raise VarSetMismatch(f"{self.varset.names} vs {other.varset.names}")

    def __add__(self, other: TorusElement) -> TorusElement:
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TorusElement._raw(self.form, out, self.varset)

    def __neg__(self) -> TorusElement:
        return TorusElement._raw(self.form, {k: -c for k, c in self._terms.items()}, self.varset)

    def __sub__(self, other: TorusElement) -> TorusElement:
        return self + (-other)

    def scale(self, c: GroundScalar | int) -> TorusElement:
        if isinstance(c, int):
            c = GroundScalar.const(c, self.varset)
        out = {}
        for k, v in self._terms.items():
            p = v * c
            if not p.is_zero():
                out[k] = p
        return TorusElement._raw(self.form, out, self.varset)

    def shift_q2(self, k: int) -> TorusElement:
        return TorusElement._raw(self.form, {e: c.shift_q2(k) for e, c in self._terms.items()},
                                 self.varset)

    def __mul__(self, other: TorusElement | GroundScalar | int) -> TorusElement:
        if isinstance(other, (int, GroundScalar)):
            return self.scale(other)
        self._check(other)
        out: dict[Exp, GroundScalar] = {}
        pairing = self.form.pairing
        for k, a in self._terms.items():
            for l, b in other._terms.items():
                e = tuple(x + y for x, y in zip(k, l))
                c = (a * b).shift_q2(pairing(k, l))
                if e in out:
                    c = out[e] + c
                if c.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = c
        return TorusElement._raw(self.form, out, self.varset)

    def __rmul__(self, other: GroundScalar | int) -> TorusElement:
        return self.scale(other)

    def __pow__(self, n: int) -> TorusElement:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial()")
        result = TorusElement.one(self.form, self.varset)
        for _ in range(n):
            result = result * self
        return result

    def map_exponents(self, fn: Callable[[Exp], Exp], form: AntisymForm) -> TorusElement:
        """Relabel every Weyl monomial; coefficients are kept."""
        out: dict[Exp, GroundScalar] = {}
        for k, c in self._terms.items():
            e = tuple(fn(k))
            out[e] = out[e] + c if e in out else c
        return TorusElement(form, out, self.varset)


# -- operations named in the interface ---------------------------------

def torus_mul(a: TorusElement, b: TorusElement) -> TorusElement:
    return a * b


def weyl_normalize(form: AntisymForm, word: Sequence[tuple[str, int]],
                   varset: VarSet = EMPTY) -> TorusElement:
    """[x_{g1}^{p1} ... x_{gn}^{pn}]_Weyl.

    The ordered product is formed letter by letter in the torus, then
    rescaled by q^{-1/2 sum_{i<j} c_ij} with c_ij = p_i p_j Q(g_i, g_j).
    """
    idx = [form.index(g) for g, _ in word]
    product = TorusElement.one(form, varset)
    for (g, p) in word:
        product = product * TorusElement.gen(form, g, p, varset)
    c = 0
    for (i, (_, pi)), (j, (_, pj)) in itertools.combinations(zip(idx, word), 2):
        c += pi * pj * form.mat[i][j]
    return product.shift_q2(-c)


def reflection(a: TorusElement) -> TorusElement:
    return TorusElement._raw(a.form, {k: c.bar() for k, c in a._terms.items()}, a.varset)


def _matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def check_hom(H: Sequence[Sequence[int]], source: AntisymForm, target: AntisymForm) -> None:
    """Raise unless H Q' H^T = Q."""
    if len(H) != source.rank or any(len(row) != target.rank for row in H):
        raise CompatibilityError(f"H must be {source.rank}x{target.rank}")
    lhs = _matmul(_matmul(H, target.mat), [list(c) for c in zip(*H)])
    if [tuple(r) for r in lhs] != [tuple(r) for r in source.mat]:
        raise CompatibilityError("H Q' H^T differs from Q")


def mono_hom(H: Sequence[Sequence[int]], source: AntisymForm, target: AntisymForm,
             a: TorusElement) -> TorusElement:
    """The multiplicatively linear map x^k -> x^{kH}."""
    if a.form != source:
        raise FormMismatch("element does not live on the source form")
    check_hom(H, source, target)
    cols = [tuple(col) for col in zip(*H)]

    def image(k: Exp) -> Exp:
        return tuple(sum(x * y for x, y in zip(k, col)) for col in cols)

    return a.map_exponents(image, target)


def symplectic_double(Q: AntisymForm, y_prefix: str = "y", u_prefix: str = "u") -> AntisymForm:
    """[[Q, -Id], [Id, 0]] on generators (y_c)_c followed by (u_c)_c."""
    r = Q.rank
    m = [[0] * (2 * r) for _ in range(2 * r)]
    for i in range(r):
        for j in range(r):
            m[i][j] = Q.mat[i][j]
        m[i][r + i] = -1
        m[r + i][i] = 1
    gens = [f"{y_prefix}_{g}" for g in Q.gens] + [f"{u_prefix}_{g}" for g in Q.gens]
    return AntisymForm.from_rows(gens, m)


# -- degrees and lead terms ---------------------------------------------

@dataclass(frozen=True)
class DegreeFunctional:
    """A linear map Z^r -> Z^d, compared lexicographically."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> DegreeFunctional:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def target_rank(self) -> int:
        return len(self.rows)

    def __call__(self, k: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, k)) for row in self.rows)


@dataclass(frozen=True)
class Lead:
    degree: tuple[int, ...]
    terms: tuple[tuple[Exp, GroundScalar], ...]

    def single(self) -> tuple[Exp, GroundScalar]:
        if len(self.terms) != 1:
            raise ValueError(f"lead set has {len(self.terms)} terms, expected one")
        return self.terms[0]


def lead_term(a: TorusElement, d: DegreeFunctional) -> Lead:
    """All terms of maximal d-degree; ties are reported, never broken."""
    if a.is_zero():
        raise ZeroElement("the zero element has no lead term")
    best = max(d(k) for k in a._terms)
    terms = tuple(sorted((k, c) for k, c in a._terms.items() if d(k) == best))
    return Lead(best, terms)


def reflection_normalize(a: TorusElement) -> TorusElement:
    """The q^{s/2} multiple of ``a`` fixed by reflection."""
    if a.is_zero():
        return a
    k, c = next(iter(a._terms.items()))
    ratio = gs_q_ratio(c.bar(), c)
    if ratio is None or ratio.denominator != 1:
        raise NotProportional("reflection of the element is not an integral q-power multiple of it")
    shift = int(ratio)  # reflection(a) = q^shift a, so scale by q^{shift/2}
    if reflection(a) != a.shift_q2(2 * shift):
        raise NotProportional("reflection of the element is not q-proportional to it")
    return a.shift_q2(shift)


def is_reflection_invariant(a: TorusElement) -> bool:
    return reflection(a) == a


# -- monoids --------------------------------------------------------------

@dataclass(frozen=True)
class Monoid:
    """A submonoid of Z^r given by a membership predicate.

    ``probes`` is an optional finite list of members used for rank
    computations; it does not have to generate the monoid.
    """

    rank_hint: int
    predicate: Callable[[Exp], bool]
    probes: tuple[Exp, ...] = ()

    def __contains__(self, k: Sequence[int]) -> bool:
        return len(k) == self.rank_hint and self.predicate(tuple(k))

    def group_rank(self) -> int:
        """Rank of the group generated by the probe members."""
        for p in self.probes:
            if p not in self:
                raise MalformedData(f"probe {p} is not a member")
        if not self.probes:
            return 0
        return int(sympy.Matrix([list(p) for p in self.probes]).rank())


def naturals(r: int) -> Monoid:
    return Monoid(r, lambda k: all(x >= 0 for x in k),
                  tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))


def monoid_member(monoid: Monoid, k: Sequence[int]) -> bool:
    return tuple(k) in monoid


def monomial_algebra_check(monoid: Monoid, a: TorusElement) -> bool:
    return all(k in monoid for k in a._terms)


def pairing_half(form: AntisymForm, k: Sequence[int], l: Sequence[int]) -> Fraction:
    """The exponent 1/2 <k, l>_Q of the product rule."""
    return Fraction(form.pairing(k, l), 2)
