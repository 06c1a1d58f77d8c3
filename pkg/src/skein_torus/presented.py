"""Small algebras known by explicit presentations.

* The monogon algebra: generators u_+ and u_- with
  q u_+ u_- - q^{-1} u_- u_+ = q - q^{-1}, kept in the normal form
  u_+^a u_-^b, together with its reduced trace u_+ -> x, u_- -> x^{-1}.
* The twice-marked sphere algebra R[alpha]/(v1 v2 alpha^2 + (q - q^{-1})^2).
* The thrice-marked sphere algebra spanned by 1, alpha_1, alpha_2, alpha_3
  and its embedding into the half-variable ground ring.
* The rescaling between the puncture-weighted basis and the plain one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import MalformedData
from .ground import GroundScalar, VarSet, delta, q_half, q_pow
from .torus import AntisymForm, TorusElement

PLUS, MINUS = 1, -1

# ---------------------------------------------------------------------------
# Monogon


class MonogonElement:
    """Sum of c_{ab} u_+^a u_-^b."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], GroundScalar | int] | None = None) -> None:
        clean: dict[tuple[int, int], GroundScalar] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise MalformedData(f"negative exponent ({a}, {b}) in a monogon element")
            if isinstance(c, int):
                c = GroundScalar.const(c)
            c = clean[(a, b)] + c if (a, b) in clean else c
            if c.is_zero():
                clean.pop((a, b), None)
            else:
                clean[(a, b)] = c
        self._terms = clean

    @classmethod
    def u_plus(cls, power: int = 1) -> MonogonElement:
        return cls({(power, 0): 1})

    @classmethod
    def u_minus(cls, power: int = 1) -> MonogonElement:
        return cls({(0, power): 1})

    @classmethod
    def scalar(cls, c: GroundScalar | int) -> MonogonElement:
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], GroundScalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonogonElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"({c.to_text()})*u+^{a}u-^{b}" for (a, b), c in sorted(self._terms.items()))
        return f"MonogonElement({body or '0'})"

    def __add__(self, other: MonogonElement) -> MonogonElement:
        out: dict = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return MonogonElement(out)

    def __neg__(self) -> MonogonElement:
        return MonogonElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: MonogonElement) -> MonogonElement:
        return self + (-other)

    def scale(self, c: GroundScalar | int) -> MonogonElement:
        return MonogonElement({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: MonogonElement | GroundScalar | int) -> MonogonElement:
        if isinstance(other, (int, GroundScalar)):
            return self.scale(other)
        return monogon_mul(self, other)

    __rmul__ = scale


@lru_cache(maxsize=None)
def _minus_plus(b: int, c: int) -> tuple[tuple[tuple[int, int], GroundScalar], ...]:
    """Normal form of u_-^b u_+^c as sorted (exponent, coefficient) pairs."""
    if b == 0 or c == 0:
        return (((c, b), GroundScalar.const(1)),)
    out: dict[tuple[int, int], GroundScalar] = {}

    def add(key: tuple[int, int], coef: GroundScalar) -> None:
        s = out[key] + coef if key in out else coef
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    if b == 1:
        # u_- u_+^c = q^2 u_+ (u_- u_+^{c-1}) - (q^2 - 1) u_+^{c-1}
        for (i, j), coef in _minus_plus(1, c - 1):
            add((i + 1, j), coef * q_pow(2))
        add((c - 1, 0), -(q_pow(2) - 1))
    else:
        # u_-^b u_+^c = u_-^{b-1} (u_- u_+^c), and u_-^{b-1} u_+^i u_-^j is recursive.
        for (i, j), coef in _minus_plus(1, c):
            for (k, l), coef2 in _minus_plus(b - 1, i):
                add((k, l + j), coef * coef2)
    return tuple(sorted(out.items()))


def monogon_mul(a: MonogonElement, b: MonogonElement) -> MonogonElement:
    out: dict[tuple[int, int], GroundScalar] = {}
    for (a1, b1), c1 in a._terms.items():
        for (a2, b2), c2 in b._terms.items():
            for (i, j), c in _minus_plus(b1, a2):
                key = (a1 + i, j + b2)
                coef = c1 * c2 * c
                out[key] = out[key] + coef if key in out else coef
    return MonogonElement(out)


def rewrite_word(word: Sequence[int], choose: str = "leftmost") -> MonogonElement:
    """Normalize a word in u_+ (=1) and u_- (=-1) by the rule
    u_- u_+ -> q^2 u_+ u_- - (q^2 - 1), applied at the leftmost or rightmost
    available position until no u_- precedes a u_+."""
    if choose not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {choose!r}")
    pending: dict[tuple[int, ...], GroundScalar] = {tuple(word): GroundScalar.const(1)}
    done: dict[tuple[int, int], GroundScalar] = {}
    while pending:
        w, coef = pending.popitem()
        spots = [i for i in range(len(w) - 1) if w[i] == MINUS and w[i + 1] == PLUS]
        if not spots:
            key = (w.count(PLUS), w.count(MINUS))
            s = done[key] + coef if key in done else coef
            if s.is_zero():
                done.pop(key, None)
            else:
                done[key] = s
            continue
        i = spots[0] if choose == "leftmost" else spots[-1]
        swapped = w[:i] + (PLUS, MINUS) + w[i + 2:]
        dropped = w[:i] + w[i + 2:]
        for nw, c in ((swapped, coef * q_pow(2)), (dropped, -coef * (q_pow(2) - 1))):
            s = pending[nw] + c if nw in pending else c
            if s.is_zero():
                pending.pop(nw, None)
            else:
                pending[nw] = s
    return MonogonElement(done)


def monogon_word(word: Sequence[int]) -> MonogonElement:
    """Product of the letters of ``word`` computed with monogon_mul."""
    out = MonogonElement.scalar(1)
    for letter in word:
        out = out * (MonogonElement.u_plus() if letter == PLUS else MonogonElement.u_minus())
    return out


def monogon_relation() -> MonogonElement:
    """q u_+ u_- - q^{-1} u_- u_+ - (q - q^{-1}); zero in the algebra."""
    up, um = MonogonElement.u_plus(), MonogonElement.u_minus()
    return (up * um).scale(q_pow(1)) - (um * up).scale(q_pow(-1)) - MonogonElement.scalar(
        q_pow(1) - q_pow(-1))


def monogon_basis_element(k: int, l: int) -> MonogonElement:
    """b(k, l) for the small cases used by the reduced trace: the normal-form
    expressions q^{1/2} u_+^2, q^{1/2}(u_+ u_- - 1), q^{1/2} u_-^2 at k = 2 and
    u_+, u_- at k = 1."""
    table = {
        (0, 0): MonogonElement.scalar(1),
        (1, 0): MonogonElement.u_plus(),
        (1, 1): MonogonElement.u_minus(),
        (2, 0): MonogonElement.u_plus(2).scale(q_half(1)),
        (2, 1): (MonogonElement.u_plus() * MonogonElement.u_minus()
                 - MonogonElement.scalar(1)).scale(q_half(1)),
        (2, 2): MonogonElement.u_minus(2).scale(q_half(1)),
    }
    if (k, l) not in table:
        raise MalformedData(f"b({k},{l}) has no closed form here")
    return table[(k, l)]


def diagram_basis(k: int) -> list[tuple[int, int]]:
    """Index pairs (k', l) with 0 <= l <= k' <= k of the diagram basis."""
    return [(kk, l) for kk in range(k + 1) for l in range(kk + 1)]


def normal_monomials(k: int) -> list[tuple[int, int]]:
    """Normal-form monomials u_+^a u_-^b with a + b <= k."""
    return [(a, b) for a in range(k + 1) for b in range(k + 1 - a)]


def monogon_filtration_rank(k: int) -> int:
    """Number of diagram-basis elements b(k', l) of degree k' < k.

    Equals the number of normal-form monomials of total degree < k, i.e.
    k(k+1)/2.  The inclusive count is ``len(diagram_basis(k))``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return len(diagram_basis(k - 1)) if k else 0


MONOGON_TRACE_FORM = AntisymForm.zero(("x",))


def monogon_reduced_trace(a: MonogonElement) -> TorusElement:
    """Algebra map u_+ -> x, u_- -> x^{-1} into the one-variable torus."""
    out: dict[tuple[int, ...], GroundScalar] = {}
    for (i, j), c in a._terms.items():
        key = (i - j,)
        out[key] = out[key] + c if key in out else c
    return TorusElement(MONOGON_TRACE_FORM, out)


# ---------------------------------------------------------------------------
# Sphere with two marked points

SIGMA02_VARS = VarSet(("v1", "v2"))


@dataclass(frozen=True)
class Sigma02Element:
    """p0 + p1 * alpha with alpha^2 = -(q - q^{-1})^2 (v1 v2)^{-1}."""

    p0: GroundScalar
    p1: GroundScalar

    @classmethod
    def of(cls, p0: GroundScalar | int = 0, p1: GroundScalar | int = 0) -> Sigma02Element:
        def lift(x):
            return GroundScalar.const(x, SIGMA02_VARS) if isinstance(x, int) else x
        return cls(lift(p0), lift(p1))

    def __add__(self, other: Sigma02Element) -> Sigma02Element:
        return Sigma02Element(self.p0 + other.p0, self.p1 + other.p1)

    def __sub__(self, other: Sigma02Element) -> Sigma02Element:
        return Sigma02Element(self.p0 - other.p0, self.p1 - other.p1)

    def __mul__(self, other: Sigma02Element) -> Sigma02Element:
        return sigma02_mul(self, other)

    def is_zero(self) -> bool:
        return self.p0.is_zero() and self.p1.is_zero()


def sigma02_alpha_square() -> GroundScalar:
    """The reduction of alpha^2."""
    qq = q_pow(1, SIGMA02_VARS) - q_pow(-1, SIGMA02_VARS)
    inv = GroundScalar({(0, (-2, -2)): 1}, SIGMA02_VARS)
    return -(qq * qq) * inv


def sigma02_mul(a: Sigma02Element, b: Sigma02Element) -> Sigma02Element:
    sq = sigma02_alpha_square()
    return Sigma02Element(a.p0 * b.p0 + a.p1 * b.p1 * sq, a.p0 * b.p1 + a.p1 * b.p0)


def sigma02_relation_value(alpha_square: Sigma02Element) -> Sigma02Element:
    """v1 v2 alpha^2 + (q - q^{-1})^2 evaluated on a computed alpha^2."""
    v1v2 = GroundScalar({(0, (2, 2)): 1}, SIGMA02_VARS)
    qq = q_pow(1, SIGMA02_VARS) - q_pow(-1, SIGMA02_VARS)
    return Sigma02Element(alpha_square.p0 * v1v2 + qq * qq, alpha_square.p1 * v1v2)


# ---------------------------------------------------------------------------
# Sphere with three marked points

SIGMA03_VARS = VarSet(("v1", "v2", "v3"))


def _v(exps: Sequence[int]) -> GroundScalar:
    """Monomial with doubled v-exponents ``exps``."""
    return GroundScalar({(0, tuple(exps)): 1}, SIGMA03_VARS)


def _unit(i: int, k: int) -> tuple[int, int, int]:
    e = [0, 0, 0]
    e[i % 3] = k
    return tuple(e)


def sigma03_product_weight(i: int, convention: str) -> int:
    """Index (0-based) of the variable multiplying alpha_i alpha_{i+1}.

    ``"i+1"`` reads the relation as v_{i+1} alpha_i alpha_{i+1} = delta alpha_{i+2};
    ``"i+2"`` as v_{i+2} alpha_i alpha_{i+1} = delta alpha_{i+2}.
    """
    if convention == "i+1":
        return (i + 1) % 3
    if convention == "i+2":
        return (i + 2) % 3
    raise ValueError(f"unknown convention {convention!r}")


def sigma03_embed_alpha(i: int) -> GroundScalar:
    """delta * v_{i+1}^{-1/2} v_{i+2}^{-1/2} (0-based i)."""
    e = [0, 0, 0]
    e[(i + 1) % 3] = -1
    e[(i + 2) % 3] = -1
    return delta(SIGMA03_VARS) * _v(e)


def sigma03_convention_holds(convention: str) -> bool:
    """Substitute the embedding into both relation families of a convention."""
    d = delta(SIGMA03_VARS)
    for i in range(3):
        w = sigma03_product_weight(i, convention)
        lhs = _v(_unit(w, 2)) * sigma03_embed_alpha(i) * sigma03_embed_alpha(i + 1)
        if lhs - d * sigma03_embed_alpha(i + 2):
            return False
        sq = _v(_unit(i + 1, 2)) * _v(_unit(i + 2, 2)) * sigma03_embed_alpha(i) ** 2
        if sq - d * d:
            return False
    return True


def _adopt_convention() -> str:
    good = [c for c in ("i+1", "i+2") if sigma03_convention_holds(c)]
    if len(good) != 1:
        raise RuntimeError(f"expected exactly one consistent convention, found {good}")
    return good[0]


SIGMA03_CONVENTION = _adopt_convention()


@dataclass(frozen=True)
class Sigma03Element:
    """c0 + c1 alpha_1 + c2 alpha_2 + c3 alpha_3, coefficients over v_i^{+-1/2}."""

    coeffs: tuple[GroundScalar, GroundScalar, GroundScalar, GroundScalar]

    @classmethod
    def of(cls, *cs: GroundScalar | int) -> Sigma03Element:
        full = list(cs) + [0] * (4 - len(cs))
        return cls(tuple(GroundScalar.const(c, SIGMA03_VARS) if isinstance(c, int) else c
                         for c in full))

    @classmethod
    def alpha(cls, i: int) -> Sigma03Element:
        """alpha_i with 1-based i."""
        cs: list[GroundScalar | int] = [0, 0, 0, 0]
        cs[i] = 1
        return cls.of(*cs)

    def __add__(self, other: Sigma03Element) -> Sigma03Element:
        return Sigma03Element(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Sigma03Element) -> Sigma03Element:
        return Sigma03Element(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: GroundScalar) -> Sigma03Element:
        return Sigma03Element(tuple(a * c for a in self.coeffs))

    def __mul__(self, other: Sigma03Element) -> Sigma03Element:
        return sigma03_mul(self, other)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


def _alpha_product(i: int, j: int, convention: str) -> Sigma03Element:
    """alpha_i alpha_j reduced to the basis, 0-based indices."""
    d = delta(SIGMA03_VARS)
    out: list[GroundScalar | int] = [0, 0, 0, 0]
    if i == j:
        out[0] = d * d * _v(_unit(i + 1, -2)) * _v(_unit(i + 2, -2))
        return Sigma03Element.of(*out)
    if (j - i) % 3 == 2:
        i, j = j, i
    w = sigma03_product_weight(i, convention)
    out[1 + (i + 2) % 3] = d * _v(_unit(w, -2))
    return Sigma03Element.of(*out)


def sigma03_mul(a: Sigma03Element, b: Sigma03Element,
                convention: str = SIGMA03_CONVENTION) -> Sigma03Element:
    result = Sigma03Element.of(a.coeffs[0] * b.coeffs[0])
    for i in range(3):
        result = result + Sigma03Element.of(0, *[
            a.coeffs[0] * b.coeffs[1 + j] if j == i else 0 for j in range(3)])
        result = result + Sigma03Element.of(0, *[
            a.coeffs[1 + j] * b.coeffs[0] if j == i else 0 for j in range(3)])
    for i in range(3):
        for j in range(3):
            c = a.coeffs[1 + i] * b.coeffs[1 + j]
            if not c.is_zero():
                result = result + _alpha_product(i, j, convention).scale(c)
    return result


def sigma03_embed(a: Sigma03Element) -> GroundScalar:
    out = a.coeffs[0]
    for i in range(3):
        out = out + a.coeffs[1 + i] * sigma03_embed_alpha(i)
    return out


def sigma03_image_classes() -> list[tuple[int, int, int]]:
    """Parity class of the doubled v-exponents of the images of 1, alpha_1..3.

    Images in distinct classes modulo integral exponents are linearly
    independent over the integral-exponent ring.
    """
    classes = []
    for elt in (Sigma03Element.of(1), *(Sigma03Element.alpha(i) for i in (1, 2, 3))):
        img = sigma03_embed(elt)
        pars = {tuple(e % 2 for e in v2) for (_, v2), _ in img.items()}
        if len(pars) != 1:
            raise RuntimeError("image is not homogeneous in the parity grading")
        classes.append(pars.pop())
    return classes


def lry_alpha(i: int) -> Sigma03Element:
    """The unweighted arc alpha_i (1-based) written in the weighted algebra:
    v_{i+1}^{1/2} v_{i+2}^{1/2} alpha_i."""
    return Sigma03Element.alpha(i).scale(ry_rescale(
        GroundScalar.const(1, SIGMA03_VARS),
        {SIGMA03_VARS.names[i % 3]: 1, SIGMA03_VARS.names[(i + 1) % 3]: 1}, inverse=True))


# ---------------------------------------------------------------------------
# Rescaling


def ry_rescale(coeff: GroundScalar, boundary_hits: Mapping[str, int],
               inverse: bool = False) -> GroundScalar:
    """Multiply by prod_m m^{-hits(m)/2} (or its inverse)."""
    sign = 1 if inverse else -1
    v2 = [0] * len(coeff.varset)
    for name, hits in boundary_hits.items():
        if hits < 0:
            raise MalformedData(f"negative hit count for {name}")
        v2[coeff.varset.index(name)] += sign * hits
    return coeff.shift_v2(tuple(v2))
