"""Exact Laurent polynomials in q^{1/2} and optional puncture variables v^{1/2}.

Every exponent is stored doubled, so ``q2 = 3`` means q^{3/2}.  Scalars are
immutable and kept in canonical form (no zero coefficients), which makes
``==`` and ``hash`` structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import MalformedData, VarSetMismatch

Key = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class VarSet:
    """Ordered names of the commuting puncture variables."""

    names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise MalformedData(f"duplicate variable names in {self.names}")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise MalformedData(f"unknown puncture variable {name!r}") from None


EMPTY = VarSet()

ScalarLike = Union["GroundScalar", int]


class GroundScalar:
    __slots__ = ("varset", "_terms", "_hash")

    def __init__(self, terms: Mapping[Key, int] | Iterable[tuple[Key, int]] = (),
                 varset: VarSet = EMPTY) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Key, int] = {}
        width = len(varset)
        for (q2, v2), c in items:
            v2 = tuple(v2)
            if len(v2) != width:
                raise MalformedData(f"v-exponent {v2} does not fit {varset.names}")
            key = (int(q2), v2)
            clean[key] = clean.get(key, 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}
        self.varset = varset
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Key, int], varset: VarSet) -> GroundScalar:
        # Trusted constructor: caller guarantees canonical form.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.varset = varset
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int, varset: VarSet = EMPTY) -> GroundScalar:
        return cls._raw({(0, (0,) * len(varset)): c} if c else {}, varset)

    @classmethod
    def q_half(cls, k: int, varset: VarSet = EMPTY, coeff: int = 1) -> GroundScalar:
        """coeff * q^{k/2}."""
        return cls._raw({(k, (0,) * len(varset)): coeff} if coeff else {}, varset)

    @classmethod
    def var_half(cls, name: str, k: int, varset: VarSet) -> GroundScalar:
        """The monomial v^{k/2} for the named puncture variable."""
        v2 = [0] * len(varset)
        v2[varset.index(name)] = k
        return cls._raw({(0, tuple(v2)): 1}, varset)

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Key, int]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = GroundScalar.const(other, self.varset)
        if not isinstance(other, GroundScalar):
            return NotImplemented
        return self.varset == other.varset and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"GroundScalar({self.to_text()})"

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other: ScalarLike) -> GroundScalar:
        if isinstance(other, int):
            return GroundScalar.const(other, self.varset)
        if not isinstance(other, GroundScalar):
            raise TypeError(f"cannot combine GroundScalar with {type(other).__name__}")
        if other.varset != self.varset:
            raise VarSetMismatch(f"{self.varset.names} vs {other.varset.names}")
        return other

    def __add__(self, other: ScalarLike) -> GroundScalar:
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return GroundScalar._raw(out, self.varset)

    __radd__ = __add__

    def __neg__(self) -> GroundScalar:
        return GroundScalar._raw({k: -c for k, c in self._terms.items()}, self.varset)

    def __sub__(self, other: ScalarLike) -> GroundScalar:
        return self + (-self._coerce(other))

    def __rsub__(self, other: ScalarLike) -> GroundScalar:
        return self._coerce(other) - self

    def __mul__(self, other: ScalarLike) -> GroundScalar:
        other = self._coerce(other)
        out: dict[Key, int] = {}
        for (qa, va), ca in self._terms.items():
            for (qb, vb), cb in other._terms.items():
                key = (qa + qb, tuple(x + y for x, y in zip(va, vb)))
                out[key] = out.get(key, 0) + ca * cb
        return GroundScalar._raw({k: c for k, c in out.items() if c}, self.varset)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GroundScalar:
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            ((q2, v2), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return GroundScalar._raw({(-q2 * -n, tuple(-x * -n for x in v2)): c ** -n},
                                     self.varset)
        result = GroundScalar.const(1, self.varset)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_q2(self, k: int) -> GroundScalar:
        """Multiply by q^{k/2}."""
        if not k:
            return self
        return GroundScalar._raw({(q2 + k, v2): c for (q2, v2), c in self._terms.items()},
                                 self.varset)

    def shift_v2(self, v2: tuple[int, ...]) -> GroundScalar:
        """Multiply by the monomial with doubled v-exponent vector ``v2``."""
        if len(v2) != len(self.varset):
            raise VarSetMismatch(f"shift {v2} does not fit {self.varset.names}")
        return GroundScalar._raw(
            {(q2, tuple(a + b for a, b in zip(w, v2))): c for (q2, w), c in self._terms.items()},
            self.varset)

    def bar(self) -> GroundScalar:
        return GroundScalar._raw({(-q2, v2): c for (q2, v2), c in self._terms.items()},
                                 self.varset)

    def specialize_vars(self) -> GroundScalar:
        """Send every puncture variable to 1."""
        out: dict[Key, int] = {}
        for (q2, _), c in self._terms.items():
            out[(q2, ())] = out.get((q2, ()), 0) + c
        return GroundScalar._raw({k: c for k, c in out.items() if c}, EMPTY)

    def extend(self, varset: VarSet) -> GroundScalar:
        """Re-key a scalar over a larger variable set (by name)."""
        idx = [varset.index(n) for n in self.varset.names]
        out = {}
        for (q2, v2), c in self._terms.items():
            w = [0] * len(varset)
            for i, e in zip(idx, v2):
                w[i] = e
            out[(q2, tuple(w))] = c
        return GroundScalar._raw(out, varset)

    # -- text ----------------------------------------------------------
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (q2, v2), c in sorted(self._terms.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            factors = []
            if q2:
                factors.append(f"q^({Fraction(q2, 2)})")
            for name, e in zip(self.varset.names, v2):
                if e:
                    factors.append(f"{name}^({Fraction(e, 2)})")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def q_half(k: int, varset: VarSet = EMPTY) -> GroundScalar:
    return GroundScalar.q_half(k, varset)


def q_pow(k: int, varset: VarSet = EMPTY) -> GroundScalar:
    return GroundScalar.q_half(2 * k, varset)


def delta(varset: VarSet = EMPTY) -> GroundScalar:
    """q^{1/2} + q^{-1/2}."""
    return q_half(1, varset) + q_half(-1, varset)


def gs_mul(a: GroundScalar, b: GroundScalar) -> GroundScalar:
    return a * b


def gs_bar(a: GroundScalar) -> GroundScalar:
    return a.bar()


def gs_q_ratio(a: GroundScalar, b: GroundScalar) -> Fraction | None:
    """The half-integer r with a = q^r * b, or None when no such r exists."""
    if b.is_zero():
        raise ValueError("gs_q_ratio needs a nonzero denominator")
    if a.varset != b.varset:
        raise VarSetMismatch(f"{a.varset.names} vs {b.varset.names}")
    if len(a) != len(b):
        return None
    (qa, va), ca = max(a._terms.items())
    (qb, vb), cb = max(b._terms.items())
    if ca != cb or va != vb:
        return None
    shift = qa - qb
    if b.shift_q2(shift) != a:
        return None
    return Fraction(shift, 2)
