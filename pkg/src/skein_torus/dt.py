"""Modified Dehn-Thurston coordinates on the three pants types.

A face of type j has bold sides b_1..b_j (lifts of decomposition curves) and
dashed sides b_{j+1}..b_3 (surface boundary).  Face coordinates are
(n, t) in N^j x Z^j.  Standard curves are named by tags: ``l<i>`` for the
loop parallel to b_i and ``a<jk>`` for the arc from b_j to b_k.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ExcludedSurface, IllegalTag, MalformedData, MembershipError, UnmatchedFamily

TAGS: dict[int, tuple[str, ...]] = {
    3: ("l1", "l2", "l3", "a12", "a13", "a23", "a11", "a22", "a33"),
    2: ("l1", "l2", "a12", "a13", "a23", "a11", "a22"),
    1: ("l1", "a11", "a12", "a13", "a23"),
}


def _check_type(face_type: int) -> None:
    if face_type not in TAGS:
        raise MalformedData(f"face type must be 1, 2 or 3, got {face_type}")


def _check_tag(face_type: int, tag: str) -> None:
    _check_type(face_type)
    if tag not in TAGS[face_type]:
        raise IllegalTag(f"{tag!r} is not a standard curve of P{face_type}")


def mod3(i: int) -> int:
    """Side index i (any integer) reduced to 1..3."""
    return (i - 1) % 3 + 1


@dataclass(frozen=True)
class FaceCoord:
    face_type: int
    n: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_type(self.face_type)
        if len(self.n) != self.face_type or len(self.t) != self.face_type:
            raise MalformedData(f"P{self.face_type} coordinates need {self.face_type} entries each")

    @classmethod
    def zero(cls, face_type: int) -> FaceCoord:
        return cls(face_type, (0,) * face_type, (0,) * face_type)

    def __add__(self, other: FaceCoord) -> FaceCoord:
        if other.face_type != self.face_type:
            raise MalformedData("cannot add coordinates of different face types")
        return FaceCoord(self.face_type, tuple(a + b for a, b in zip(self.n, other.n)),
                         tuple(a + b for a, b in zip(self.t, other.t)))

    @property
    def vector(self) -> tuple[int, ...]:
        return self.n + self.t


def tag_endpoints(tag: str) -> tuple[int, ...]:
    """Sides hit by the endpoints of a standard curve (with multiplicity)."""
    if tag.startswith("l"):
        return ()
    return (int(tag[1]), int(tag[2]))


def bold_endpoints(face_type: int, tag: str) -> tuple[int, ...]:
    return tuple(s for s in tag_endpoints(tag) if s <= face_type)


def dashed_parity(n: Sequence[int]) -> int:
    """Number of hits on the dashed side of a P2 face, fixed by parity."""
    return (n[0] + n[1]) % 2


def add_function(face_type: int, i: int, n: Sequence[int]) -> int:
    """Even correction entering t_i; i is 1-based."""
    _check_type(face_type)
    if not 1 <= i <= face_type:
        raise MalformedData(f"side {i} is not bold in P{face_type}")
    if len(n) != face_type:
        raise MalformedData(f"P{face_type} needs {face_type} n-entries")
    if face_type == 3:
        return max(0, n[mod3(i - 1) - 1] - n[i - 1] - n[mod3(i + 1) - 1])
    if face_type == 2:
        return max(0, n[0] - n[1] - dashed_parity(n)) if i == 1 else 0
    return 0


def standard_coord(face_type: int, tag: str) -> FaceCoord:
    _check_tag(face_type, tag)
    j = face_type
    n = [0] * j
    t = [0] * j
    if tag.startswith("l"):
        t[int(tag[1]) - 1] = 2
        return FaceCoord(j, tuple(n), tuple(t))
    a, b = int(tag[1]), int(tag[2])
    for s in (a, b):
        if s <= j:
            n[s - 1] += 1
    if j == 3 and a == b:
        t[mod3(a + 1) - 1] = 2
    elif j == 2 and tag == "a11":
        t[0] = 2
    elif j == 1 and tag == "a13":
        t[0] = -1
    elif j == 1 and tag == "a23":
        t[0] = 1
    return FaceCoord(j, tuple(n), tuple(t))


def twist_coord(face_type: int, i: int, c: FaceCoord, power: int = 1) -> FaceCoord:
    """Coordinates after applying the i-th boundary twist ``power`` times."""
    if c.face_type != face_type:
        raise MalformedData("face type mismatch")
    if not 1 <= i <= face_type:
        raise MalformedData(f"side {i} is not bold in P{face_type}")
    if c.n[i - 1] == 0:
        return c
    t = list(c.t)
    t[i - 1] += 2 * power
    return FaceCoord(face_type, c.n, tuple(t))


def lambda_violation(face_type: int, c: FaceCoord) -> str | None:
    if c.face_type != face_type:
        return "face type mismatch"
    if any(x < 0 for x in c.n):
        return "negative intersection number"
    j = face_type
    if j == 3 and sum(c.n) % 2:
        return "n_1 + n_2 + n_3 is odd"
    if j in (2, 3) and any(x % 2 for x in c.t):
        return "odd twist coordinate"
    for i in range(1, j + 1):
        if c.n[i - 1] == 0:
            need = add_function(j, i, c.n)
            if c.t[i - 1] < need:
                return f"n_{i} = 0 but t_{i} = {c.t[i - 1]} < {need}"
    return None


def lambda_member(face_type: int, c: FaceCoord) -> bool:
    return lambda_violation(face_type, c) is None


# -- face diagrams -------------------------------------------------------------


def _arc_counts(n: Sequence[int]) -> dict[str, int]:
    """Unique arc system with n_i endpoints on side i of a three-sided face."""
    if sum(n) % 2:
        raise MembershipError("endpoint total is odd")
    out: dict[str, int] = {}
    for i in (1, 2, 3):
        j, k = mod3(i + 1), mod3(i + 2)
        ni, nj, nk = n[i - 1], n[j - 1], n[k - 1]
        if ni > nj + nk:
            out[f"a{min(i, j)}{max(i, j)}"] = nj
            out[f"a{min(i, k)}{max(i, k)}"] = nk
            out[f"a{i}{i}"] = (ni - nj - nk) // 2
            return {t: c for t, c in out.items() if c}
    for i in (1, 2, 3):
        j, k = sorted((mod3(i + 1), mod3(i + 2)))
        out[f"a{j}{k}"] = (n[j - 1] + n[k - 1] - n[i - 1]) // 2
    return {t: c for t, c in out.items() if c}


def _ordered(face_type: int, counts: Mapping[str, int]) -> tuple[tuple[str, int], ...]:
    return tuple((t, counts[t]) for t in TAGS[face_type] if counts.get(t, 0))


@dataclass(frozen=True)
class Component:
    tag: str
    twist: tuple[int, ...]


@dataclass(frozen=True)
class FaceDiagram:
    """A strongly simple diagram: a multiset of standard curves plus the total
    power of each boundary twist applied to the whole diagram."""

    face_type: int
    counts: tuple[tuple[str, int], ...]
    twists: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_type(self.face_type)
        for tag, c in self.counts:
            _check_tag(self.face_type, tag)
            if c <= 0:
                raise MalformedData("multiplicities must be positive")
        canon = _ordered(self.face_type, dict(self.counts))
        if canon != self.counts or len(dict(self.counts)) != len(self.counts):
            raise MalformedData("counts must list each tag once in canonical order")
        if len(self.twists) != self.face_type:
            raise MalformedData(f"P{self.face_type} needs {self.face_type} twist entries")
        why = self._violation()
        if why:
            raise MalformedData(f"not a strongly simple diagram: {why}")

    @classmethod
    def build(cls, face_type: int, counts: Mapping[str, int] | Iterable[tuple[str, int]] = (),
              twists: Sequence[int] | None = None) -> FaceDiagram:
        merged: Counter[str] = Counter()
        for tag, c in (counts.items() if isinstance(counts, Mapping) else counts):
            _check_tag(face_type, tag)
            merged[tag] += c
        return cls(face_type, _ordered(face_type, merged),
                   tuple(twists) if twists is not None else (0,) * face_type)

    @classmethod
    def from_components(cls, face_type: int,
                        components: Iterable[tuple[str, Mapping[int, int]] | str]) -> FaceDiagram:
        """Components given as a tag or (tag, {side: twist power})."""
        merged: Counter[str] = Counter()
        twists = [0] * face_type
        for comp in components:
            tag, tw = (comp, {}) if isinstance(comp, str) else comp
            _check_tag(face_type, tag)
            merged[tag] += 1
            for side, power in tw.items():
                if side not in bold_endpoints(face_type, tag):
                    raise MalformedData(f"{tag} does not meet bold side {side}")
                twists[side - 1] += power
        return cls(face_type, _ordered(face_type, merged), tuple(twists))

    @property
    def count_map(self) -> dict[str, int]:
        return dict(self.counts)

    @property
    def n(self) -> tuple[int, ...]:
        out = [0] * self.face_type
        for tag, c in self.counts:
            for s in bold_endpoints(self.face_type, tag):
                out[s - 1] += c
        return tuple(out)

    def loops(self, i: int) -> int:
        return self.count_map.get(f"l{i}", 0)

    def _violation(self) -> str | None:
        j = self.face_type
        cm = self.count_map
        n = self.n
        for i in range(1, j + 1):
            if n[i - 1] and cm.get(f"l{i}", 0):
                return f"loop l{i} together with arcs on b{i}"
            if not n[i - 1] and self.twists[i - 1]:
                return f"twist on b{i} which carries no endpoint"
        arcs = {t: c for t, c in cm.items() if not t.startswith("l")}
        if j == 3:
            if sum(n) % 2:
                return "odd endpoint total"
            if arcs != _arc_counts(n):
                return "arc system is not the one determined by n"
        elif j == 2:
            if arcs != _arc_counts((n[0], n[1], dashed_parity(n))):
                return "arc system is not the one determined by n"
        else:
            d2 = cm.get("a12", 0) + cm.get("a23", 0)
            d3 = cm.get("a13", 0) + cm.get("a23", 0)
            if d2 > 1 or d3 > 1:
                return "two endpoints on one dashed side"
            if n[0] and cm.get("a23", 0):
                return "a23 together with arcs on b1"
        return None

    def components(self) -> list[Component]:
        """Canonical expansion: tags in table order; each side's twist spread
        over its endpoint slots as evenly as possible, earlier slots first."""
        j = self.face_type
        tags: list[str] = []
        for tag, c in self.counts:
            tags += [tag] * c
        shares = [[0] * j for _ in tags]
        for i in range(1, j + 1):
            slots = [ci for ci, tag in enumerate(tags) for s in bold_endpoints(j, tag) if s == i]
            m = self.twists[i - 1]
            if not slots:
                continue
            q, r = divmod(m, len(slots))
            for pos, ci in enumerate(slots):
                shares[ci][i - 1] += q + (1 if pos < r else 0)
        return [Component(tag, tuple(s)) for tag, s in zip(tags, shares)]


def face_coord(d: FaceDiagram) -> FaceCoord:
    total = FaceCoord.zero(d.face_type)
    for comp in d.components():
        c = standard_coord(d.face_type, comp.tag)
        for i, power in enumerate(comp.twist, start=1):
            if power:
                c = twist_coord(d.face_type, i, c, power)
        total = total + c
    return total


def decompose_face_coord(face_type: int, c: FaceCoord) -> FaceDiagram:
    why = lambda_violation(face_type, c)
    if why:
        raise MembershipError(f"P{face_type} condition: {why}")
    j = face_type
    counts: dict[str, int] = {}
    twists = [0] * j
    if j == 1:
        n1, t1 = c.n[0], c.t[0]
        if n1 == 0:
            loops, d = divmod(t1, 2)
            counts = {"l1": loops, "a23": d}
        else:
            d3 = t1 % 2
            d2 = (n1 - d3) % 2
            counts = {"a11": (n1 - d2 - d3) // 2, "a12": d2, "a13": d3}
            twists[0] = (t1 + d3) // 2
        return FaceDiagram.build(1, {k: v for k, v in counts.items() if v}, twists)
    n3 = c.n if j == 3 else (c.n[0], c.n[1], dashed_parity(c.n))
    counts = _arc_counts(n3)
    for i in range(1, j + 1):
        extra = (c.t[i - 1] - add_function(j, i, c.n)) // 2
        if c.n[i - 1] == 0:
            if extra:
                counts[f"l{i}"] = extra
        else:
            twists[i - 1] = extra
    return FaceDiagram.build(j, counts, twists)


def rotate_tag(tag: str, shift: int) -> str:
    """Relabel the sides of a P3 tag by i -> i + shift (mod 3)."""
    if tag.startswith("l"):
        return f"l{mod3(int(tag[1]) + shift)}"
    a, b = sorted((mod3(int(tag[1]) + shift), mod3(int(tag[2]) + shift)))
    return f"a{a}{b}"


def rotate_coord(c: FaceCoord, shift: int) -> FaceCoord:
    """Move the entry at side i to side i + shift on a P3 face."""
    n = [0, 0, 0]
    t = [0, 0, 0]
    for i in (1, 2, 3):
        n[mod3(i + shift) - 1] = c.n[i - 1]
        t[mod3(i + shift) - 1] = c.t[i - 1]
    return FaceCoord(3, tuple(n), tuple(t))


# -- global data -----------------------------------------------------------------

C_PRIME, C_DOUBLE = 1, 2


@dataclass(frozen=True)
class Lift:
    curve: str
    lift: int  # 1 for c', 2 for c''


@dataclass(frozen=True)
class PantsFace:
    type: int
    bold: tuple[Lift, ...]
    dashed: tuple[str, ...]


def is_excluded(g: int, m: int) -> bool:
    return (g == 0 and m <= 4) or (g == 1 and m == 0)


@dataclass(frozen=True)
class GlobalCoord:
    n: tuple[int, ...]
    t: tuple[int, ...]

    def __add__(self, other: GlobalCoord) -> GlobalCoord:
        return GlobalCoord(tuple(a + b for a, b in zip(self.n, other.n)),
                           tuple(a + b for a, b in zip(self.t, other.t)))

    @property
    def vector(self) -> tuple[int, ...]:
        return self.n + self.t


@dataclass(frozen=True)
class DTDatum:
    g: int
    m: int
    curves: tuple[str, ...]
    faces: tuple[PantsFace, ...]
    boundaries: tuple[str, ...] = ()
    _where: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.g < 0 or self.m < 0:
            raise MalformedData("genus and boundary count must be nonnegative")
        if is_excluded(self.g, self.m):
            raise ExcludedSurface(
                f"(g, m) = ({self.g}, {self.m}) has no pants decomposition of this kind; "
                "its algebra is handled directly in skein_torus.presented")
        r = 3 * self.g - 3 + self.m
        if len(self.curves) != r or len(set(self.curves)) != r:
            raise MalformedData(f"expected {r} distinct curves, got {self.curves}")
        if len(self.faces) != 2 * self.g - 2 + self.m:
            raise MalformedData(f"expected {2 * self.g - 2 + self.m} faces, got {len(self.faces)}")
        bnames = self.boundaries or tuple(f"B{i}" for i in range(1, self.m + 1))
        object.__setattr__(self, "boundaries", bnames)
        if len(bnames) != self.m or len(set(bnames)) != self.m:
            raise MalformedData(f"expected {self.m} distinct boundary names")
        where: dict[tuple[str, int], tuple[int, int]] = {}
        dashed: Counter[str] = Counter()
        for fi, f in enumerate(self.faces):
            if f.type not in (1, 2, 3) or len(f.bold) != f.type or len(f.dashed) != 3 - f.type:
                raise MalformedData(f"face {fi} has inconsistent sides")
            for si, lift in enumerate(f.bold, start=1):
                if lift.curve not in self.curves or lift.lift not in (C_PRIME, C_DOUBLE):
                    raise MalformedData(f"face {fi} side {si}: bad lift {lift}")
                key = (lift.curve, lift.lift)
                if key in where:
                    raise MalformedData(f"lift {key} appears twice")
                if f.type == 1 and lift.lift == C_PRIME:
                    raise MalformedData(f"c' lift of {lift.curve} lies on a P1 face")
                where[key] = (fi, si)
            dashed.update(f.dashed)
            if f.type == 2:
                c1, c2 = (self.curves.index(x.curve) for x in f.bold)
                if c1 > c2:
                    raise MalformedData(f"face {fi}: curve under b1 comes after the curve under b2")
        for c in self.curves:
            for lift in (C_PRIME, C_DOUBLE):
                if (c, lift) not in where:
                    raise MalformedData(f"curve {c} is missing lift {lift}")
        if set(dashed) != set(bnames) or any(v != 1 for v in dashed.values()):
            raise MalformedData("every boundary component must be a dashed side exactly once")
        object.__setattr__(self, "_where", where)

    @property
    def r(self) -> int:
        return len(self.curves)

    @property
    def m_bar(self) -> int:
        return sum(f.type == 2 for f in self.faces)

    def where(self, curve: str, lift: int) -> tuple[int, int]:
        """(face index, 1-based side) carrying a lift."""
        return self._where[(curve, lift)]

    def is_even(self, curve: str) -> bool:
        return all(self.faces[self.where(curve, k)[0]].type != 1 for k in (C_PRIME, C_DOUBLE))

    def face_n(self, fi: int, n: Mapping[str, int] | Sequence[int]) -> tuple[int, ...]:
        nm = self._as_map(n)
        return tuple(nm[l.curve] for l in self.faces[fi].bold)

    def _as_map(self, v: Mapping[str, int] | Sequence[int]) -> dict[str, int]:
        if isinstance(v, Mapping):
            return {c: int(v[c]) for c in self.curves}
        if len(v) != self.r:
            raise MalformedData(f"expected {self.r} entries")
        return dict(zip(self.curves, v))

    def lift_add(self, curve: str, lift: int, n: Sequence[int]) -> int:
        fi, si = self.where(curve, lift)
        f = self.faces[fi]
        return add_function(f.type, si, self.face_n(fi, n)) if f.type != 1 else 0


def global_violation(D: DTDatum, c: GlobalCoord) -> str | None:
    if len(c.n) != D.r or len(c.t) != D.r:
        return f"expected {D.r} entries in n and t"
    if any(x < 0 for x in c.n):
        return "negative intersection number"
    for fi, f in enumerate(D.faces):
        if f.type == 3 and sum(D.face_n(fi, c.n)) % 2:
            return f"odd n-sum on face {fi}"
    for k, curve in enumerate(D.curves):
        if D.is_even(curve) and c.t[k] % 2:
            return f"t({curve}) odd on an even curve"
        if c.n[k] == 0:
            need = D.lift_add(curve, C_PRIME, c.n) + D.lift_add(curve, C_DOUBLE, c.n)
            if c.t[k] < need:
                return f"n({curve}) = 0 but t({curve}) = {c.t[k]} < {need}"
    return None


def global_member(D: DTDatum, c: GlobalCoord) -> bool:
    return global_violation(D, c) is None


def split_coordinates(D: DTDatum, c: GlobalCoord) -> list[FaceCoord]:
    why = global_violation(D, c)
    if why:
        raise MembershipError(f"global condition: {why}")
    lift_t: dict[tuple[str, int], int] = {}
    for k, curve in enumerate(D.curves):
        a = D.lift_add(curve, C_PRIME, c.n)
        lift_t[(curve, C_PRIME)] = a
        lift_t[(curve, C_DOUBLE)] = c.t[k] - a
    out = []
    for fi, f in enumerate(D.faces):
        fc = FaceCoord(f.type, D.face_n(fi, c.n), tuple(lift_t[(l.curve, l.lift)] for l in f.bold))
        if not lambda_member(f.type, fc):
            raise AssertionError(f"split piece on face {fi} left its monoid")
        out.append(fc)
    return out


def patch_coordinates(D: DTDatum, pieces: Sequence[FaceCoord]) -> GlobalCoord:
    if len(pieces) != len(D.faces):
        raise MalformedData("one coordinate per face required")
    n: dict[str, list[int]] = {c: [0, 0] for c in D.curves}
    t: dict[str, int] = {c: 0 for c in D.curves}
    for f, p in zip(D.faces, pieces):
        if p.face_type != f.type:
            raise MalformedData("face type mismatch")
        for si, lift in enumerate(f.bold):
            n[lift.curve][lift.lift - 1] = p.n[si]
            t[lift.curve] += p.t[si]
    for c, (a, b) in n.items():
        if a != b:
            raise UnmatchedFamily(f"curve {c}: {a} endpoints on c' but {b} on c''")
    return GlobalCoord(tuple(n[c][0] for c in D.curves), tuple(t[c] for c in D.curves))


Family = tuple[FaceDiagram, ...]


def family_coord(D: DTDatum, family: Sequence[FaceDiagram]) -> GlobalCoord:
    """nu of the patched diagram."""
    return patch_coordinates(D, [face_coord(d) for d in family])


def family_from_coord(D: DTDatum, c: GlobalCoord) -> Family:
    return tuple(decompose_face_coord(f.type, p) for f, p in zip(D.faces, split_coordinates(D, c)))


def _replace(d: FaceDiagram, side: int, loops_delta: int = 0, twist_delta: int = 0) -> FaceDiagram:
    cm = d.count_map
    key = f"l{side}"
    cm[key] = cm.get(key, 0) + loops_delta
    tw = list(d.twists)
    tw[side - 1] += twist_delta
    return FaceDiagram.build(d.face_type, {k: v for k, v in cm.items() if v}, tw)


def t_move(D: DTDatum, family: Sequence[FaceDiagram], curve: str, power: int = 1) -> Family:
    """Twist the c' side by -power and the c'' side by +power."""
    fam = list(family)
    f1, s1 = D.where(curve, C_PRIME)
    f2, s2 = D.where(curve, C_DOUBLE)
    if fam[f1].n[s1 - 1] == 0:
        raise MalformedData(f"{curve} carries no endpoints; use a loop move")
    fam[f1] = _replace(fam[f1], s1, twist_delta=-power)
    fam[f2] = _replace(fam[f2], s2, twist_delta=power)
    return tuple(fam)


def loop_move(D: DTDatum, family: Sequence[FaceDiagram], curve: str, to_prime: bool = True) -> Family:
    """Move one loop parallel to ``curve`` between its two lifts."""
    fam = list(family)
    src = D.where(curve, C_DOUBLE if to_prime else C_PRIME)
    dst = D.where(curve, C_PRIME if to_prime else C_DOUBLE)
    if fam[src[0]].loops(src[1]) == 0:
        raise MalformedData(f"no loop to move along {curve}")
    fam[src[0]] = _replace(fam[src[0]], src[1], loops_delta=-1)
    fam[dst[0]] = _replace(fam[dst[0]], dst[1], loops_delta=1)
    return tuple(fam)


def check_matched(D: DTDatum, family: Sequence[FaceDiagram]) -> None:
    if len(family) != len(D.faces):
        raise MalformedData("one diagram per face required")
    for f, d in zip(D.faces, family):
        if d.face_type != f.type:
            raise MalformedData("face type mismatch")
    for curve in D.curves:
        f1, s1 = D.where(curve, C_PRIME)
        f2, s2 = D.where(curve, C_DOUBLE)
        a, b = family[f1].n[s1 - 1], family[f2].n[s2 - 1]
        if a != b:
            raise UnmatchedFamily(f"curve {curve}: {a} endpoints on c' but {b} on c''")


def normalize_matched(D: DTDatum, family: Sequence[FaceDiagram]) -> Family:
    """Loops carried on c'; for curves with endpoints, the c'-side twist is 0."""
    check_matched(D, family)
    fam = tuple(family)
    for curve in D.curves:
        f1, s1 = D.where(curve, C_PRIME)
        f2, s2 = D.where(curve, C_DOUBLE)
        if fam[f1].n[s1 - 1]:
            tw = fam[f1].twists[s1 - 1]
            if tw:
                fam = t_move(D, fam, curve, tw)
        else:
            k = fam[f2].loops(s2)
            if k:
                fam = list(fam)
                fam[f2] = _replace(fam[f2], s2, loops_delta=-k)
                fam[f1] = _replace(fam[f1], s1, loops_delta=k)
                fam = tuple(fam)
    return fam


# -- builders ----------------------------------------------------------------------


def build_datum(g: int, m: int) -> DTDatum:
    """A standard admissible datum for each non-excluded (g, m)."""
    if is_excluded(g, m):
        DTDatum(g, m, (), ())  # raises ExcludedSurface
    B = [f"B{i}" for i in range(1, m + 1)]
    P, PP = C_PRIME, C_DOUBLE
    faces: list[PantsFace] = []
    if g == 0:
        r = m - 3
        cs = [f"c{i}" for i in range(1, r + 1)]
        faces.append(PantsFace(1, (Lift(cs[0], PP),), (B[0], B[1])))
        for k in range(1, m - 3):
            last = k == m - 4
            b2 = Lift(cs[k], P) if last else Lift(cs[k], PP)
            faces.append(PantsFace(2, (Lift(cs[k - 1], P), b2), (B[k + 1],)))
        faces.append(PantsFace(1, (Lift(cs[r - 1], PP),), (B[m - 2], B[m - 1])))
        return DTDatum(g, m, tuple(cs), tuple(faces), tuple(B))
    if g == 1:
        cs = [f"c{i}" for i in range(1, m + 1)]
        if m == 1:
            faces.append(PantsFace(2, (Lift("c1", P), Lift("c1", PP)), (B[0],)))
        else:
            for k in range(1, m):
                faces.append(PantsFace(2, (Lift(cs[k - 1], P), Lift(cs[k], PP)), (B[k - 1],)))
            faces.append(PantsFace(2, (Lift("c1", PP), Lift(cs[m - 1], P)), (B[m - 1],)))
        return DTDatum(g, m, tuple(cs), tuple(faces), tuple(B))
    counter = iter(range(1, 10_000))
    chain = [f"c{next(counter)}" for _ in range(max(m + 1, 1))]
    for k in range(1, m + 1):
        faces.append(PantsFace(2, (Lift(chain[k - 1], P), Lift(chain[k], PP)), (B[k - 1],)))
    left = Lift(chain[0], PP)
    right_curve = chain[m] if m else chain[0]
    curves = list(chain)
    for unit in range(g - 1):
        h1, h2 = f"c{next(counter)}", f"c{next(counter)}"
        curves += [h1, h2]
        if unit == g - 2:
            right = Lift(right_curve, P)
            nxt = None
        else:
            nxt = f"c{next(counter)}"
            curves.append(nxt)
            right = Lift(nxt, P)
        faces.append(PantsFace(3, (left, Lift(h1, P), Lift(h2, P)), ()))
        faces.append(PantsFace(3, (Lift(h1, PP), Lift(h2, PP), right), ()))
        if nxt is not None:
            left = Lift(nxt, PP)
    return DTDatum(g, m, tuple(curves), tuple(faces), tuple(B))


def datum_to_json(D: DTDatum) -> dict:
    return {
        "g": D.g, "m": D.m, "curves": list(D.curves), "boundaries": list(D.boundaries),
        "faces": [{"type": f.type,
                   "bold": [{"curve": l.curve, "lift": l.lift} for l in f.bold],
                   "dashed": list(f.dashed)} for f in D.faces],
    }


def datum_from_json(obj: Mapping) -> DTDatum:
    try:
        faces = tuple(
            PantsFace(int(f["type"]), tuple(Lift(str(l["curve"]), int(l["lift"])) for l in f["bold"]),
                      tuple(str(x) for x in f.get("dashed", ())))
            for f in obj["faces"])
        return DTDatum(int(obj["g"]), int(obj["m"]), tuple(str(c) for c in obj["curves"]), faces,
                       tuple(str(b) for b in obj.get("boundaries", ())))
    except (KeyError, TypeError) as exc:
        raise MalformedData(f"bad datum JSON: {exc}") from None
