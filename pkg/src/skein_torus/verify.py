"""Named property sweeps, one per acceptance area.

Each suite takes a seeded ``random.Random`` and returns a SuiteResult with
pass/total counts.  Suites are independent and deterministic for a seed.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .dt import (
    TAGS,
    FaceCoord,
    FaceDiagram,
    GlobalCoord,
    bold_endpoints,
    build_datum,
    decompose_face_coord,
    face_coord,
    family_coord,
    family_from_coord,
    global_member,
    lambda_member,
    normalize_matched,
    patch_coordinates,
    split_coordinates,
)
from .errors import SkeinError
from .ground import GroundScalar, VarSet, delta
from .pants import (
    highest_term_check,
    trace_component,
    trace_multicurve,
    trace_recursion_check,
    twist_property_check,
)
from .presented import (
    SIGMA03_CONVENTION,
    Sigma02Element,
    Sigma03Element,
    lry_alpha,
    monogon_basis_element,
    monogon_filtration_rank,
    monogon_reduced_trace,
    monogon_word,
    normal_monomials,
    rewrite_word,
    sigma02_relation_value,
    sigma03_convention_holds,
    sigma03_embed,
    sigma03_image_classes,
)
from .surface import gk_dimension, gre_product, phi_lead_check, phi_of_coord, surface_model
from .torus import AntisymForm, TorusElement, is_reflection_invariant, lead_term, mono_hom, weyl_normalize
from .triangulation import (
    cut_edge,
    face_matrix,
    ideal_triangle,
    lambda_delta_member,
    lambda_delta_probes,
    lambda_delta_rank,
    monogon,
    printed_rank_formula,
    punctured_torus,
    random_member,
    random_triangulation,
    square,
    thrice_punctured_sphere,
)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def record(self, good: bool, note: str | None = None) -> None:
        self.total += 1
        if good:
            self.passed += 1
        elif note and len(self.notes) < 10:
            self.notes.append(note)

    def line(self) -> str:
        return f"{self.name}: {'PASS' if self.ok else 'FAIL'} ({self.passed}/{self.total})"


# -- random generators ------------------------------------------------------------

def random_form(rng: random.Random, max_rank: int = 5, bound: int = 3) -> AntisymForm:
    r = rng.randint(1, max_rank)
    gens = [f"x{i}" for i in range(1, r + 1)]
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            v = rng.randint(-bound, bound)
            m[i][j], m[j][i] = v, -v
    return AntisymForm.from_rows(gens, m)


def random_scalar(rng: random.Random) -> GroundScalar:
    return GroundScalar([((rng.randint(-3, 3), ()), rng.randint(-2, 2)) for _ in range(rng.randint(1, 2))])


def random_element(rng: random.Random, form: AntisymForm, terms: int = 3) -> TorusElement:
    return TorusElement(form, {tuple(rng.randint(-2, 2) for _ in form.gens): random_scalar(rng)
                               for _ in range(rng.randint(1, terms))})


# -- suites ---------------------------------------------------------------------------

def suite_torus(rng: random.Random, cases: int = 1000) -> SuiteResult:
    res = SuiteResult("torus")
    for _ in range(cases):
        f = random_form(rng)
        a, b, c = (random_element(rng, f) for _ in range(3))
        res.record((a * b) * c == a * (b * c), "associativity")
        word = [(rng.choice(f.gens), rng.randint(-2, 2)) for _ in range(rng.randint(1, 6))]
        perm = word[:]
        rng.shuffle(perm)
        w1, w2 = weyl_normalize(f, word), weyl_normalize(f, perm)
        k = [0] * f.rank
        for g, p in word:
            k[f.index(g)] += p
        res.record(w1 == w2 == TorusElement.monomial(f, k), f"weyl order {word}")
    return res


def suite_monogon(rng: random.Random) -> SuiteResult:
    res = SuiteResult("monogon")
    for n in range(7):
        for w in itertools.product((1, -1), repeat=n):
            left, right = rewrite_word(w, "leftmost"), rewrite_word(w, "rightmost")
            res.record(left == right == monogon_word(w), f"confluence {w}")
    for k in range(11):
        strict = sum(1 for a, b in normal_monomials(k) if a + b < k)
        res.record(monogon_filtration_rank(k) == k * (k + 1) // 2 == strict, f"rank k={k}")
    res.record(monogon_reduced_trace(monogon_basis_element(2, 1)).is_zero(), "bad arc")
    return res


def _test_triangulations(rng: random.Random, count: int = 20):
    fixed = [ideal_triangle(), monogon(), square(), punctured_torus(), thrice_punctured_sphere()]
    rand = [random_triangulation(rng, rng.randint(1, 3), rng.randint(0, 2)) for _ in range(count)]
    return fixed + rand


def suite_lambda_delta(rng: random.Random, pairs: int = 500) -> SuiteResult:
    res = SuiteResult("lambda-delta")
    tris = _test_triangulations(rng)
    per = -(-pairs // len(tris))
    for T in tris:
        for _ in range(per):
            a, b = random_member(T, rng), random_member(T, rng)
            res.record(lambda_delta_member(T, {k: a[k] + b[k] for k in a}), "closure")
        res.record(all(lambda_delta_member(T, p) for p in lambda_delta_probes(T)), "probes")
        res.record(lambda_delta_rank(T) == len(T.tilde), "rank")
        printed = printed_rank_formula(T.surface)
        res.record(printed == len(T.tilde),
                   f"rank formula 2|P|+2|M|-3chi gives {printed}, |edges+hats| = {len(T.tilde)} "
                   f"for {T.surface}")
    return res


def suite_cutting(rng: random.Random) -> SuiteResult:
    res = SuiteResult("cutting")
    for T in _test_triangulations(rng):
        base = face_matrix(T)
        for e in T.interior:
            try:
                cut = cut_edge(T, e)
                res.record(True)
            except SkeinError as exc:
                res.record(False, f"cut {e}: {exc}")
                continue
            target = face_matrix(cut.triangulation)
            for _ in range(5):
                img = mono_hom(cut.H, base, target, random_element(rng, base))
                res.record(all(cut.in_image(k) for k in img.terms), f"image of cut {e}")
    return res


def suite_recursion(rng: random.Random) -> SuiteResult:
    res = SuiteResult("recursion")
    for j, tags in TAGS.items():
        for tag in tags:
            for i in sorted(set(bold_endpoints(j, tag))):
                k = bold_endpoints(j, tag).count(i)
                for m in range(-5, 6):
                    res.record(trace_recursion_check(j, tag, i, m, k), f"P{j} {tag} i={i} m={m}")
    return res


def face_diagrams(face_type: int, max_components: int, max_twist: int):
    """Every strongly simple diagram with bounded size and twists."""
    tags = TAGS[face_type]
    for size in range(max_components + 1):
        for combo in itertools.combinations_with_replacement(tags, size):
            try:
                base = FaceDiagram.build(face_type, Counter(combo))
            except SkeinError:
                continue
            ranges = [range(-max_twist, max_twist + 1) if x else (0,) for x in base.n]
            for tw in itertools.product(*ranges):
                yield FaceDiagram(face_type, base.counts, tuple(tw))


def suite_pants(rng: random.Random, max_components: int = 3, max_twist: int = 5) -> SuiteResult:
    res = SuiteResult("pants")
    for j, tags in TAGS.items():
        for tag in tags:
            for m in range(-max_twist, max_twist + 1):
                res.record(is_reflection_invariant(trace_component(j, tag, m)), f"P{j} {tag} m={m}")
        for d in face_diagrams(j, max_components, max_twist):
            if not d.counts:
                continue
            res.record(is_reflection_invariant(trace_multicurve(j, d)), f"reflection {d}")
            res.record(highest_term_check(j, d), f"highest term {d}")
            for i in range(1, j + 1):
                if d.n[i - 1]:
                    res.record(twist_property_check(j, i, d), f"twist {i} on {d}")
    return res


def global_members(D, bound: int):
    r = D.r
    for n in itertools.product(range(bound + 1), repeat=r):
        for t in itertools.product(range(-bound, bound + 1), repeat=r):
            c = GlobalCoord(n, t)
            if global_member(D, c):
                yield c


def suite_dt(rng: random.Random, face_bound: int = 6, global_bound: int = 3) -> SuiteResult:
    res = SuiteResult("dt-bijection")
    for j in (1, 2, 3):
        for n in itertools.product(range(face_bound + 1), repeat=j):
            for t in itertools.product(range(-face_bound, face_bound + 1), repeat=j):
                c = FaceCoord(j, n, t)
                if lambda_member(j, c):
                    res.record(face_coord(decompose_face_coord(j, c)) == c, f"face {c}")
    for gm in ((2, 0), (1, 2)):
        D = build_datum(*gm)
        for c in global_members(D, global_bound):
            pieces = split_coordinates(D, c)
            ok = patch_coordinates(D, pieces) == c and family_coord(D, family_from_coord(D, c)) == c
            res.record(ok, f"{gm} {c}")
    return res


def canonical_families(D, max_components: int = 2, max_twist: int = 2):
    per_face = [list(face_diagrams(f.type, max_components, max_twist)) for f in D.faces]
    for fam in itertools.product(*per_face):
        try:
            canon = normalize_matched(D, fam)
        except SkeinError:
            continue
        if canon == fam and any(d.counts for d in fam):
            yield fam


def suite_lead(rng: random.Random) -> SuiteResult:
    res = SuiteResult("lead")
    D = build_datum(2, 0)
    for fam in canonical_families(D):
        res.record(phi_lead_check(D, fam), f"lead {fam}")
    return res


def _random_global_member(D, rng: random.Random, bound: int = 3) -> GlobalCoord:
    while True:
        c = GlobalCoord(tuple(rng.randint(0, bound) for _ in D.curves),
                        tuple(rng.randint(-bound, bound) for _ in D.curves))
        if global_member(D, c):
            return c


def suite_product(rng: random.Random, pairs: int = 200) -> SuiteResult:
    res = SuiteResult("product")
    D = build_datum(2, 0)
    degree = surface_model(D).degree
    for _ in range(pairs):
        k, l = _random_global_member(D, rng), _random_global_member(D, rng)
        half, s = gre_product(D, k, l)
        prod = phi_of_coord(D, k) * phi_of_coord(D, l)
        lead = lead_term(prod, degree)
        target = lead_term(phi_of_coord(D, s), degree)
        ok = False
        if len(lead.terms) == 1 and len(target.terms) == 1 and half.denominator in (1, 2):
            (e1, c1), (e2, c2) = lead.terms[0], target.terms[0]
            ok = e1 == e2 == s.vector and c1 == c2.shift_q2(int(2 * half))
        res.record(ok, f"product {k} {l}")
    return res


GK_SURFACES = ((2, 0), (2, 1), (0, 5), (1, 2))


def suite_gkdim(rng: random.Random) -> SuiteResult:
    res = SuiteResult("gkdim")
    for g, m in GK_SURFACES:
        got = gk_dimension(build_datum(g, m))
        res.record(got == 2 * (3 * g - 3 + m), f"({g},{m}) rank {got}")
    return res


def suite_exceptional(rng: random.Random) -> SuiteResult:
    res = SuiteResult("exceptional")
    a = Sigma02Element.of(0, 1)
    res.record(sigma02_relation_value(a * a).is_zero(), "sigma02 relation")
    res.record(sigma03_convention_holds(SIGMA03_CONVENTION), "adopted sigma03 convention")
    res.record(not sigma03_convention_holds("i+1" if SIGMA03_CONVENTION == "i+2" else "i+2"),
               "other convention rejected")
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            ai, aj = Sigma03Element.alpha(i), Sigma03Element.alpha(j)
            res.record(sigma03_embed(ai * aj) == sigma03_embed(ai) * sigma03_embed(aj),
                       f"embed multiplicative {i},{j}")
    classes = sigma03_image_classes()
    res.record(len(set(classes)) == 4, "images independent")
    L = lry_alpha(1)
    d = Sigma03Element.of(delta(VarSet(("v1", "v2", "v3"))))
    res.record(((L - d) * (L + d)).is_zero() and not (L - d).is_zero() and not (L + d).is_zero(),
               "zero divisor")
    return res


SUITES: dict[str, Callable[[random.Random], SuiteResult]] = {
    "torus": suite_torus,
    "monogon": suite_monogon,
    "lambda-delta": suite_lambda_delta,
    "cutting": suite_cutting,
    "recursion": suite_recursion,
    "pants": suite_pants,
    "dt-bijection": suite_dt,
    "lead": suite_lead,
    "product": suite_product,
    "gkdim": suite_gkdim,
    "exceptional": suite_exceptional,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](random.Random(seed))
