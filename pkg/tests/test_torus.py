from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skein_torus.errors import CompatibilityError
from skein_torus.ground import GroundScalar, q_half, q_pow
from skein_torus.torus import (
    AntisymForm,
    DegreeFunctional,
    TorusElement,
    check_hom,
    is_reflection_invariant,
    lead_term,
    mono_hom,
    monoid_member,
    naturals,
    reflection,
    reflection_normalize,
    symplectic_double,
    weyl_normalize,
)

from strategies import elements, forms

Q12 = AntisymForm.from_entries(["x1", "x2"], {("x1", "x2"): 1})


def x(form, k, coeff=1):
    return TorusElement.monomial(form, k, coeff)


# Oracle: ordered monomials x_1^{a_1} ... x_r^{a_r}, multiplied by commuting
# letters past each other one swap at a time, with q-exponents kept doubled.

def ordered_product(Q, a, b):
    """x^a_ord * x^b_ord = q^{sum_{j>i} Q_ji a_j b_i} x^{a+b}_ord (doubled exponent returned)."""
    r = len(a)
    twice = 0
    for i in range(r):
        for j in range(i + 1, r):
            twice += 2 * Q[j][i] * a[j] * b[i]
    return twice, tuple(p + s for p, s in zip(a, b))


def weyl_to_ordered_shift(Q, k):
    """x^k (Weyl) = q^{-1/2 sum_{i<j} Q_ij k_i k_j} x^k_ord; returns the doubled exponent."""
    r = len(k)
    return -sum(Q[i][j] * k[i] * k[j] for i in range(r) for j in range(i + 1, r))


def oracle_weyl_product(Q, k, l):
    """Doubled q-exponent c with x^k x^l = q^{c/2} x^{k+l} in the Weyl basis."""
    s1, s2 = weyl_to_ordered_shift(Q, k), weyl_to_ordered_shift(Q, l)
    twice, total = ordered_product(Q, k, l)
    return s1 + s2 + twice - weyl_to_ordered_shift(Q, total), total


def test_weyl_normalize_two_letters():
    assert weyl_normalize(Q12, [("x1", 1), ("x2", 1)]) == x(Q12, (1, 1))


def test_weyl_normalize_single_letter():
    assert weyl_normalize(Q12, [("x1", 5)]) == x(Q12, (5, 0))


def test_weyl_normalize_order_free():
    assert weyl_normalize(Q12, [("x2", 1), ("x1", 1)]) == weyl_normalize(Q12, [("x1", 1), ("x2", 1)])


def test_monomial_product_rule():
    assert x(Q12, (1, 0)) * x(Q12, (0, 1)) == x(Q12, (1, 1), q_half(1))


def test_commutation_relation():
    a, b = TorusElement.gen(Q12, "x1"), TorusElement.gen(Q12, "x2")
    assert a * b == (b * a).scale(q_pow(1))


def test_distributive_expansion():
    a = x(Q12, (1, 0)) + x(Q12, (0, 1))
    b = x(Q12, (1, 0)) - x(Q12, (0, 1))
    expected = (x(Q12, (2, 0)) - x(Q12, (0, 2))
                + x(Q12, (1, 1), q_half(-1) - q_half(1)))
    assert a * b == expected


@given(st.data())
def test_product_matches_ordered_oracle(data):
    f = data.draw(forms())
    k = data.draw(st.tuples(*[st.integers(-3, 3) for _ in f.gens]))
    l = data.draw(st.tuples(*[st.integers(-3, 3) for _ in f.gens]))
    c2, total = oracle_weyl_product(f.mat, k, l)
    assert c2 % 1 == 0
    assert x(f, k) * x(f, l) == x(f, total, GroundScalar.q_half(c2))


@settings(max_examples=60)
@given(st.data())
def test_associative(data):
    f = data.draw(forms())
    a, b, c = (data.draw(elements(f)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@given(st.data())
def test_identity(data):
    f = data.draw(forms())
    a = data.draw(elements(f))
    assert TorusElement.one(f) * a == a == a * TorusElement.one(f)


@given(st.data())
def test_weyl_permutation_invariance(data):
    f = data.draw(forms())
    word = data.draw(st.lists(st.tuples(st.sampled_from(f.gens), st.integers(-2, 2)), min_size=1, max_size=6))
    perm = data.draw(st.permutations(word))
    assert weyl_normalize(f, word) == weyl_normalize(f, perm)


def test_reflection_fixes_monomials_and_bars_coefficients():
    assert reflection(x(Q12, (2, -1))) == x(Q12, (2, -1))
    assert reflection(x(Q12, (1, 1), q_half(1))) == x(Q12, (1, 1), q_half(-1))


@given(st.data())
def test_reflection_is_anti_involution(data):
    f = data.draw(forms())
    a, b = data.draw(elements(f)), data.draw(elements(f))
    assert reflection(reflection(a)) == a
    assert reflection(a * b) == reflection(b) * reflection(a)


def test_reflection_normalize():
    assert reflection_normalize(x(Q12, (1, 2))) == x(Q12, (1, 2))
    assert reflection_normalize(x(Q12, (1, 2), q_pow(1))) == x(Q12, (1, 2))
    prod = x(Q12, (1, 0)) * x(Q12, (0, 1))
    assert reflection_normalize(prod) == x(Q12, (1, 1))
    assert is_reflection_invariant(reflection_normalize(prod))


def test_mono_hom_identity():
    a = x(Q12, (1, 2), q_half(3)) + x(Q12, (-1, 0))
    assert mono_hom([[1, 0], [0, 1]], Q12, Q12, a) == a


def test_mono_hom_rejects_incompatible():
    with pytest.raises(CompatibilityError):
        check_hom([[1, 0], [0, 1]], Q12, AntisymForm.zero(["x1", "x2"]))


def test_mono_hom_multiplicative():
    target = AntisymForm.from_entries(["y1", "y2", "y3"], {("y1", "y2"): 1, ("y1", "y3"): 1})
    H = [[1, 0, 0], [0, 1, 1]]
    with pytest.raises(CompatibilityError):
        check_hom(H, Q12, target)
    target = AntisymForm.from_entries(["y1", "y2", "y3"], {("y1", "y2"): 1})
    H = [[1, 0, 0], [0, 1, 1]]
    a, b = x(Q12, (1, 1)), x(Q12, (2, -1))
    assert mono_hom(H, Q12, target, a * b) == mono_hom(H, Q12, target, a) * mono_hom(H, Q12, target, b)


def test_symplectic_double_of_zero():
    assert symplectic_double(AntisymForm.zero(["c"])).mat == ((0, -1), (1, 0))


def test_lead_term_examples():
    u = AntisymForm.zero(["u"])
    d = DegreeFunctional.from_rows([[1]])
    lead = lead_term(x(u, (2,)) + x(u, (-2,)), d)
    assert lead.terms == (((2,), GroundScalar.const(1)),)
    single = x(Q12, (3, -1), q_half(1))
    assert lead_term(single, DegreeFunctional.from_rows([[1, 0], [0, 1]])).terms == (((3, -1), q_half(1)),)


def test_monoid_membership():
    assert monoid_member(naturals(3), (1, 0, 0))
    assert not monoid_member(naturals(3), (1, -1, 0))
    assert naturals(4).group_rank() == 4


def test_pairing_half_is_exponent_of_product():
    from skein_torus.torus import pairing_half
    assert pairing_half(Q12, (1, 0), (0, 1)) == Fraction(1, 2)
