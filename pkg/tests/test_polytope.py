"""Segment-polytope membership, r-invariants, and face cocharacters.

The ray/support formula and the exact simplex LP are independent routes to
the same numbers; they are cross-checked here on grids and random weights.
"""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallwin import Weight, builtin_quiver, tau
from hallwin.polytope import WPolytope

Q3 = builtin_quiver("tripled-jordan")
P2 = WPolytope(Q3, (2,))
P3 = WPolytope(Q3, (3,))


def W(*coords):
    return Weight.make([F(c) for c in coords], (len(coords),))


def test_r_invariant_frozen_values():
    assert P2.r_invariant(W(5, -5)) == F(5, 3)
    assert P2.r_invariant(W(F(11, 2), F(-11, 2))) == F(11, 6)
    assert P2.r_invariant(W(F(3, 2), F(-3, 2))) == F(1, 2)
    assert P2.r_invariant(W(0, 0)) == 0
    assert P2.r_invariant(W(7, 7)) == 0  # multiples of the axis are free


def test_contains_frozen_values():
    assert not P2.contains(W(3, -3), F(1, 2))
    assert P2.contains(W(3, -3), 1)
    assert P2.contains(W(F(3, 2), F(-3, 2)), F(1, 2))
    assert not P2.contains(W(2, -2), F(1, 2))
    assert P2.contains(W(1, -1), F(1, 2))


def test_half_polytope_d2_is_gap_three():
    half = F(1, 2)
    for a in range(-5, 6):
        for b in range(-5, 6):
            assert P2.contains(W(a, b), half) == (abs(a - b) <= 3)


def test_contains_monotone_in_r():
    chi = W(4, 1, -5)
    r = P3.r_invariant(chi)
    assert P3.contains(chi, r)
    assert not P3.contains(chi, r - F(1, 100))
    assert P3.contains(chi, r + F(1, 100))


def test_lp_and_ray_formula_agree_on_grid():
    for d, poly in ((2, P2), (3, P3)):
        pts = [(a, -a) for a in range(0, 7)] if d == 2 else \
              [(a, b, -a - b) for a in range(-3, 4) for b in range(-3, 4)]
        for coords in pts:
            chi = Weight.make([F(c) for c in coords], (d,))
            assert poly.r_invariant_lp(chi) == poly.support_radius(chi)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-6, max_value=6,
                             max_denominator=4), min_size=2, max_size=3))
def test_lp_and_ray_formula_agree_random(coords):
    d = len(coords)
    poly = P2 if d == 2 else P3
    chi = Weight.make(coords, (d,))
    assert poly.r_invariant_lp(chi) == poly.support_radius(chi)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=3),
       st.fractions(min_value=0, max_value=5, max_denominator=6))
def test_r_invariant_scales_linearly(coords, k):
    d = len(coords)
    poly = P2 if d == 2 else P3
    chi = Weight.make([F(c) for c in coords], (d,))
    assert poly.r_invariant(chi.scale(k)) == k * poly.r_invariant(chi)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3),
       st.permutations([0, 1, 2]))
def test_r_invariant_permutation_invariant(coords, perm):
    chi = W(*coords)
    permuted = W(*[coords[i] for i in perm])
    assert P3.r_invariant(chi) == P3.r_invariant(permuted)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=3),
       st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_axis_translation_invariant(coords, t):
    d = len(coords)
    poly = P2 if d == 2 else P3
    chi = Weight.make([F(c) for c in coords], (d,))
    shifted = chi + tau((d,)).scale(t)
    assert poly.r_invariant(chi) == poly.r_invariant(shifted)


def test_face_cocharacter_frozen():
    comp, lam = P2.face_cocharacter(W(5, -5), F(5, 3))
    assert comp == (1, 1)
    assert lam.coords == (F(-1), F(1))
    assert P2.face_cocharacter(W(0, 0), F(0)) is None


def test_face_cocharacter_satisfies_equality():
    from hallwin import N_positive, pair
    for coords in [(5, -5), (3, -3), (4, 1, -5), (2, 2, -4)]:
        d = len(coords)
        poly = P2 if d == 2 else P3
        chi = Weight.make([F(c) for c in coords], (d,))
        r = poly.r_invariant(chi)
        comp, lam = poly.face_cocharacter(chi, r)
        # the face equation: the pairing meets the scaled support exactly
        # (negatively: lam is antidominant, chi dominant), and the support
        # along lam is the pairing against N_pos(lam)
        assert pair(lam, chi) == -r * poly._support(lam)
        assert poly._support(lam) == pair(lam, N_positive(Q3, (d,), lam))


def test_interior_is_strict():
    assert P2.contains_interior(W(1, -1), F(1, 2))
    assert not P2.contains_interior(W(F(3, 2), F(-3, 2)), F(1, 2))
    assert not P2.contains_interior(W(2, -2), F(1, 2))


def test_adjoint_segments_polytope():
    pa = WPolytope(Q3, (2,), segment_source="adjoint")
    # adjoint segments carry multiplicity 1 where the three-loop rep
    # carries 3, so radii scale by exactly 3
    assert pa.r_invariant(W(1, -1)) == 3 * P2.r_invariant(W(1, -1))


def test_contains_rejects_negative_radius():
    with pytest.raises(ValueError):
        P2.contains(W(1, -1), -1)
