"""Sequences, exact threshold comparisons, and weight classification."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank2crystal import (
    AlgebraKind,
    AlphaBetaPosition,
    CartanRank2,
    Regime,
    Weight,
    a_prime_seq,
    a_seq,
    affine_level,
    chebyshev,
    classify_weight,
    compare_with_alpha_beta,
    discriminant,
)
from rank2crystal.errors import PreconditionViolation

GRID = [(2, 2), (1, 4), (4, 1), (2, 3), (3, 2), (3, 3), (1, 5)]

cartans = st.sampled_from([CartanRank2(*c) for c in GRID])


class QuadraticInt:
    """Elements (a + b*sqrt(d))/2 with a, b rational; oracle field for Chebyshev."""

    def __init__(self, a, b, d):
        self.a, self.b, self.d = Fraction(a), Fraction(b), d

    def __mul__(self, other):
        return QuadraticInt(self.a * other.a + self.d * self.b * other.b,
                            self.a * other.b + self.b * other.a, self.d)

    def __sub__(self, other):
        return QuadraticInt(self.a - other.a, self.b - other.b, self.d)

    def inverse(self):
        norm = self.a * self.a - self.d * self.b * self.b
        return QuadraticInt(self.a / norm, -self.b / norm, self.d)


def cheb_via_surds(k: int, x: int, d: int) -> Fraction:
    # t + 1/t = x with t = (x + sqrt(d))/2 requires d = x^2 - 4
    t = QuadraticInt(Fraction(x, 2), Fraction(1, 2), d)
    tinv = t.inverse()
    tk = QuadraticInt(1, 0, d)
    tik = QuadraticInt(1, 0, d)
    for _ in range(k + 1):
        tk = tk * t
        tik = tik * tinv
    num = tk - tik
    den = t - tinv
    assert num.a == 0 and den.a == 0
    return num.b / den.b


@pytest.mark.parametrize("x", [3, 4, 5, -3])
def test_chebyshev_matches_surd_definition(x):
    d = x * x - 4
    for k in range(25):
        assert chebyshev(k, x) == cheb_via_surds(k, x, d)


def test_chebyshev_base_cases():
    for x in range(-5, 6):
        assert chebyshev(-1, x) == 0
        assert chebyshev(0, x) == 1
        assert chebyshev(1, x) == x
    assert chebyshev(2, 2) == 3
    # X = 2 collapses to P_k = k + 1, X = 1 is 6-periodic
    assert [chebyshev(k, 2) for k in range(6)] == [1, 2, 3, 4, 5, 6]
    assert [chebyshev(k, 1) for k in range(6)] == [1, 1, 0, -1, -1, 0]


def seq_oracle(c1: int, c2: int, lmax: int) -> tuple[list[int], list[int]]:
    """Rebuild both sequences from the coupled recursions alone."""
    a, ap = [0, 1], [0, 1]
    for l in range(2, lmax + 1):
        if l % 2 == 0:
            a.append(c1 * a[l - 1] - a[l - 2])
            ap.append(c2 * a[l - 1] - ap[l - 2])
        else:
            a.append(c2 * a[l - 1] - a[l - 2])
            ap.append(a[-1])
    return a, ap


@pytest.mark.parametrize("c1,c2", GRID + [(1, 1), (2, 1), (1, 3)])
def test_sequences_match_recursion_oracle(c1, c2):
    cartan = CartanRank2(c1, c2)
    a, ap = seq_oracle(c1, c2, 40)
    assert [a_seq(cartan, l) for l in range(41)] == a
    assert [a_prime_seq(cartan, l) for l in range(41)] == ap


def test_sequence_known_values():
    for c1, c2 in GRID:
        cartan = CartanRank2(c1, c2)
        assert a_seq(cartan, 3) == c1 * c2 - 1
        assert a_prime_seq(cartan, 3) == c1 * c2 - 1
    assert a_seq(CartanRank2(2, 2), 5) == 5
    assert a_seq(CartanRank2(1, 4), 6) == 3


def test_a7_closed_form_needs_unit_correction():
    # The product formula for a_7 overshoots the definition by exactly one.
    for c1, c2 in GRID:
        cartan = CartanRank2(c1, c2)
        product = c1 * c2 * (c1 * c2 - 2) * (c1 * c2 - 3)
        assert a_seq(cartan, 7) == product - 1
        assert a_seq(cartan, 7) != product


def test_determinant_identities():
    for c1, c2 in GRID:
        cartan = CartanRank2(c1, c2)
        a = [a_seq(cartan, l) for l in range(55)]
        ap = [a_prime_seq(cartan, l) for l in range(55)]
        for k in range(1, 25):
            assert a[2 * k + 2] * ap[2 * k + 2] - a[2 * k + 3] * ap[2 * k + 1] == 1
            assert a[2 * k + 2] * ap[2 * k + 2] - ap[2 * k + 3] * a[2 * k + 1] == 1
            assert a[2 * k + 1] * ap[2 * k + 1] - a[2 * k + 2] * ap[2 * k] == 1
            assert a[2 * k + 1] * ap[2 * k + 1] - ap[2 * k + 2] * a[2 * k] == 1
        for l in range(1, 50):
            assert a[l + 1] * ap[l + 1] - a[l + 2] * ap[l] == 1


def test_kind_classification():
    assert CartanRank2(1, 1).kind() is AlgebraKind.FINITE
    assert CartanRank2(1, 3).kind() is AlgebraKind.FINITE
    assert CartanRank2(2, 2).kind() is AlgebraKind.AFFINE
    assert CartanRank2(4, 1).kind() is AlgebraKind.AFFINE
    assert CartanRank2(2, 3).kind() is AlgebraKind.HYPERBOLIC
    with pytest.raises(PreconditionViolation):
        CartanRank2(0, 2)


def test_pairing_matrix():
    cartan = CartanRank2(3, 2)
    assert cartan.pairing(1, 1) == cartan.pairing(2, 2) == 2
    assert cartan.pairing(1, 2) == -3
    assert cartan.pairing(2, 1) == -2


def test_compare_with_alpha_beta_examples():
    assert compare_with_alpha_beta(
        CartanRank2(2, 2), Weight(3, -2)) is AlphaBetaPosition.ABOVE_ALPHA
    assert compare_with_alpha_beta(
        CartanRank2(2, 2), Weight(1, -1)) is AlphaBetaPosition.EQUAL_ALPHA_BETA
    assert compare_with_alpha_beta(
        CartanRank2(2, 3), Weight(1, -1)) is AlphaBetaPosition.BETWEEN
    with pytest.raises(PreconditionViolation):
        compare_with_alpha_beta(CartanRank2(1, 2), Weight(3, -2))
    with pytest.raises(PreconditionViolation):
        compare_with_alpha_beta(CartanRank2(2, 2), Weight(-3, 2))


def test_compare_agrees_with_floating_bracket():
    for c1, c2 in [(2, 3), (3, 2), (3, 3), (1, 5), (5, 5)]:
        disc = (c1 * c2) ** 2 - 4 * c1 * c2
        alpha = (c1 * c2 + disc ** 0.5) / (2 * c2)
        beta = (c1 * c2 - disc ** 0.5) / (2 * c2)
        for l1 in range(1, 12):
            for l2 in range(-12, 0):
                got = compare_with_alpha_beta(CartanRank2(c1, c2), Weight(l1, l2))
                r = l1 / -l2
                # The irrational thresholds are never hit, so the float
                # bracket is unambiguous at this scale.
                if r > alpha:
                    assert got is AlphaBetaPosition.ABOVE_ALPHA
                elif r < beta:
                    assert got is AlphaBetaPosition.BELOW_BETA
                else:
                    assert got is AlphaBetaPosition.BETWEEN


def test_classify_examples():
    cls = classify_weight(CartanRank2(2, 2), Weight(3, -2))
    assert cls.regime is Regime.HIGHEST_EVEN and cls.k == 1
    assert cls.highest.lower == Fraction(3, 2) and cls.highest.upper == Fraction(2)

    cls = classify_weight(CartanRank2(2, 2), Weight(1, -2))
    assert cls.regime is Regime.LOWEST_ODD and cls.k == 1
    assert cls.lowest.lower == Fraction(0) and cls.lowest.upper == Fraction(1, 2)

    assert classify_weight(CartanRank2(2, 2), Weight(1, -1)).regime is \
        Regime.AFFINE_LEVEL_ZERO
    assert classify_weight(CartanRank2(2, 3), Weight(1, -1)).regime is \
        Regime.HYPERBOLIC_GAP
    assert classify_weight(CartanRank2(2, 2), Weight(2, 0)).regime is \
        Regime.TRIVIAL_DOMINANT
    assert classify_weight(CartanRank2(2, 2), Weight(0, 0)).regime is \
        Regime.TRIVIAL_DOMINANT
    assert classify_weight(CartanRank2(2, 2), Weight(-1, 0)).regime is \
        Regime.TRIVIAL_ANTIDOMINANT


def test_classify_rejects_mirrored_signs():
    with pytest.raises(PreconditionViolation):
        classify_weight(CartanRank2(2, 2), Weight(-1, 2))


def test_ladder_monotonicity():
    for c1, c2 in GRID:
        cartan = CartanRank2(c1, c2)
        high = []
        low = []
        for m in range(1, 41):
            seq_h = a_seq if m % 2 == 1 else a_prime_seq
            seq_l = a_prime_seq if m % 2 == 1 else a_seq
            high.append(Fraction(seq_h(cartan, m + 1), seq_h(cartan, m)))
            low.append(Fraction(seq_l(cartan, m), seq_l(cartan, m + 1)))
        assert all(x > y for x, y in zip(high, high[1:]))
        assert all(x < y for x, y in zip(low, low[1:]))


def test_literal_lowest_bracket_is_empty():
    # The first lowest-regime branch is implemented as
    # a_{2k-2}/a_{2k-1} < r <= a'_{2k-1}/a'_{2k}; the same bracket with
    # a_{2k}/a_{2k-1} on the left is empty, since that ratio already
    # exceeds the upper end for every k.
    for c1, c2 in GRID:
        cartan = CartanRank2(c1, c2)
        for k in range(1, 8):
            left = Fraction(a_seq(cartan, 2 * k), a_seq(cartan, 2 * k - 1))
            right = Fraction(a_prime_seq(cartan, 2 * k - 1), a_prime_seq(cartan, 2 * k))
            assert left > right


@given(cartans, st.integers(1, 30), st.integers(-30, -1), st.integers(1, 6))
@settings(max_examples=150, deadline=None)
def test_classify_is_scale_invariant(cartan, l1, l2, scale):
    base = classify_weight(cartan, Weight(l1, l2))
    scaled = classify_weight(cartan, Weight(scale * l1, scale * l2))
    assert scaled.regime is base.regime
    assert scaled.k == base.k


@given(cartans, st.integers(-20, 20), st.integers(-20, 20))
@settings(max_examples=200, deadline=None)
def test_classify_total_and_consistent(cartan, l1, l2):
    if l1 < 0 < l2:
        with pytest.raises(PreconditionViolation):
            classify_weight(cartan, Weight(l1, l2))
        return
    cls = classify_weight(cartan, Weight(l1, l2))
    if cls.regime.is_highest():
        assert cls.highest is not None and cls.lowest is None
        assert cls.highest.regime is cls.regime
    if cls.regime.is_lowest():
        assert cls.lowest is not None and cls.highest is None
    if cls.regime in (Regime.AFFINE_LEVEL_ZERO, Regime.HYPERBOLIC_GAP):
        assert cls.highest is None and cls.lowest is None
        assert discriminant(cartan, Weight(l1, l2)) <= 0


def test_classification_scales_to_large_affine_weights():
    # Near the affine threshold the bracketing index grows linearly with the
    # weight; the scan must stay exact (here a_l = l, so the interval
    # [(2k+1)/2k, 2k/(2k-1)) pins k = 500000).
    cls = classify_weight(CartanRank2(2, 2), Weight(1000001, -1000000))
    assert cls.regime is Regime.HIGHEST_EVEN and cls.k == 500000
    r = Fraction(1000001, 1000000)
    assert Fraction(2 * cls.k, 2 * cls.k - 1) > r >= Fraction(2 * cls.k + 1, 2 * cls.k)


def test_affine_level_zero_is_exact_level():
    for c1, c2 in [(2, 2), (1, 4), (4, 1)]:
        cartan = CartanRank2(c1, c2)
        for l1 in range(1, 10):
            for l2 in range(-10, 0):
                pos = compare_with_alpha_beta(cartan, Weight(l1, l2))
                level = affine_level(cartan, Weight(l1, l2))
                assert (pos is AlphaBetaPosition.EQUAL_ALPHA_BETA) == (level == 0)
        if (c1, c2) == (2, 2):
            assert affine_level(cartan, Weight(3, -3)) == 0
