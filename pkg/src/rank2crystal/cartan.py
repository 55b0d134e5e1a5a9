"""Rank-2 Cartan data, Chebyshev-type integer sequences, and weight classification.

A rank-2 generalized Cartan matrix

    [[ 2, -c1],
     [-c2,  2]]        (c1, c2 >= 1)

is finite type for c1*c2 <= 3, affine for c1*c2 = 4 and hyperbolic beyond.
Two integer sequences a_l, a'_l built from Chebyshev polynomials in
X = c1*c2 - 2 control the combinatorics of the associated crystals: their
ratio ladders

    a_2/a_1 > a'_3/a'_2 > a_4/a_3 > ...  -> alpha
    a'_1/a'_2 < a_2/a_3 < a'_3/a'_4 < ...  -> beta

converge to the roots alpha >= beta of c2*t^2 - c1*c2*t + c1.  An integral
weight lambda = l1*Lambda_1 + l2*Lambda_2 with l1 > 0 > l2 admits a highest
weight vector in the connected component of the unit element exactly when
r = l1/(-l2) > alpha, and a lowest one exactly when r < beta; the bracketing
interval of r inside the relevant ladder pins down which extremal vector
occurs.  All comparisons here are exact: positions relative to the quadratic
irrationals alpha, beta are decided by the sign of the integer discriminant
D = c2*l1^2 + c1*c2*l1*l2 + c1*l2^2, never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from math import gcd

from .errors import PreconditionViolation, ScanOverflowError


@unique
class AlgebraKind(Enum):
    FINITE = "finite"
    AFFINE = "affine"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class CartanRank2:
    """The off-diagonal entries c1 = -<h1, alpha_2> and c2 = -<h2, alpha_1>."""

    c1: int
    c2: int

    def __post_init__(self) -> None:
        if self.c1 < 1 or self.c2 < 1:
            raise PreconditionViolation(f"need c1, c2 >= 1, got ({self.c1}, {self.c2})")

    def pairing(self, i: int, j: int) -> int:
        """<h_i, alpha_j> for i, j in {1, 2}."""
        if i not in (1, 2) or j not in (1, 2):
            raise PreconditionViolation(f"indices must be 1 or 2, got ({i}, {j})")
        if i == j:
            return 2
        return -self.c1 if i == 1 else -self.c2

    def kind(self) -> AlgebraKind:
        p = self.c1 * self.c2
        if p <= 3:
            return AlgebraKind.FINITE
        if p == 4:
            return AlgebraKind.AFFINE
        return AlgebraKind.HYPERBOLIC

    def transpose(self) -> "CartanRank2":
        return CartanRank2(self.c2, self.c1)


@dataclass(frozen=True)
class Weight:
    """Integral weight l1*Lambda_1 + l2*Lambda_2 in fundamental-weight coordinates."""

    l1: int
    l2: int

    def pairing(self, i: int) -> int:
        """<h_i, lambda>."""
        if i == 1:
            return self.l1
        if i == 2:
            return self.l2
        raise PreconditionViolation(f"index must be 1 or 2, got {i}")

    def is_dominant(self) -> bool:
        return self.l1 >= 0 and self.l2 >= 0

    def is_antidominant(self) -> bool:
        return self.l1 <= 0 and self.l2 <= 0

    def ratio(self) -> Fraction:
        """r = l1/(-l2); only defined on the mixed-sign cone l1 > 0 > l2."""
        if not (self.l1 > 0 > self.l2):
            raise PreconditionViolation(f"ratio needs l1 > 0 > l2, got ({self.l1}, {self.l2})")
        return Fraction(self.l1, -self.l2)


def chebyshev(k: int, x: int) -> int:
    """P_k(x) with P_{-1} = 0, P_0 = 1 and P_k = x*P_{k-1} - P_{k-2}.

    Evaluating at x = t + 1/t gives P_k = (t^{k+1} - t^{-k-1})/(t - 1/t).
    """
    if k < -1:
        raise PreconditionViolation(f"chebyshev needs k >= -1, got {k}")
    if k == -1:
        return 0
    prev, cur = 0, 1
    for _ in range(k):
        prev, cur = cur, x * cur - prev
    return cur


def a_seq(cartan: CartanRank2, l: int) -> int:
    """a_0 = 0, a_1 = 1, a_{2k} = c1*P_{k-1}(X), a_{2k+1} = P_k(X) + P_{k-1}(X)."""
    if l < 0:
        raise PreconditionViolation(f"sequence index must be >= 0, got {l}")
    x = cartan.c1 * cartan.c2 - 2
    if l % 2 == 0:
        return cartan.c1 * chebyshev(l // 2 - 1, x)
    return chebyshev(l // 2, x) + chebyshev(l // 2 - 1, x)


def a_prime_seq(cartan: CartanRank2, l: int) -> int:
    """Same as a_seq with c2 in place of c1 on the even terms; odd terms agree."""
    if l < 0:
        raise PreconditionViolation(f"sequence index must be >= 0, got {l}")
    x = cartan.c1 * cartan.c2 - 2
    if l % 2 == 0:
        return cartan.c2 * chebyshev(l // 2 - 1, x)
    return chebyshev(l // 2, x) + chebyshev(l // 2 - 1, x)


@unique
class AlphaBetaPosition(Enum):
    ABOVE_ALPHA = "AboveAlpha"
    EQUAL_ALPHA_BETA = "EqualAlphaBeta"
    BETWEEN = "Between"
    BELOW_BETA = "BelowBeta"
    EQUAL_BOUNDARY = "EqualBoundary"


def discriminant(cartan: CartanRank2, weight: Weight) -> int:
    """D = c2*l1^2 + c1*c2*l1*l2 + c1*l2^2 = l2^2 * q(r) for q(t) = c2 t^2 - c1 c2 t + c1."""
    c1, c2 = cartan.c1, cartan.c2
    l1, l2 = weight.l1, weight.l2
    return c2 * l1 * l1 + c1 * c2 * l1 * l2 + c1 * l2 * l2


def compare_with_alpha_beta(cartan: CartanRank2, weight: Weight) -> AlphaBetaPosition:
    """Exact position of r = l1/(-l2) relative to alpha and beta.

    q(t) = c2*t^2 - c1*c2*t + c1 has roots beta <= alpha with midpoint c1/2,
    and D = l2^2*q(r).  Hence D > 0 puts r outside [beta, alpha] (the side is
    decided by comparing r with c1/2), D < 0 puts it strictly between, and
    D = 0 means r hits a root, which for integer weights can only happen in
    the affine case where alpha = beta = c1/2.
    """
    if cartan.c1 * cartan.c2 < 4:
        raise PreconditionViolation("alpha/beta comparison needs c1*c2 >= 4")
    if not (weight.l1 > 0 > weight.l2):
        raise PreconditionViolation(f"need l1 > 0 > l2, got ({weight.l1}, {weight.l2})")
    d = discriminant(cartan, weight)
    if d > 0:
        # r > c1/2  <=>  2*l1 > c1*(-l2)
        if 2 * weight.l1 + cartan.c1 * weight.l2 > 0:
            return AlphaBetaPosition.ABOVE_ALPHA
        return AlphaBetaPosition.BELOW_BETA
    if d == 0:
        if cartan.kind() is AlgebraKind.AFFINE:
            return AlphaBetaPosition.EQUAL_ALPHA_BETA
        # Unreachable for integral weights: c1*c2*(c1*c2 - 4) is never a
        # perfect square once c1*c2 >= 5, so the hyperbolic roots are
        # irrational.  Kept for totality.
        return AlphaBetaPosition.EQUAL_BOUNDARY
    return AlphaBetaPosition.BETWEEN


def affine_level(cartan: CartanRank2, weight: Weight) -> int:
    """<c, lambda> for the canonical central element of affine rank-2 data."""
    if cartan.kind() is not AlgebraKind.AFFINE:
        raise PreconditionViolation("level is defined for affine Cartan data only")
    # The kernel of the transposed Cartan matrix is spanned by (c2, 2)/g.
    g = gcd(cartan.c2, 2)
    return (cartan.c2 // g) * weight.l1 + (2 // g) * weight.l2


@unique
class Regime(Enum):
    TRIVIAL_DOMINANT = "TrivialDominant"
    TRIVIAL_ANTIDOMINANT = "TrivialAntidominant"
    HIGHEST_ODD = "HighestOdd"
    HIGHEST_EVEN = "HighestEven"
    LOWEST_ODD = "LowestOdd"
    LOWEST_EVEN = "LowestEven"
    AFFINE_LEVEL_ZERO = "AffineLevelZero"
    HYPERBOLIC_GAP = "HyperbolicGapNeither"

    def is_highest(self) -> bool:
        return self in (Regime.HIGHEST_ODD, Regime.HIGHEST_EVEN)

    def is_lowest(self) -> bool:
        return self in (Regime.LOWEST_ODD, Regime.LOWEST_EVEN)


@dataclass(frozen=True)
class LadderMatch:
    """The bracketing interval of r inside a ratio ladder.

    Highest-side intervals are [lower, upper) with upper = None meaning
    unbounded; lowest-side intervals are (lower, upper] with upper = None
    meaning the ladder term had a zero denominator (finite type only).
    """

    regime: Regime
    k: int
    lower: Fraction
    upper: Fraction | None

    @property
    def vector_index(self) -> int:
        """Defining length of the extremal vector: 2k-1 for odd, 2k for even."""
        if self.regime in (Regime.HIGHEST_ODD, Regime.LOWEST_ODD):
            return 2 * self.k - 1
        return 2 * self.k


@dataclass(frozen=True)
class WeightClassification:
    regime: Regime
    highest: LadderMatch | None = None
    lowest: LadderMatch | None = None

    @property
    def k(self) -> int | None:
        if self.regime.is_highest() and self.highest is not None:
            return self.highest.k
        if self.regime.is_lowest() and self.lowest is not None:
            return self.lowest.k
        return None


def _sequence_pairs(cartan: CartanRank2):
    """Yield (l, a_l, a'_l) for l = 1, 2, ... with O(1) work per step."""
    c1, c2 = cartan.c1, cartan.c2
    a_prev, ap_prev = 0, 0
    a_cur, ap_cur = 1, 1
    l = 1
    yield l, a_cur, ap_cur
    while True:
        l += 1
        if l % 2 == 0:
            a_nxt = c1 * a_cur - a_prev
            ap_nxt = c2 * a_cur - ap_prev
        else:
            a_nxt = c2 * a_cur - a_prev
            ap_nxt = a_nxt
        a_prev, ap_prev, a_cur, ap_cur = a_cur, ap_cur, a_nxt, ap_nxt
        yield l, a_cur, ap_cur


def _scan_limit(ratio: Fraction, limit: int | None) -> int:
    if limit is not None:
        return limit
    # The ladders close in on their limits at worst like 1/m (affine type),
    # so the bracketing index is linear in the ratio's numerator/denominator.
    return 2 * (ratio.numerator + ratio.denominator) + 64


def scan_highest_ladder(cartan: CartanRank2, ratio: Fraction,
                        limit: int | None = None) -> LadderMatch:
    """Bracket ratio inside the decreasing ladder; caller guarantees a match exists.

    The m-th term is a_{m+1}/a_m (m odd) or a'_{m+1}/a'_m (m even), the m-th
    interval [term(m), term(m-1)) with term(0) treated as +infinity; m odd
    yields HighestOdd((m+1)//2), m even HighestEven(m//2).  For finite type
    the terms reach 0, so every positive ratio matches.
    """
    stream = _sequence_pairs(cartan)
    _, a_cur, ap_cur = next(stream)
    upper: Fraction | None = None
    for m in range(1, _scan_limit(ratio, limit) + 1):
        _, a_nxt, ap_nxt = next(stream)
        lower = Fraction(a_nxt, a_cur) if m % 2 == 1 else Fraction(ap_nxt, ap_cur)
        if ratio >= lower:
            regime = Regime.HIGHEST_ODD if m % 2 == 1 else Regime.HIGHEST_EVEN
            return LadderMatch(regime, (m + 1) // 2, lower, upper)
        upper = lower
        a_cur, ap_cur = a_nxt, ap_nxt
    raise ScanOverflowError(f"highest ladder scan did not bracket {ratio}")


def scan_lowest_ladder(cartan: CartanRank2, ratio: Fraction,
                       limit: int | None = None) -> LadderMatch:
    """Bracket ratio inside the increasing ladder; intervals are (term(m-1), term(m)].

    The m-th term is a'_m/a'_{m+1} (m odd) or a_m/a_{m+1} (m even); a zero
    denominator (finite type) counts as +infinity and always matches.
    """
    stream = _sequence_pairs(cartan)
    _, a_cur, ap_cur = next(stream)
    lower = Fraction(0)
    for m in range(1, _scan_limit(ratio, limit) + 1):
        _, a_nxt, ap_nxt = next(stream)
        num, den = (ap_cur, ap_nxt) if m % 2 == 1 else (a_cur, a_nxt)
        upper = None if den == 0 else Fraction(num, den)
        if upper is None or ratio <= upper:
            regime = Regime.LOWEST_ODD if m % 2 == 1 else Regime.LOWEST_EVEN
            return LadderMatch(regime, (m + 1) // 2, lower, upper)
        lower = upper
        a_cur, ap_cur = a_nxt, ap_nxt
    raise ScanOverflowError(f"lowest ladder scan did not bracket {ratio}")


def classify_weight(cartan: CartanRank2, weight: Weight) -> WeightClassification:
    """Decide which extremal-vector regime the weight falls into.

    Dominant and antidominant weights are trivial (the zero vector is the
    extremal vector).  The mirrored mixed ordering l1 < 0 < l2 is rejected:
    the fixed coordinate word treats the two sides asymmetrically and no
    statement is made for it.  For finite type both ladders terminate and
    both a highest and a lowest match are reported; for affine/hyperbolic
    type exactly one regime applies.
    """
    if weight.is_dominant():
        return WeightClassification(Regime.TRIVIAL_DOMINANT)
    if weight.is_antidominant():
        return WeightClassification(Regime.TRIVIAL_ANTIDOMINANT)
    if weight.l1 < 0 < weight.l2:
        raise PreconditionViolation(
            f"mixed ordering l1 < 0 < l2 is not supported, got ({weight.l1}, {weight.l2})")
    ratio = weight.ratio()
    if cartan.kind() is AlgebraKind.FINITE:
        high = scan_highest_ladder(cartan, ratio)
        low = scan_lowest_ladder(cartan, ratio)
        return WeightClassification(high.regime, highest=high, lowest=low)
    position = compare_with_alpha_beta(cartan, weight)
    if position is AlphaBetaPosition.ABOVE_ALPHA:
        high = scan_highest_ladder(cartan, ratio)
        return WeightClassification(high.regime, highest=high)
    if position is AlphaBetaPosition.BELOW_BETA:
        low = scan_lowest_ladder(cartan, ratio)
        return WeightClassification(low.regime, lowest=low)
    if position is AlphaBetaPosition.EQUAL_ALPHA_BETA:
        return WeightClassification(Regime.AFFINE_LEVEL_ZERO)
    return WeightClassification(Regime.HYPERBOLIC_GAP)
