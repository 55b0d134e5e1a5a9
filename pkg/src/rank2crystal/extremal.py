"""Closed-form extremal vectors and their verification.

In a highest regime with defining length J the highest weight vector of the
unit component is supported on slots -1, ..., -J with entries

    h_{-m} = a'_{m-1}*l1 + a'_m*l2   (m odd),
    h_{-m} = a_{m-1}*l1 + a_m*l2     (m even),

and dually the lowest weight vector lives on slots 1, ..., J with entries
l_m (a and a' swapped).  These vectors are constructed directly from the
coefficient formulas; crystal-operator search is used only as an independent
check, never as the definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import (
    CartanRank2,
    LadderMatch,
    Regime,
    Weight,
    WeightClassification,
    a_prime_seq,
    a_seq,
    classify_weight,
)
from .crystal import (
    LambdaVector,
    e_tilde,
    f_tilde,
    iota,
    raise_to_extremal,
    sigma,
    wt,
)
from .errors import StepLimitExceeded, UnsupportedCartan


def h_coeff(cartan: CartanRank2, weight: Weight, j: int) -> int:
    """Entry h_{-j} of the highest weight vector family."""
    if j < 1:
        raise ValueError(f"coefficient index must be >= 1, got {j}")
    seq = a_prime_seq if j % 2 == 1 else a_seq
    return seq(cartan, j - 1) * weight.l1 + seq(cartan, j) * weight.l2


def l_coeff(cartan: CartanRank2, weight: Weight, j: int) -> int:
    """Entry l_j of the lowest weight vector family."""
    if j < 1:
        raise ValueError(f"coefficient index must be >= 1, got {j}")
    seq = a_seq if j % 2 == 1 else a_prime_seq
    return seq(cartan, j) * weight.l1 + seq(cartan, j - 1) * weight.l2


def highest_vector_at(cartan: CartanRank2, weight: Weight, length: int) -> LambdaVector:
    """H_{-length}: entries h_{-m} on slots -1..-length."""
    return LambdaVector.make(
        cartan, weight, {-m: h_coeff(cartan, weight, m) for m in range(1, length + 1)})


def lowest_vector_at(cartan: CartanRank2, weight: Weight, length: int) -> LambdaVector:
    """L_length: entries l_m on slots 1..length."""
    return LambdaVector.make(
        cartan, weight, {m: l_coeff(cartan, weight, m) for m in range(1, length + 1)})


def highest_vector(cartan: CartanRank2, weight: Weight) -> LambdaVector | None:
    """The highest weight vector of the unit component, or None if it has none.

    Dominant weights give the zero vector; highest regimes give the closed
    form at the classified defining length; lowest-only, level-zero affine
    and gap hyperbolic weights give None.
    """
    classification = classify_weight(cartan, weight)
    if classification.regime is Regime.TRIVIAL_DOMINANT:
        return LambdaVector.make(cartan, weight)
    if classification.highest is not None:
        return highest_vector_at(cartan, weight, classification.highest.vector_index)
    return None


def lowest_vector(cartan: CartanRank2, weight: Weight) -> LambdaVector | None:
    """The lowest weight vector of the unit component, or None if it has none."""
    classification = classify_weight(cartan, weight)
    if classification.regime is Regime.TRIVIAL_ANTIDOMINANT:
        return LambdaVector.make(cartan, weight)
    if classification.lowest is not None:
        return lowest_vector_at(cartan, weight, classification.lowest.vector_index)
    return None


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ExtremalReport:
    """Outcome of the independent checks on the closed-form extremal vectors.

    Failures are recorded as data rather than raised, so callers can emit
    counterexample reports.
    """

    classification: WeightClassification
    vector: LambdaVector | None
    checks: tuple[CheckResult, ...]
    steps: int | None = None

    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "regime": self.classification.regime.value,
            "k": self.classification.k,
            "vector": None if self.vector is None else
                {str(k): v for k, v in self.vector.entries},
            "steps": self.steps,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.checks],
        }


def _check_highest(cartan: CartanRank2, weight: Weight, match: LadderMatch,
                   budget: int) -> tuple[LambdaVector, list[CheckResult], int | None]:
    length = match.vector_index
    vec = highest_vector_at(cartan, weight, length)
    checks = []

    killed = e_tilde(vec, 1) is None and e_tilde(vec, 2) is None
    checks.append(CheckResult("highest: e_1 and e_2 vanish", killed))

    flat = all(sigma(vec, -m) == 0 for m in range(1, length + 1))
    nxt = sigma(vec, -(length + 1)) == -h_coeff(cartan, weight, length + 1)
    checks.append(CheckResult("highest: sigma profile", flat and nxt))

    expected_steps = sum(abs(h_coeff(cartan, weight, m)) for m in range(1, length + 1))
    steps = None
    try:
        reached, steps = raise_to_extremal(
            LambdaVector.make(cartan, weight), "raise", budget)
        generated = reached == vec and steps == expected_steps
        detail = "" if generated else f"reached {reached.entries} in {steps} steps"
    except StepLimitExceeded as exc:
        generated, detail = False, str(exc)
    checks.append(CheckResult(
        f"highest: generated from zero vector in {expected_steps} steps",
        generated, detail))
    return vec, checks, steps


def _check_lowest(cartan: CartanRank2, weight: Weight, match: LadderMatch,
                  budget: int) -> tuple[LambdaVector, list[CheckResult], int | None]:
    length = match.vector_index
    vec = lowest_vector_at(cartan, weight, length)
    checks = []

    killed = f_tilde(vec, 1) is None and f_tilde(vec, 2) is None
    checks.append(CheckResult("lowest: f_1 and f_2 vanish", killed))

    # Mirror of the sigma profile: relative to the lower tail constant
    # -<h_i, wt>, the scores at slots 1..length sit exactly at zero and the
    # next slot sits at l_{length+1} (<= 0 in regime).
    w = wt(vec)
    flat = all(sigma(vec, m) + w[iota(m) - 1] == 0 for m in range(1, length + 1))
    nxt = sigma(vec, length + 1) + w[iota(length + 1) - 1] == l_coeff(
        cartan, weight, length + 1)
    checks.append(CheckResult("lowest: sigma profile", flat and nxt))

    expected_steps = sum(abs(l_coeff(cartan, weight, m)) for m in range(1, length + 1))
    steps = None
    try:
        reached, steps = raise_to_extremal(
            LambdaVector.make(cartan, weight), "lower", budget)
        generated = reached == vec and steps == expected_steps
        detail = "" if generated else f"reached {reached.entries} in {steps} steps"
    except StepLimitExceeded as exc:
        generated, detail = False, str(exc)
    checks.append(CheckResult(
        f"lowest: generated from zero vector in {expected_steps} steps",
        generated, detail))
    return vec, checks, steps


def verify_extremal(cartan: CartanRank2, weight: Weight,
                    budget: int = 10_000) -> ExtremalReport:
    """Cross-check the closed-form extremal vectors against the crystal operators.

    For each side the regime admits: annihilation by the raising (resp.
    lowering) operators, the stated sigma profile, and regeneration from the
    zero vector in exactly the predicted number of steps.
    """
    classification = classify_weight(cartan, weight)
    checks: list[CheckResult] = []
    vector: LambdaVector | None = None
    steps: int | None = None

    if classification.regime in (Regime.TRIVIAL_DOMINANT, Regime.TRIVIAL_ANTIDOMINANT):
        zero = LambdaVector.make(cartan, weight)
        op = e_tilde if classification.regime is Regime.TRIVIAL_DOMINANT else f_tilde
        side = "highest" if classification.regime is Regime.TRIVIAL_DOMINANT else "lowest"
        killed = op(zero, 1) is None and op(zero, 2) is None
        checks.append(CheckResult(f"{side}: zero vector is extremal", killed))
        return ExtremalReport(classification, zero, tuple(checks), steps=0)

    if classification.highest is not None:
        vector, hchecks, steps = _check_highest(
            cartan, weight, classification.highest, budget)
        checks.extend(hchecks)
    if classification.lowest is not None:
        lvec, lchecks, lsteps = _check_lowest(
            cartan, weight, classification.lowest, budget)
        checks.extend(lchecks)
        if vector is None:
            vector, steps = lvec, lsteps

    return ExtremalReport(classification, vector, tuple(checks), steps=steps)


_FINITE_CARTANS = {(1, 1), (2, 1), (1, 2), (1, 3), (3, 1)}


def classical_table(cartan: CartanRank2, weight: Weight) -> tuple[int, int]:
    """Defining lengths (highest, lowest) of the extremal pair in finite type.

    The value (1, 3) means the pair (H_{-1}, L_3).  Both ladders terminate
    because the sequences reach zero; transposed Cartan orders run through
    the same scan.
    """
    if (cartan.c1, cartan.c2) not in _FINITE_CARTANS:
        raise UnsupportedCartan(f"({cartan.c1}, {cartan.c2}) is not finite rank-2 data")
    if not (weight.l1 > 0 > weight.l2):
        raise UnsupportedCartan(
            f"finite tables cover l1 > 0 > l2 only, got ({weight.l1}, {weight.l2})")
    classification = classify_weight(cartan, weight)
    assert classification.highest is not None and classification.lowest is not None
    return (classification.highest.vector_index, classification.lowest.vector_index)
