"""Affine-linear inequality families and the polyhedral realization machinery.

A ``LinearForm`` is a sparse integer combination of coordinate slots plus a
symbolic constant (p, q) standing for p*l1 + q*l2; the weight is substituted
only at evaluation time.  The operator S_k subtracts coefficient(k) times a
three-slot building block beta_k, sweeping a positive coefficient upward and
a negative one downward; it is idempotent by construction.  Closing the
coordinate generators { x_j, -x_{-j} } under all S_k yields the inequality
family whose nonnegativity locus realizes the full coordinate crystal, and
closing the regime generator sets (coordinates shifted by the extremal
coefficients) cuts out the connected component of the unit element.

Closures are truncated: generators and operator slots are restricted to a
window of slots, so computed families are finite supersets of the displayed
two-term chains.  Membership and box enumeration evaluate every form of the
given families exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique
from typing import Iterable, Mapping, Sequence

from .cartan import CartanRank2, Regime, Weight, a_prime_seq, a_seq, classify_weight
from .crystal import LambdaVector, iota, k_minus, k_plus
from .errors import (
    EnumerationBudgetExceeded,
    FormBudgetExceeded,
    IndexZeroError,
    PreconditionViolation,
    RegimeMismatch,
    WindowViolation,
)

DEFAULT_FORM_BUDGET = 200_000
DEFAULT_ENUM_BUDGET = 2_000_000


@dataclass(frozen=True)
class LinearForm:
    """Sparse affine-linear form: sum of coeff_k * x_k plus p*l1 + q*l2."""

    coeffs: tuple[tuple[int, int], ...] = ()
    const: tuple[int, int] = (0, 0)

    @staticmethod
    def make(coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = (),
             const: tuple[int, int] = (0, 0)) -> "LinearForm":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for k, v in items:
            if k == 0:
                raise IndexZeroError("slot 0 cannot carry a coefficient")
            acc[int(k)] = acc.get(int(k), 0) + int(v)
        canon = tuple(sorted((k, v) for k, v in acc.items() if v != 0))
        return LinearForm(canon, (int(const[0]), int(const[1])))

    def coefficient(self, k: int) -> int:
        for slot, value in self.coeffs:
            if slot == k:
                return value
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.coeffs)

    def constant_value(self, weight: Weight) -> int:
        return self.const[0] * weight.l1 + self.const[1] * weight.l2

    def evaluate(self, x: LambdaVector) -> int:
        acc = self.constant_value(x.weight)
        for slot, value in self.coeffs:
            acc += value * x.entry(slot)
        return acc

    def scaled_sub(self, c: int, other: "LinearForm") -> "LinearForm":
        """self - c * other, canonicalized."""
        acc = dict(self.coeffs)
        for slot, value in other.coeffs:
            acc[slot] = acc.get(slot, 0) - c * value
        const = (self.const[0] - c * other.const[0], self.const[1] - c * other.const[1])
        return LinearForm(tuple(sorted((k, v) for k, v in acc.items() if v != 0)), const)

    def is_zero(self) -> bool:
        return not self.coeffs and self.const == (0, 0)

    def to_json(self) -> dict:
        return {"coeffs": {str(k): v for k, v in self.coeffs},
                "const": [self.const[0], self.const[1]]}

    @staticmethod
    def from_json(data: Mapping) -> "LinearForm":
        coeffs = {int(k): int(v) for k, v in data.get("coeffs", {}).items()}
        p, q = data.get("const", [0, 0])
        return LinearForm.make(coeffs, (int(p), int(q)))


@unique
class FamilyName(Enum):
    XI_CLOSURE = "XiClosure"
    XI_DISPLAYED = "XiDisplayed"
    XI1 = "Xi1"
    XI2 = "Xi2"
    XI3 = "Xi3"
    XI4 = "Xi4"
    XI_HALF_POSITIVE = "XiHalfPositive"
    XI_HALF_NEGATIVE = "XiHalfNegative"


@dataclass(frozen=True)
class FormFamily:
    """A named, canonically ordered collection of forms with its truncation window."""

    name: FamilyName
    forms: tuple[LinearForm, ...]
    k: int | None = None
    window: int | None = None
    variant: str = ""

    @staticmethod
    def make(name: FamilyName, forms: Iterable[LinearForm], k: int | None = None,
             window: int | None = None, variant: str = "") -> "FormFamily":
        unique_forms = sorted(set(f for f in forms if not f.is_zero()),
                              key=lambda f: (f.coeffs, f.const))
        return FormFamily(name, tuple(unique_forms), k, window, variant)

    def as_set(self) -> frozenset[LinearForm]:
        return frozenset(self.forms)

    def to_json(self) -> dict:
        data = {"name": self.name.value, "k": self.k,
                "forms": [f.to_json() for f in self.forms]}
        if self.window is not None:
            data["window"] = self.window
        return data


def beta_bar(cartan: CartanRank2, k: int) -> LinearForm:
    """The three-slot block sigma_k - sigma_{k+}: x_k + <h, alpha> x_mid + x_{k+}.

    A constant -<h_{iota(k)}, lambda> appears exactly when the span crosses
    the weight marker, i.e. k in {-1, -2}.
    """
    if k == 0:
        raise IndexZeroError("beta is undefined at slot 0")
    kp = k_plus(k)
    i = iota(k)
    coeffs = {k: 1, kp: 1}
    for j in range(k + 1, kp):
        if j != 0:
            coeffs[j] = coeffs.get(j, 0) + cartan.pairing(i, iota(j))
    const = (0, 0)
    if k <= -1 and kp > 0:
        const = (-1, 0) if i == 1 else (0, -1)
    return LinearForm.make(coeffs, const)


def s_bar(cartan: CartanRank2, k: int, form: LinearForm) -> LinearForm:
    """S_k: subtract coefficient(k) times beta_k (if positive) or beta at the
    previous same-letter slot (if negative); identity when the coefficient is 0."""
    if k == 0:
        raise IndexZeroError("S is undefined at slot 0")
    c = form.coefficient(k)
    if c == 0:
        return form
    block = beta_bar(cartan, k) if c > 0 else beta_bar(cartan, k_minus(k))
    return form.scaled_sub(c, block)


def window_slots(window: int) -> tuple[int, ...]:
    """All nonzero slots t with |t| <= window, negatives first, shallow to deep."""
    return tuple(range(-1, -window - 1, -1)) + tuple(range(1, window + 1))


def xi_generators(cartan: CartanRank2, window: int) -> list[LinearForm]:
    """Coordinate generators x_j and -x_{-j} for 1 <= j <= window."""
    gens = []
    for j in range(1, window + 1):
        gens.append(LinearForm.make({j: 1}))
        gens.append(LinearForm.make({-j: -1}))
    return gens


def closure(cartan: CartanRank2, generators: Iterable[LinearForm], window: int,
            max_depth: int, budget: int = DEFAULT_FORM_BUDGET,
            name: FamilyName = FamilyName.XI_CLOSURE, k: int | None = None,
            variant: str = "closure") -> FormFamily:
    """Breadth-first closure of the generators under S_k for all in-window k.

    Stops at a fixed point or after max_depth rounds; the closures arising
    here are finite at any window, so the budget only guards against misuse.
    """
    seen = {g for g in generators if not g.is_zero()}
    frontier = list(seen)
    slots = window_slots(window)
    for _ in range(max_depth):
        fresh = []
        for f in frontier:
            for slot in slots:
                g = s_bar(cartan, slot, f)
                if not g.is_zero() and g not in seen:
                    if len(seen) >= budget:
                        raise FormBudgetExceeded(f"closure exceeded {budget} forms")
                    seen.add(g)
                    fresh.append(g)
        if not fresh:
            break
        frontier = fresh
    return FormFamily.make(name, seen, k=k, window=window, variant=variant)


def xi_closure(cartan: CartanRank2, window: int, max_depth: int,
               generators: Sequence[LinearForm] | None = None,
               budget: int = DEFAULT_FORM_BUDGET) -> FormFamily:
    """Closure of the coordinate generators (or an explicit generator list)."""
    gens = list(generators) if generators is not None else xi_generators(cartan, window)
    return closure(cartan, gens, window, max_depth, budget)


def xi_displayed(cartan: CartanRank2, m_max: int) -> FormFamily:
    """The two documented chain families a_m x_m - a_{m-1} x_{m+1} and
    -a'_m x_{-m} + a'_{m-1} x_{-m-1}; a sub-family of the full closure."""
    forms = []
    for m in range(1, m_max + 1):
        forms.append(LinearForm.make({m: a_seq(cartan, m), m + 1: -a_seq(cartan, m - 1)}))
        forms.append(LinearForm.make({-m: -a_prime_seq(cartan, m),
                                      -m - 1: a_prime_seq(cartan, m - 1)}))
    return FormFamily.make(FamilyName.XI_DISPLAYED, forms, window=m_max + 1,
                           variant="table")


_WHICH_TO_NAME = {1: FamilyName.XI1, 2: FamilyName.XI2, 3: FamilyName.XI3, 4: FamilyName.XI4}
_WHICH_TO_REGIME = {1: Regime.HIGHEST_ODD, 2: Regime.HIGHEST_EVEN,
                    3: Regime.LOWEST_ODD, 4: Regime.LOWEST_EVEN}


def _defining_length(which: int, k: int) -> int:
    return 2 * k - 1 if which in (1, 3) else 2 * k


def regime_generators(cartan: CartanRank2, which: int, k: int, window: int) -> FormFamily:
    """Generator inequalities cutting out the component of the extremal vector.

    Highest regimes (which 1, 2) constrain the negative side: x_{-m} - h_{-m}
    up to the defining length, then the plain coordinates x_{-m} to the
    window edge.  Lowest regimes (3, 4) mirror this on the positive side with
    -x_m + l_m.  The deeper plain coordinates are generators in their own
    right: their chains populate the documented tables and their sign
    constraints are forced anyway by the coordinate family chains.
    """
    if which not in (1, 2, 3, 4):
        raise PreconditionViolation(f"family selector must be 1..4, got {which}")
    if k < 1:
        raise PreconditionViolation(f"regime index must be >= 1, got {k}")
    length = _defining_length(which, k)
    if window < length + 1:
        raise WindowViolation(f"window {window} too small for defining length {length}")
    gens = []
    if which in (1, 2):
        for m in range(1, length + 1):
            seq = a_prime_seq if m % 2 == 1 else a_seq
            gens.append(LinearForm.make(
                {-m: 1}, (-seq(cartan, m - 1), -seq(cartan, m))))
        for m in range(length + 1, window + 1):
            gens.append(LinearForm.make({-m: 1}))
    else:
        for m in range(1, length + 1):
            seq = a_seq if m % 2 == 1 else a_prime_seq
            gens.append(LinearForm.make(
                {m: -1}, (seq(cartan, m), seq(cartan, m - 1))))
        for m in range(length + 1, window + 1):
            gens.append(LinearForm.make({m: -1}))
    return FormFamily.make(_WHICH_TO_NAME[which], gens, k=k, window=window,
                           variant="generators")


def regime_table(cartan: CartanRank2, which: int, k: int, j_max: int,
                 i_max: int) -> FormFamily:
    """The documented closed-form rows of the selected family, instantiated
    over 1 <= j <= j_max, 0 <= i <= i_max."""
    if which not in (1, 2, 3, 4):
        raise PreconditionViolation(f"family selector must be 1..4, got {which}")
    a = lambda n: a_seq(cartan, n)
    ap = lambda n: a_prime_seq(cartan, n)
    rows: list[LinearForm] = []

    def add(coeffs: dict[int, int], const: tuple[int, int]) -> None:
        form = LinearForm.make(coeffs, const)
        if not form.is_zero():
            rows.append(form)

    for j in range(1, j_max + 1):
        if which == 1:
            if j <= k:
                for i in range(0, min(2 * j - 3, i_max) + 1):
                    add({-2 * j + i + 1: ap(i + 1), -2 * j + i + 2: -ap(i)},
                        (-ap(2 * j - 2), -ap(2 * j - 1)))
                if 0 <= 2 * j - 2 <= i_max:
                    add({-1: ap(2 * j - 1), 1: -ap(2 * j - 2)}, (0, -ap(2 * j - 1)))
                for i in range(2 * j - 1, i_max + 1):
                    add({-2 * j + i + 2: ap(i + 1), -2 * j + i + 3: -ap(i)}, (0, 0))
                for i in range(0, min(2 * j - 4, i_max) + 1):
                    add({-2 * j + i + 2: a(i + 1), -2 * j + i + 3: -a(i)},
                        (-a(2 * j - 3), -a(2 * j - 2)))
            else:
                for i in range(2 * j - 1, i_max + 1):
                    add({-2 * j + i + 2: ap(i + 1), -2 * j + i + 3: -ap(i)},
                        (ap(2 * j - 2), ap(2 * j - 1)))
                for i in range(0, min(2 * j - 4, i_max) + 1):
                    add({-2 * j + i + 2: a(i + 1), -2 * j + i + 3: -a(i)}, (0, 0))
                if 0 <= 2 * j - 3 <= i_max:
                    add({-1: a(2 * j - 2), 1: -a(2 * j - 3)}, (a(2 * j - 3), 0))
                for i in range(2 * j - 2, i_max + 1):
                    add({-2 * j + i + 3: a(i + 1), -2 * j + i + 4: -a(i)},
                        (a(2 * j - 3), a(2 * j - 2)))
        elif which == 2:
            if j <= k:
                for i in range(0, min(2 * j - 2, i_max) + 1):
                    add({-2 * j + i: a(i + 1), -2 * j + i + 1: -a(i)},
                        (-a(2 * j - 1), -a(2 * j)))
                if 0 <= 2 * j - 1 <= i_max:
                    add({-1: a(2 * j), 1: -a(2 * j - 1)}, (0, -a(2 * j)))
                for i in range(2 * j, i_max + 1):
                    add({-2 * j + i + 1: a(i + 1), -2 * j + i + 2: -a(i)}, (0, 0))
                for i in range(0, min(2 * j - 3, i_max) + 1):
                    add({-2 * j + i + 1: ap(i + 1), -2 * j + i + 2: -ap(i)},
                        (-ap(2 * j - 2), -ap(2 * j - 1)))
            elif j >= k + 2:
                # The j = k+1 slice of these rows restates the chains of the
                # defining-length generator with the wrong constant (it is
                # negative on the extremal vector itself); the plain
                # coordinate chains start at j = k+2.
                for i in range(2 * j - 2, i_max + 1):
                    add({-2 * j + i + 3: a(i + 1), -2 * j + i + 4: -a(i)},
                        (a(2 * j - 3), a(2 * j - 2)))
                for i in range(0, min(2 * j - 5, i_max) + 1):
                    add({-2 * j + i + 3: ap(i + 1), -2 * j + i + 4: -ap(i)}, (0, 0))
                if 0 <= 2 * j - 4 <= i_max:
                    add({-1: ap(2 * j - 3), 1: -ap(2 * j - 4)}, (ap(2 * j - 4), 0))
                for i in range(2 * j - 3, i_max + 1):
                    add({-2 * j + i + 4: ap(i + 1), -2 * j + i + 5: -ap(i)},
                        (ap(2 * j - 4), ap(2 * j - 3)))
        elif which == 3:
            if j <= k:
                for i in range(0, min(2 * j - 3, i_max) + 1):
                    add({2 * j - i - 1: -a(i + 1), 2 * j - i - 2: a(i)},
                        (a(2 * j - 1), a(2 * j - 2)))
                if 0 <= 2 * j - 2 <= i_max:
                    add({1: -a(2 * j - 1), -1: a(2 * j - 2)}, (a(2 * j - 1), 0))
                for i in range(2 * j - 1, i_max + 1):
                    add({2 * j - i - 2: -a(i + 1), 2 * j - i - 3: a(i)}, (0, 0))
                for i in range(0, min(2 * j - 4, i_max) + 1):
                    add({2 * j - i - 2: -ap(i + 1), 2 * j - i - 3: ap(i)},
                        (ap(2 * j - 2), ap(2 * j - 3)))
            else:
                for i in range(2 * j - 1, i_max + 1):
                    add({2 * j - i - 2: -a(i + 1), 2 * j - i - 3: a(i)},
                        (-a(2 * j - 1), -a(2 * j - 2)))
                for i in range(0, min(2 * j - 4, i_max) + 1):
                    add({2 * j - i - 2: -ap(i + 1), 2 * j - i - 3: ap(i)}, (0, 0))
                if 0 <= 2 * j - 3 <= i_max:
                    add({1: -ap(2 * j - 2), -1: ap(2 * j - 3)}, (0, -ap(2 * j - 3)))
                for i in range(2 * j - 2, i_max + 1):
                    add({2 * j - i - 3: -ap(i + 1), 2 * j - i - 4: ap(i)},
                        (-ap(2 * j - 2), -ap(2 * j - 3)))
        else:
            if j <= k:
                for i in range(0, min(2 * j - 2, i_max) + 1):
                    add({2 * j - i: -ap(i + 1), 2 * j - i - 1: ap(i)},
                        (ap(2 * j), ap(2 * j - 1)))
                if 0 <= 2 * j - 1 <= i_max:
                    add({1: -ap(2 * j), -1: ap(2 * j - 1)}, (ap(2 * j), 0))
                for i in range(2 * j, i_max + 1):
                    add({2 * j - i - 1: -ap(i + 1), 2 * j - i - 2: ap(i)}, (0, 0))
                for i in range(0, min(2 * j - 3, i_max) + 1):
                    add({2 * j - i - 1: -a(i + 1), 2 * j - i - 2: a(i)},
                        (a(2 * j - 1), a(2 * j - 2)))
            else:
                for i in range(2 * j, i_max + 1):
                    add({2 * j - i - 1: -ap(i + 1), 2 * j - i - 2: ap(i)},
                        (-ap(2 * j), -ap(2 * j - 1)))
                for i in range(0, min(2 * j - 3, i_max) + 1):
                    add({2 * j - i - 1: -a(i + 1), 2 * j - i - 2: a(i)}, (0, 0))
                if 0 <= 2 * j - 2 <= i_max:
                    add({1: -a(2 * j - 1), -1: a(2 * j - 2)}, (0, -a(2 * j - 2)))
                for i in range(2 * j - 1, i_max + 1):
                    add({2 * j - i - 2: -a(i + 1), 2 * j - i - 3: a(i)},
                        (-a(2 * j - 1), -a(2 * j - 2)))

    max_slot = max((max(abs(s) for s in f.support()) for f in rows), default=0)
    return FormFamily.make(_WHICH_TO_NAME[which], rows, k=k, window=max_slot,
                           variant="table")


def xi_family(cartan: CartanRank2, weight: Weight, which: int, k: int | None = None,
              j_max: int = 4, i_max: int = 8,
              window: int = 12) -> tuple[FormFamily, FormFamily]:
    """Generator set and documented table rows for the regime family.

    The selector must match the weight's classification (1 HighestOdd,
    2 HighestEven, 3 LowestOdd, 4 LowestEven); k defaults to the classified
    index and is validated when given.
    """
    classification = classify_weight(cartan, weight)
    expected = _WHICH_TO_REGIME[which]
    match = classification.highest if which in (1, 2) else classification.lowest
    if match is None or match.regime is not expected:
        raise RegimeMismatch(
            f"family Xi{which} needs regime {expected.value}, "
            f"weight ({weight.l1}, {weight.l2}) classifies as {classification.regime.value}")
    if k is None:
        k = match.k
    elif k != match.k:
        raise RegimeMismatch(f"classified index k={match.k}, requested k={k}")
    return (regime_generators(cartan, which, k, window),
            regime_table(cartan, which, k, j_max, i_max))


def first_violation(x: LambdaVector, *families: FormFamily) -> LinearForm | None:
    """First form (in canonical order) evaluating negative at x, if any."""
    for family in families:
        if family.window is not None:
            for slot in x.support():
                if abs(slot) > family.window:
                    raise WindowViolation(
                        f"support slot {slot} outside family window {family.window}")
        for form in family.forms:
            if form.evaluate(x) < 0:
                return form
    return None


def is_member(x: LambdaVector, *families: FormFamily) -> bool:
    """True iff every form of every family is nonnegative at x."""
    return first_violation(x, *families) is None


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def enumerate_box(cartan: CartanRank2, weight: Weight, families: Sequence[FormFamily],
                  window: int, sum_bound: int, seed: LambdaVector, direction: int = +1,
                  budget: int = DEFAULT_ENUM_BUDGET) -> tuple[LambdaVector, ...]:
    """All sign-correct vectors in the window slice cut out by the families.

    Reported set: support inside [-window, window], nonnegative positive-side
    and nonpositive negative-side entries, every family form nonnegative, and
    total coordinate sum within sum_bound of the seed in the given direction
    (direction +1: seed total <= total <= seed total + sum_bound; -1 mirrors).
    Enumeration is a DFS with exact interval propagation from the forms, so
    it only visits a thin superset of the answer; candidates are checked
    against every form before being reported.
    """
    if window < 0 or sum_bound < 0:
        raise PreconditionViolation("window and sum_bound must be >= 0")
    if direction not in (+1, -1):
        raise PreconditionViolation("direction must be +1 or -1")
    t0 = seed.total()
    t_min, t_max = (t0, t0 + sum_bound) if direction == +1 else (t0 - sum_bound, t0)

    forms = sorted({f for fam in families for f in fam.forms},
                   key=lambda f: (f.coeffs, f.const))
    for f in forms:
        if not f.support() and f.constant_value(weight) < 0:
            return ()

    neg = list(range(-1, -window - 1, -1))
    pos = list(range(1, window + 1))
    order = neg + pos if direction == +1 else pos + neg
    pos_in_order = {slot: n for n, slot in enumerate(order)}

    lo: dict[int, int | None] = {t: (0 if t > 0 else None) for t in order}
    hi: dict[int, int | None] = {t: (0 if t < 0 else None) for t in order}
    for f in forms:
        supp = f.support()
        if len(supp) != 1 or supp[0] not in pos_in_order:
            continue
        slot = supp[0]
        c = f.coefficient(slot)
        cv = f.constant_value(weight)
        if c > 0:
            bound = _ceil_div(-cv, c)
            lo[slot] = bound if lo[slot] is None else max(lo[slot], bound)
        else:
            bound = cv // (-c)
            hi[slot] = bound if hi[slot] is None else min(hi[slot], bound)

    if direction == +1:
        missing = [t for t in order if lo[t] is None]
        if missing:
            raise EnumerationBudgetExceeded(
                f"box unbounded below at slots {missing}; add bounding forms")
        slack = t_max - sum(lo[t] for t in order)
        if slack < 0:
            return ()
        for t in order:
            cap = lo[t] + slack
            hi[t] = cap if hi[t] is None else min(hi[t], cap)
    else:
        missing = [t for t in order if hi[t] is None]
        if missing:
            raise EnumerationBudgetExceeded(
                f"box unbounded above at slots {missing}; add bounding forms")
        slack = sum(hi[t] for t in order) - t_min
        if slack < 0:
            return ()
        for t in order:
            floor_ = hi[t] - slack
            lo[t] = floor_ if lo[t] is None else max(lo[t], floor_)

    # Suffix extremes of the yet-unassigned slots, for the height pruning.
    n_slots = len(order)
    suffix_lo = [0] * (n_slots + 1)
    suffix_hi = [0] * (n_slots + 1)
    for n in range(n_slots - 1, -1, -1):
        suffix_lo[n] = suffix_lo[n + 1] + lo[order[n]]
        suffix_hi[n] = suffix_hi[n + 1] + hi[order[n]]

    # A form tightens the slot assigned last among its support.
    triggered: dict[int, list[LinearForm]] = {t: [] for t in order}
    residual_forms = []
    for f in forms:
        supp = f.support()
        if supp and all(s in pos_in_order for s in supp):
            last = max(supp, key=lambda s: pos_in_order[s])
            triggered[last].append(f)
        elif supp:
            residual_forms.append(f)

    assigned: dict[int, int] = {}
    results: list[LambdaVector] = []
    visited = 0

    def descend(n: int, partial: int) -> None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise EnumerationBudgetExceeded(f"enumeration exceeded budget {budget}")
        if n == n_slots:
            if t_min <= partial <= t_max:
                x = LambdaVector.make(cartan, weight, assigned)
                if all(f.evaluate(x) >= 0 for f in residual_forms):
                    results.append(x)
            return
        slot = order[n]
        low = max(lo[slot], t_min - partial - suffix_hi[n + 1])
        high = min(hi[slot], t_max - partial - suffix_lo[n + 1])
        for f in triggered[slot]:
            c = f.coefficient(slot)
            rest = f.constant_value(weight)
            for s, cs in f.coeffs:
                if s != slot:
                    rest += cs * assigned.get(s, 0)
            if c > 0:
                low = max(low, _ceil_div(-rest, c))
            else:
                high = min(high, rest // (-c))
        for value in range(low, high + 1):
            assigned[slot] = value
            descend(n + 1, partial + value)
        assigned.pop(slot, None)

    descend(0, 0)
    return tuple(sorted(results, key=lambda v: v.entries))


def undocumented_forms(family: FormFamily, documented: FormFamily) -> tuple[LinearForm, ...]:
    """Members of a closure that the documented chain tables do not list.

    The documented tables are proper sub-families: for instance the chain
    seeded by x_2 (coefficients from the primed sequence, shifted one slot)
    never appears in them.  Canonical-form comparison only; no implication
    check between inequalities is attempted.
    """
    have = documented.as_set()
    return tuple(f for f in family.forms if f not in have)


def phi_chain_closed(cartan: CartanRank2, l: int, k: int) -> LinearForm:
    """Closed form of the length-l operator chain applied to the coordinate x_{-k}.

    For odd k the coefficients come from the a' sequence, for even k from a;
    slots skip the weight marker via theta(t) = 1 for t >= 0 else 0:

        seq_{l+1} * x_{l-k+theta(l-k)} - seq_l * x_{l-k+1+theta(l-k+1)}

    with constant (seq_{k-1}, seq_k) once the chain has crossed the marker
    (l >= k), (seq_{k-1}, 0) at l = k-1, and zero before.
    """
    if k < 1:
        raise PreconditionViolation(f"chain needs k >= 1, got {k}")
    if l < 0:
        raise PreconditionViolation(f"chain needs l >= 0, got {l}")
    seq = a_prime_seq if k % 2 == 1 else a_seq
    t1 = l - k
    t2 = l - k + 1
    slot1 = t1 + (1 if t1 >= 0 else 0)
    slot2 = t2 + (1 if t2 >= 0 else 0)
    coeffs = {slot1: seq(cartan, l + 1), slot2: -seq(cartan, l)}
    if l >= k:
        const = (seq(cartan, k - 1), seq(cartan, k))
    elif l == k - 1:
        const = (seq(cartan, k - 1), 0)
    else:
        const = (0, 0)
    return LinearForm.make(coeffs, const)


def phi_chain_iterated(cartan: CartanRank2, l: int, k: int) -> LinearForm:
    """Reference chain: l applications of S at slots -k, -k+1, ..., skipping 0."""
    if k < 1 or l < 0:
        raise PreconditionViolation("chain needs k >= 1 and l >= 0")
    form = LinearForm.make({-k: 1})
    applied = 0
    slot = -k
    while applied < l:
        if slot != 0:
            form = s_bar(cartan, slot, form)
            applied += 1
        slot += 1
    return form


def _half_beta(cartan: CartanRank2, k: int) -> LinearForm:
    """Half-line block: spans {k, k+1, k+2} above the marker, {k, k-1, k-2} below."""
    if k == 0:
        raise IndexZeroError("half-line beta is undefined at slot 0")
    if k >= 1:
        mid, far = k + 1, k + 2
    else:
        mid, far = k - 1, k - 2
    return LinearForm.make({k: 1, mid: cartan.pairing(iota(k), iota(mid)), far: 1})


def _half_s(cartan: CartanRank2, k: int, form: LinearForm) -> LinearForm:
    """Half-line operator; the fallback block for a wrong-sign coefficient sits
    two slots toward the line's start and degenerates to the identity there."""
    c = form.coefficient(k)
    if c == 0:
        return form
    if k >= 1:
        if c > 0:
            return form.scaled_sub(c, _half_beta(cartan, k))
        if k - 2 >= 1:
            return form.scaled_sub(c, _half_beta(cartan, k - 2))
        return form
    if c < 0:
        return form.scaled_sub(c, _half_beta(cartan, k))
    if k + 2 <= -1:
        return form.scaled_sub(c, _half_beta(cartan, k + 2))
    return form


def half_closure(cartan: CartanRank2, positive: bool, window: int, max_depth: int,
                 budget: int = DEFAULT_FORM_BUDGET) -> FormFamily:
    """Closure of one half-line's coordinate generators under the half-line operator."""
    if positive:
        gens = [LinearForm.make({j: 1}) for j in range(1, window + 1)]
        slots = list(range(1, window + 1))
        name = FamilyName.XI_HALF_POSITIVE
    else:
        gens = [LinearForm.make({-j: -1}) for j in range(1, window + 1)]
        slots = list(range(-1, -window - 1, -1))
        name = FamilyName.XI_HALF_NEGATIVE
    seen = set(gens)
    frontier = list(gens)
    for _ in range(max_depth):
        fresh = []
        for f in frontier:
            for slot in slots:
                g = _half_s(cartan, slot, f)
                if not g.is_zero() and g not in seen:
                    if len(seen) >= budget:
                        raise FormBudgetExceeded(f"half closure exceeded {budget} forms")
                    seen.add(g)
                    fresh.append(g)
        if not fresh:
            break
        frontier = fresh
    return FormFamily.make(name, seen, window=window, variant="closure")


def check_pn_assumptions(cartan: CartanRank2, depth: int = 10, window: int = 10) -> bool:
    """Sign conditions on the first-occurrence slots of the half-line closures.

    Every form of the positive half-line closure must carry nonnegative
    coefficients at slots 1 and 2 (the first occurrence of each letter), and
    every form of the negative closure nonpositive coefficients at -1 and -2.
    Returns True when no violation exists up to the given depth.
    """
    pos = half_closure(cartan, True, window, depth)
    for f in pos.forms:
        if f.coefficient(1) < 0 or f.coefficient(2) < 0:
            return False
    neg = half_closure(cartan, False, window, depth)
    for f in neg.forms:
        if f.coefficient(-1) > 0 or f.coefficient(-2) > 0:
            return False
    return True
