"""Desk-scale verification suites shared by the command line and the tests.

Each suite returns a list of named pass/fail results; everything is exact,
deterministic (fixed RNG seeds) and sized to run in seconds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanRank2, Weight, a_prime_seq, a_seq, chebyshev
from .crystal import LambdaVector, bfs_component, e_tilde, epsilon, f_tilde, phi, wt
from .extremal import classical_table, verify_extremal
from .forms import (
    check_pn_assumptions,
    closure,
    phi_chain_closed,
    phi_chain_iterated,
    xi_closure,
    xi_displayed,
    xi_family,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""


SEQUENCE_GRID = ((2, 2), (1, 4), (4, 1), (2, 3), (3, 2), (3, 3), (1, 5))

#: (c1, c2, l1, l2) instances spanning all four extremal regimes over the
#: affine and hyperbolic verification grid.
EXTREMAL_INSTANCES = (
    (2, 2, 2, -1), (2, 2, 3, -2), (2, 2, 7, -5), (2, 2, 9, -7),
    (2, 2, 1, -2), (2, 2, 2, -3),
    (1, 4, 1, -1), (1, 4, 4, -5), (1, 4, 7, -10), (1, 4, 1, -4), (1, 4, 1, -3),
    (2, 3, 2, -1), (2, 3, 5, -3), (2, 3, 13, -8),
    (2, 3, 1, -3), (2, 3, 2, -5), (2, 3, 5, -12),
    (1, 5, 13, -8), (1, 5, 4, -5), (1, 5, 7, -9), (1, 5, 1, -5), (1, 5, 1, -4),
    (3, 3, 3, -1), (3, 3, 14, -5), (3, 3, 45, -17), (3, 3, 1, -3), (3, 3, 4, -11),
)


def _poly_mul_truncated(p: list[int], q: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, a in enumerate(p):
        if i > order:
            break
        for j, b in enumerate(q):
            if i + j > order:
                break
            out[i + j] += a * b
    return out


def suite_sequences(max_l: int = 50) -> list[SuiteResult]:
    results = []
    for c1, c2 in SEQUENCE_GRID:
        cartan = CartanRank2(c1, c2)
        a = [a_seq(cartan, l) for l in range(max_l + 3)]
        ap = [a_prime_seq(cartan, l) for l in range(max_l + 3)]

        ok = all(a[l] > 0 and ap[l] > 0 for l in range(1, max_l + 1))
        results.append(SuiteResult(f"({c1},{c2}) positivity up to l={max_l}", ok))

        ok = all(
            a[2 * j + 2] == c1 * a[2 * j + 1] - a[2 * j]
            and a[2 * j + 1] == c2 * a[2 * j] - a[2 * j - 1]
            and ap[2 * j + 2] == c2 * a[2 * j + 1] - ap[2 * j]
            and a[2 * j + 1] == c1 * ap[2 * j] - a[2 * j - 1]
            for j in range(1, max_l // 2))
        results.append(SuiteResult(f"({c1},{c2}) four recursions", ok))

        ok = all(a[l + 1] * ap[l + 1] - a[l + 2] * ap[l] == 1 for l in range(1, max_l))
        results.append(SuiteResult(f"({c1},{c2}) determinant identity", ok))

        # a_7: the definition gives c1*c2*(c1*c2-2)*(c1*c2-3) - 1; the trailing
        # -1 is checked explicitly since the product alone is off by one.
        ok = (a[3] == c1 * c2 - 1
              and a[5] == (c1 * c2 - 1) * (c1 * c2 - 2) - 1
              and a[7] == c1 * c2 * (c1 * c2 - 2) * (c1 * c2 - 3) - 1)
        results.append(SuiteResult(f"({c1},{c2}) closed forms a_3, a_5, a_7", ok))

        if c1 * c2 >= 4:
            terms = 40
            high = [Fraction(a[m + 1], a[m]) if m % 2 == 1 else Fraction(ap[m + 1], ap[m])
                    for m in range(1, terms)]
            low = [Fraction(ap[m], ap[m + 1]) if m % 2 == 1 else Fraction(a[m], a[m + 1])
                   for m in range(1, terms)]
            ok = (all(x > y for x, y in zip(high, high[1:]))
                  and all(x < y for x, y in zip(low, low[1:])))
            results.append(SuiteResult(f"({c1},{c2}) ladder monotonicity", ok))

    for x in range(-5, 6):
        order = 30
        series = [chebyshev(n, x) for n in range(order + 1)]
        product = _poly_mul_truncated([1, -x, 1], series, order)
        ok = product == [1] + [0] * order
        ok = ok and all(
            (x + 2) * chebyshev(n, x) ** 2
            - (chebyshev(n + 1, x) + chebyshev(n, x))
            * (chebyshev(n, x) + chebyshev(n - 1, x)) == 1
            and (chebyshev(n, x) + chebyshev(n - 1, x)) ** 2
            - (x + 2) * chebyshev(n, x) * chebyshev(n - 1, x) == 1
            for n in range(41))
        results.append(SuiteResult(f"chebyshev identities at X={x}", ok))
    return results


def _random_vector(rng: random.Random, cartan: CartanRank2, weight: Weight,
                   max_support: int = 8, bound: int = 5) -> LambdaVector:
    entries = {}
    for _ in range(rng.randint(0, max_support)):
        slot = rng.randint(1, 6) * rng.choice((1, -1))
        value = rng.randint(0, bound) if slot > 0 else -rng.randint(0, bound)
        entries[slot] = value
    return LambdaVector.make(cartan, weight, entries)


def _axiom_failures(x: LambdaVector) -> str:
    w = wt(x)
    for i in (1, 2):
        eps, ph = epsilon(x, i), phi(x, i)
        if ph != w[i - 1] + eps:
            return f"phi != <h,wt> + eps at i={i}"
        if eps < 0 or ph < 0:
            return f"negative eps/phi at i={i}"
        up, down = e_tilde(x, i), f_tilde(x, i)
        if (up is None) != (eps == 0) or (down is None) != (ph == 0):
            return f"nullity mismatch at i={i}"
        alpha = (2, -x.cartan.c2) if i == 1 else (-x.cartan.c1, 2)
        if up is not None:
            if f_tilde(up, i) != x:
                return f"f(e(x)) != x at i={i}"
            wu = wt(up)
            if (wu[0] - w[0], wu[1] - w[1]) != alpha:
                return f"wt(e(x)) != wt(x)+alpha at i={i}"
            if up.total() != x.total() - 1:
                return f"e does not lower the total at i={i}"
        if down is not None:
            if e_tilde(down, i) != x:
                return f"e(f(x)) != x at i={i}"
            wd = wt(down)
            if (w[0] - wd[0], w[1] - wd[1]) != alpha:
                return f"wt(f(x)) != wt(x)-alpha at i={i}"
            if down.total() != x.total() + 1:
                return f"f does not raise the total at i={i}"
    return ""


def suite_crystal(samples: int = 400, seed: int = 20240) -> list[SuiteResult]:
    rng = random.Random(seed)
    results = []
    cartans = [CartanRank2(*c) for c in ((2, 2), (2, 3), (1, 4), (3, 3))]
    bad = ""
    for _ in range(samples):
        cartan = rng.choice(cartans)
        weight = Weight(rng.randint(-4, 6), rng.randint(-6, 4))
        x = _random_vector(rng, cartan, weight)
        bad = _axiom_failures(x)
        if bad:
            bad = f"{bad} at {x.entries} weight ({weight.l1},{weight.l2})"
            break
    results.append(SuiteResult(f"crystal axioms on {samples} random vectors",
                               not bad, bad))

    graph = bfs_component(
        LambdaVector.make(CartanRank2(1, 1), Weight(1, -1), {-1: -1}), 10)
    results.append(SuiteResult("A2 component saturates at 3 nodes",
                               graph.saturated and len(graph.nodes) == 3,
                               f"{len(graph.nodes)} nodes"))
    return results


def suite_polyhedral() -> list[SuiteResult]:
    results = []
    instances = (
        (CartanRank2(2, 2), Weight(7, -5), 1),
        (CartanRank2(2, 2), Weight(3, -2), 2),
        (CartanRank2(2, 2), Weight(7, -10), 3),
        (CartanRank2(2, 2), Weight(3, -5), 4),
        (CartanRank2(2, 3), Weight(13, -8), 1),
        (CartanRank2(2, 3), Weight(5, -3), 2),
    )
    for cartan, weight, which in instances:
        generators, table = xi_family(cartan, weight, which, j_max=3, i_max=6, window=12)
        grown = closure(cartan, generators.forms, window=12, max_depth=10,
                        name=generators.name, k=generators.k)
        missing = [f for f in table.forms if f not in grown.as_set()]
        results.append(SuiteResult(
            f"Xi{which} table rows inside closure ({cartan.c1},{cartan.c2})",
            not missing, f"{len(missing)} rows missing"))
        nonneg = all(f.constant_value(weight) >= 0 for f in grown.forms)
        results.append(SuiteResult(
            f"Xi{which} closure constants nonnegative ({cartan.c1},{cartan.c2})",
            nonneg))

    cartan = CartanRank2(2, 3)
    ok = True
    for k in range(1, 6):
        for l in range(0, 9):
            if phi_chain_closed(cartan, l, k) != phi_chain_iterated(cartan, l, k):
                ok = False
    results.append(SuiteResult("chain closed form equals iterated operator", ok))

    chain = xi_closure(cartan, window=8, max_depth=10)
    displayed = xi_displayed(cartan, 6)
    ok = all(f in chain.as_set() for f in displayed.forms)
    results.append(SuiteResult("displayed coordinate chains inside closure", ok))

    ok = all(check_pn_assumptions(CartanRank2(*c), depth=8, window=8)
             for c in ((2, 2), (2, 3), (1, 4), (1, 1), (2, 1)))
    results.append(SuiteResult("half-line sign assumptions", ok))
    return results


def suite_extremal() -> list[SuiteResult]:
    results = []
    for c1, c2, l1, l2 in EXTREMAL_INSTANCES[:12]:
        report = verify_extremal(CartanRank2(c1, c2), Weight(l1, l2))
        detail = "; ".join(c.name for c in report.checks if not c.passed)
        results.append(SuiteResult(
            f"extremal checks ({c1},{c2}) lambda=({l1},{l2})", report.ok(), detail))
    return results


APPENDIX_B2 = (
    (Fraction(5, 2), 1, 3), (Fraction(2), 1, 2), (Fraction(3, 2), 2, 2),
    (Fraction(1), 2, 1), (Fraction(1, 2), 3, 1),
)
APPENDIX_G2 = (
    (Fraction(2), 1, 5), (Fraction(1), 1, 4), (Fraction(5, 6), 2, 4),
    (Fraction(2, 3), 2, 3), (Fraction(3, 5), 3, 3), (Fraction(1, 2), 3, 2),
    (Fraction(2, 5), 4, 2), (Fraction(1, 3), 4, 1), (Fraction(1, 4), 5, 1),
)
APPENDIX_A2 = ((Fraction(2), 1, 2), (Fraction(1), 1, 1), (Fraction(1, 2), 2, 1))


def suite_appendix() -> list[SuiteResult]:
    results = []
    cases = (
        (CartanRank2(2, 1), APPENDIX_B2, "B2"),
        (CartanRank2(1, 3), APPENDIX_G2, "G2"),
        (CartanRank2(1, 1), APPENDIX_A2, "A2"),
    )
    for cartan, rows, label in cases:
        ok = True
        detail = ""
        for ratio, high, low in rows:
            weight = Weight(ratio.numerator, -ratio.denominator)
            got = classical_table(cartan, weight)
            if got != (high, low):
                ok = False
                detail = f"r={ratio}: got {got}, want ({high}, {low})"
                break
        results.append(SuiteResult(f"{label} table ({len(rows)} rows)", ok, detail))
    return results


SUITES = {
    "sequences": suite_sequences,
    "crystal": suite_crystal,
    "polyhedral": suite_polyhedral,
    "extremal": suite_extremal,
    "appendix": suite_appendix,
}


def run_suite(name: str) -> list[SuiteResult]:
    if name == "all":
        out = []
        for suite in SUITES.values():
            out.extend(suite())
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
