"""The coordinate crystal: sparse integer vectors with raising/lowering operators.

Elements are doubly infinite integer vectors

    x = (..., x_2, x_1, *, x_{-1}, x_{-2}, ...)

with finite support, the slot * marking the reference weight lambda.  Slots
carry the alternating letter word iota with iota(1), iota(2), ... = 1, 2, 1, ...
and iota(-1), iota(-2), ... = 2, 1, 2, ....  The affine score

    sigma_k(x) = x_k + sum_{j > k} <h_{iota(k)}, alpha_{iota(j)}> x_j
                 (- <h_{iota(k)}, lambda> additionally when k < 0)

stabilises in both tail directions: far above the support it is 0, far below
it equals -<h_i, wt(x)>.  The lowering operator f_i adds 1 at the smallest
slot of letter i maximising sigma, provided that smallest maximiser exists
(equivalently phi_i(x) > 0); the raising operator e_i subtracts 1 at the
largest maximiser, provided it exists (equivalently epsilon_i(x) > 0).
Everything is exact integer arithmetic on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .cartan import CartanRank2, Weight
from .errors import (
    IndexZeroError,
    NodeBudgetExceeded,
    PreconditionViolation,
    StepLimitExceeded,
)

DEFAULT_NODE_BUDGET = 10**6


def iota(k: int) -> int:
    """Letter at slot k: positive odd and negative even slots carry 1."""
    if k == 0:
        raise IndexZeroError("slot 0 carries the weight marker, not a letter")
    odd = k % 2 == 1
    return 1 if odd == (k > 0) else 2


def k_plus(k: int) -> int:
    """Next slot above k with the same letter."""
    if k == 0:
        raise IndexZeroError("slot 0 has no letter")
    if k == -1:
        return 2
    if k == -2:
        return 1
    return k + 2


def k_minus(k: int) -> int:
    """Next slot below k with the same letter."""
    if k == 0:
        raise IndexZeroError("slot 0 has no letter")
    if k == 1:
        return -2
    if k == 2:
        return -1
    return k - 2


@dataclass(frozen=True)
class LambdaVector:
    """Finite-support integer vector around the weight marker.

    ``entries`` is the canonical encoding: (slot, value) pairs sorted by slot
    with zero values stripped.  The zero vector represents the unit element
    of the component B_0(lambda).
    """

    cartan: CartanRank2
    weight: Weight
    entries: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def make(cartan: CartanRank2, weight: Weight,
             entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> "LambdaVector":
        items = entries.items() if isinstance(entries, Mapping) else entries
        cleaned = {}
        for k, v in items:
            if k == 0:
                raise IndexZeroError("slot 0 cannot hold an entry")
            if v != 0:
                cleaned[int(k)] = cleaned.get(int(k), 0) + int(v)
        canon = tuple(sorted((k, v) for k, v in cleaned.items() if v != 0))
        return LambdaVector(cartan, weight, canon)

    def entry(self, k: int) -> int:
        for slot, value in self.entries:
            if slot == k:
                return value
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def total(self) -> int:
        """Sum of all entries; every f_i raises it by 1 and every e_i lowers it."""
        return sum(v for _, v in self.entries)

    def with_entry(self, k: int, value: int) -> "LambdaVector":
        d = self.as_dict()
        if value == 0:
            d.pop(k, None)
        else:
            d[k] = value
        return LambdaVector(self.cartan, self.weight, tuple(sorted(d.items())))

    def bumped(self, k: int, delta: int) -> "LambdaVector":
        return self.with_entry(k, self.entry(k) + delta)


def wt(x: LambdaVector) -> tuple[int, int]:
    """Weight of x as the pair (<h_1, .>, <h_2, .>): lambda - sum x_j alpha_{iota(j)}."""
    s1 = sum(v for k, v in x.entries if iota(k) == 1)
    s2 = sum(v for k, v in x.entries if iota(k) == 2)
    c1, c2 = x.cartan.c1, x.cartan.c2
    return (x.weight.l1 - 2 * s1 + c1 * s2, x.weight.l2 + c2 * s1 - 2 * s2)


def sigma(x: LambdaVector, k: int) -> int:
    """The affine score sigma_k(x); reference implementation by direct summation."""
    if k == 0:
        raise IndexZeroError("sigma is -infinity at slot 0")
    i = iota(k)
    acc = x.entry(k)
    for j, v in x.entries:
        if j > k:
            acc += x.cartan.pairing(i, iota(j)) * v
    if k < 0:
        acc -= x.weight.pairing(i)
    return acc


@dataclass(frozen=True)
class SigmaProfile:
    """Maximum of sigma over the slots of one letter, with tail bookkeeping.

    ``maximizers`` lists the in-window slots attaining the maximum;
    ``neg_tail_attains`` / ``pos_tail_attains`` record whether the constant
    tail values (-<h_i, wt(x)> below, 0 above) attain it, in which case the
    maximising set is infinite in that direction.
    """

    letter: int
    max_value: int
    maximizers: tuple[int, ...]
    neg_tail_attains: bool
    pos_tail_attains: bool


def _sigma_window(x: LambdaVector) -> tuple[int, int]:
    support = x.support()
    lo = min(support) if support else -1
    hi = max(support) if support else 1
    return min(lo, -1) - 2, max(hi, 1) + 2


def sigma_profile(x: LambdaVector, i: int) -> SigmaProfile:
    """Profile of sigma over letter-i slots via one descending sweep.

    The window [lo, hi] extends two slots past the support on both sides, so
    both parities reach their stabilised tail values at the window edges.
    """
    if i not in (1, 2):
        raise PreconditionViolation(f"letter must be 1 or 2, got {i}")
    lo, hi = _sigma_window(x)
    c1, c2 = x.cartan.c1, x.cartan.c2
    entries = x.as_dict()
    w = wt(x)
    neg_tail = -w[i - 1]

    values: list[tuple[int, int]] = []
    s1 = s2 = 0  # running sums of entries strictly above the current slot
    for k in range(hi, lo - 1, -1):
        if k == 0:
            continue
        letter = iota(k)
        if letter == i:
            if letter == 1:
                val = entries.get(k, 0) + 2 * s1 - c1 * s2
            else:
                val = entries.get(k, 0) - c2 * s1 + 2 * s2
            if k < 0:
                val -= x.weight.pairing(letter)
            values.append((k, val))
        if letter == 1:
            s1 += entries.get(k, 0)
        else:
            s2 += entries.get(k, 0)

    max_value = max(v for _, v in values)
    max_value = max(max_value, neg_tail, 0)
    maximizers = tuple(sorted(k for k, v in values if v == max_value))
    return SigmaProfile(
        letter=i,
        max_value=max_value,
        maximizers=maximizers,
        neg_tail_attains=max_value == neg_tail,
        pos_tail_attains=max_value == 0,
    )


def epsilon(x: LambdaVector, i: int) -> int:
    """epsilon_i(x) = max sigma over letter-i slots; always >= 0."""
    return sigma_profile(x, i).max_value


def phi(x: LambdaVector, i: int) -> int:
    """phi_i(x) = <h_i, wt(x)> + epsilon_i(x); always >= 0."""
    return wt(x)[i - 1] + epsilon(x, i)


def e_tilde(x: LambdaVector, i: int) -> LambdaVector | None:
    """Raising operator: subtract 1 at the largest maximiser, or None.

    The largest maximiser fails to exist exactly when the positive tail
    attains the maximum, i.e. epsilon_i(x) = 0.
    """
    p = sigma_profile(x, i)
    if p.pos_tail_attains:
        return None
    return x.bumped(max(p.maximizers), -1)


def f_tilde(x: LambdaVector, i: int) -> LambdaVector | None:
    """Lowering operator: add 1 at the smallest maximiser, or None.

    The smallest maximiser fails to exist exactly when the negative tail
    attains the maximum, i.e. phi_i(x) = 0.
    """
    p = sigma_profile(x, i)
    if p.neg_tail_attains:
        return None
    return x.bumped(min(p.maximizers), +1)


def raise_to_extremal(x: LambdaVector, mode: str = "raise",
                      max_steps: int = 10_000) -> tuple[LambdaVector, int]:
    """Apply e_i (mode="raise") or f_i (mode="lower") until both return None.

    Letters are tried in the fixed order 2 then 1; inside a connected
    component with a unique extremal vector any schedule reaches it, and the
    step count equals the change in total coordinate sum.  Raises
    StepLimitExceeded when max_steps is exhausted, which is the expected
    outcome for level-zero affine and gap hyperbolic weights.
    """
    if mode not in ("raise", "lower"):
        raise PreconditionViolation(f"mode must be 'raise' or 'lower', got {mode!r}")
    if max_steps < 0:
        raise PreconditionViolation("max_steps must be >= 0")
    op = e_tilde if mode == "raise" else f_tilde
    current = x
    steps = 0
    while True:
        nxt = None
        for i in (2, 1):
            nxt = op(current, i)
            if nxt is not None:
                break
        if nxt is None:
            return current, steps
        if steps >= max_steps:
            raise StepLimitExceeded(steps, current)
        current = nxt
        steps += 1


@dataclass(frozen=True)
class CrystalGraph:
    """Finite portion of a crystal graph; edges (src, i, dst) mean f_i(src) = dst."""

    seed: LambdaVector
    depth: int
    nodes: tuple[LambdaVector, ...]
    edges: tuple[tuple[int, int, int], ...]
    saturated: bool = field(default=False, compare=False)

    def node_index(self, x: LambdaVector) -> int:
        return self.nodes.index(x)


def bfs_component(seed: LambdaVector, depth: int, ops: str = "f",
                  node_budget: int = DEFAULT_NODE_BUDGET) -> CrystalGraph:
    """Breadth-first expansion of the component around seed.

    ops selects the exploration operators: "f" lowering only, "e" raising
    only, "ef" both.  Nodes are returned in canonical order (lexicographic on
    the sorted entry encoding) and the edge set is complete among discovered
    nodes, so single- and multi-threaded callers agree byte for byte.
    ``saturated`` records that expansion hit a fixed point before the depth
    ran out: the selected operators produce nothing new.
    """
    if depth < 0:
        raise PreconditionViolation("depth must be >= 0")
    if ops not in ("f", "e", "ef"):
        raise PreconditionViolation(f"ops must be 'f', 'e' or 'ef', got {ops!r}")
    operators = []
    if "f" in ops:
        operators.append(f_tilde)
    if "e" in ops:
        operators.append(e_tilde)

    seen = {seed}
    frontier = [seed]
    saturated = False
    for _ in range(depth):
        nxt = []
        for v in frontier:
            for op in operators:
                for i in (1, 2):
                    w = op(v, i)
                    if w is not None and w not in seen:
                        if len(seen) >= node_budget:
                            raise NodeBudgetExceeded(
                                f"more than {node_budget} nodes at depth <= {depth}")
                        seen.add(w)
                        nxt.append(w)
        if not nxt:
            saturated = True
            break
        frontier = nxt
    else:
        saturated = not frontier

    nodes = tuple(sorted(seen, key=lambda v: v.entries))
    index = {v: n for n, v in enumerate(nodes)}
    edges = []
    for n, v in enumerate(nodes):
        for i in (1, 2):
            w = f_tilde(v, i)
            if w is not None and w in index:
                edges.append((n, i, index[w]))
    return CrystalGraph(seed=seed, depth=depth, nodes=nodes,
                        edges=tuple(sorted(edges)), saturated=saturated)
