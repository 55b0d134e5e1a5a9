"""Command line interface.

Subcommands: classify, hwv, lwv, graph, xi, member, verify.  Exit codes
follow a fixed contract: 0 success, 1 semantic negative (no such vector /
failed check), 2 precondition violation, 3 budget exceeded, 64 usage error.
Output is deterministic: identical flags give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cartan import CartanRank2, Regime, Weight, classify_weight
from .crystal import CrystalGraph, LambdaVector, bfs_component, wt
from .errors import (
    CrystalError,
    EnumerationBudgetExceeded,
    FormBudgetExceeded,
    NodeBudgetExceeded,
    PreconditionViolation,
    RegimeMismatch,
    StepLimitExceeded,
    UnsupportedCartan,
    WindowViolation,
)
from .extremal import highest_vector, lowest_vector
from .forms import (
    closure,
    first_violation,
    regime_generators,
    undocumented_forms,
    xi_closure,
    xi_displayed,
    xi_family,
)
from .verify import run_suite

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64

DEFAULTS = {"depth": 8, "window": 12, "budget": 10**6, "format": "text"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 64, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_config(path: str) -> dict[str, str]:
    values = {}
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"config line without '=': {line!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def build_parser() -> _Parser:
    parser = _Parser(prog="rank2crystal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: _Parser, need_weight: bool = True) -> None:
        p.add_argument("--config", help="flat key=value file with the flags below")
        p.add_argument("--c1", type=int, help="first off-diagonal Cartan entry")
        p.add_argument("--c2", type=int, help="second off-diagonal Cartan entry")
        if need_weight:
            p.add_argument("--l1", type=int, help="weight coefficient of Lambda_1")
            p.add_argument("--l2", type=int, help="weight coefficient of Lambda_2")
        p.add_argument("--depth", type=int, help="search/closure depth (default 8)")
        p.add_argument("--window", type=int, help="slot window (default 12)")
        p.add_argument("--budget", type=int, help="node/form budget (default 10^6)")
        p.add_argument("--format", choices=("text", "json", "dot"),
                       help="output format (default text)")

    add_common(sub.add_parser("classify", help="regime of the weight"))
    add_common(sub.add_parser("hwv", help="highest weight vector or 'none'"))
    add_common(sub.add_parser("lwv", help="lowest weight vector or 'none'"))

    graph = sub.add_parser("graph", help="bounded component expansion")
    add_common(graph)
    graph.add_argument("--seed", choices=("zero", "hwv", "lwv"), default="hwv",
                       help="start vector (default hwv; falls back to zero)")
    graph.add_argument("--ops", choices=("f", "e", "ef"), default=None,
                       help="expansion operators (default: e from lwv, else f)")

    xi = sub.add_parser("xi", help="inequality family as JSON")
    add_common(xi)
    xi.add_argument("--family", choices=("xi", "xi1", "xi2", "xi3", "xi4"),
                    required=True)
    xi.add_argument("--k", type=int, help="regime index (default: classified)")

    member = sub.add_parser("member", help="test a vector file for membership")
    add_common(member, need_weight=False)
    member.add_argument("vector_file", help="JSON vector as emitted by hwv/lwv")

    verify = sub.add_parser("verify", help="run a verification suite")
    add_common(verify, need_weight=False)
    verify.add_argument("--suite", required=True,
                        choices=("sequences", "crystal", "polyhedral",
                                 "extremal", "appendix", "all"))
    return parser


def _settings(args: argparse.Namespace, need_weight: bool = True,
              need_cartan: bool = True):
    merged = dict(DEFAULTS)
    if args.config:
        for key, value in _read_config(args.config).items():
            merged[key] = value
    for key in ("c1", "c2", "l1", "l2", "depth", "window", "budget", "format"):
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    for key in ("c1", "c2", "l1", "l2", "depth", "window", "budget"):
        if key in merged and merged[key] is not None:
            merged[key] = int(merged[key])
    if merged["format"] not in ("text", "json", "dot"):
        raise ValueError(f"unknown format {merged['format']!r}")
    cartan = None
    if merged.get("c1") is not None and merged.get("c2") is not None:
        cartan = CartanRank2(merged["c1"], merged["c2"])
    if need_cartan and cartan is None:
        raise PreconditionViolation("missing --c1/--c2")
    weight = None
    if need_weight:
        if merged.get("l1") is None or merged.get("l2") is None:
            raise PreconditionViolation("missing --l1/--l2")
        weight = Weight(merged["l1"], merged["l2"])
    return cartan, weight, merged


def _fraction_str(f: Fraction | None) -> str:
    if f is None:
        return "inf"
    return f"{f.numerator}/{f.denominator}"


def _classify_text(cartan: CartanRank2, weight: Weight) -> str:
    cls = classify_weight(cartan, weight)
    if cls.regime in (Regime.TRIVIAL_DOMINANT, Regime.TRIVIAL_ANTIDOMINANT,
                      Regime.AFFINE_LEVEL_ZERO, Regime.HYPERBOLIC_GAP):
        return cls.regime.value
    ratio = weight.ratio()
    rs = _fraction_str(ratio)

    def bracket(match):
        if match.regime.is_highest():
            if match.upper is None:
                return f"{rs} ≥ {_fraction_str(match.lower)}"
            return (f"{_fraction_str(match.upper)} > {rs} "
                    f"≥ {_fraction_str(match.lower)}")
        if match.upper is None:
            return f"{_fraction_str(match.lower)} < {rs}"
        return (f"{_fraction_str(match.lower)} < {rs} "
                f"≤ {_fraction_str(match.upper)}")

    if cls.highest is not None and cls.lowest is not None:
        return (f"Finite type: H_-{cls.highest.vector_index} "
                f"({cls.highest.regime.value} k={cls.highest.k}; {bracket(cls.highest)}), "
                f"L_{cls.lowest.vector_index} "
                f"({cls.lowest.regime.value} k={cls.lowest.k}; {bracket(cls.lowest)})")
    match = cls.highest if cls.highest is not None else cls.lowest
    return f"{cls.regime.value} k={match.k}; {bracket(match)}"


def _classify_json(cartan: CartanRank2, weight: Weight) -> dict:
    cls = classify_weight(cartan, weight)

    def match_json(match):
        if match is None:
            return None
        return {"regime": match.regime.value, "k": match.k,
                "vector_index": match.vector_index,
                "lower": _fraction_str(match.lower),
                "upper": _fraction_str(match.upper)}

    return {"regime": cls.regime.value, "k": cls.k,
            "highest": match_json(cls.highest), "lowest": match_json(cls.lowest)}


def _vector_json(x: LambdaVector) -> dict:
    return {"cartan": [x.cartan.c1, x.cartan.c2],
            "lambda": [x.weight.l1, x.weight.l2],
            "entries": {str(k): v for k, v in x.entries}}


def _vector_from_json(data: dict) -> LambdaVector:
    cartan = CartanRank2(*map(int, data["cartan"]))
    weight = Weight(*map(int, data["lambda"]))
    entries = {int(k): int(v) for k, v in data.get("entries", {}).items()}
    return LambdaVector.make(cartan, weight, entries)


def _emit_vector(x: LambdaVector | None, fmt: str) -> int:
    if x is None:
        print("none")
        return EXIT_NEGATIVE
    if fmt == "json":
        print(json.dumps(_vector_json(x), sort_keys=True))
    else:
        body = ", ".join(f"x_{k}={v}" for k, v in x.entries) or "zero vector"
        w = wt(x)
        print(f"{body}  wt=({w[0]},{w[1]})")
    return EXIT_OK


def _graph_dot(graph: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for n, node in enumerate(graph.nodes):
        label = "{" + ",".join(f"{k}:{v}" for k, v in node.entries) + "}"
        w = wt(node)
        lines.append(f'  n{n} [label="{label} wt=({w[0]},{w[1]})"];')
    for src, i, dst in graph.edges:
        lines.append(f'  n{src} -> n{dst} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


def _graph_json(graph: CrystalGraph) -> dict:
    return {"nodes": [{str(k): v for k, v in node.entries} for node in graph.nodes],
            "edges": [[src, i, dst] for src, i, dst in graph.edges],
            "saturated": graph.saturated}


def _cmd_classify(args) -> int:
    cartan, weight, merged = _settings(args)
    if merged["format"] == "json":
        print(json.dumps(_classify_json(cartan, weight), sort_keys=True))
    else:
        print(_classify_text(cartan, weight))
    return EXIT_OK


def _cmd_extremal(args, side: str) -> int:
    cartan, weight, merged = _settings(args)
    vec = highest_vector(cartan, weight) if side == "hwv" else lowest_vector(cartan, weight)
    return _emit_vector(vec, merged["format"])


def _pick_seed(cartan, weight, which: str) -> tuple[LambdaVector, str]:
    if which == "zero":
        return LambdaVector.make(cartan, weight), "f"
    if which == "hwv":
        vec = highest_vector(cartan, weight)
        if vec is not None:
            return vec, "f"
        vec = lowest_vector(cartan, weight)
        if vec is not None:
            return vec, "e"
        return LambdaVector.make(cartan, weight), "f"
    vec = lowest_vector(cartan, weight)
    if vec is None:
        raise PreconditionViolation("no lowest weight vector for this weight")
    return vec, "e"


def _cmd_graph(args) -> int:
    cartan, weight, merged = _settings(args)
    seed, default_ops = _pick_seed(cartan, weight, args.seed)
    ops = args.ops or default_ops
    graph = bfs_component(seed, merged["depth"], ops=ops,
                          node_budget=merged["budget"])
    if merged["format"] == "json":
        print(json.dumps(_graph_json(graph), sort_keys=True))
    else:
        print(_graph_dot(graph))
    return EXIT_OK


def _cmd_xi(args) -> int:
    cartan, weight, merged = _settings(args, need_weight=args.family != "xi")
    window, depth = merged["window"], merged["depth"]
    if args.family == "xi":
        family = xi_closure(cartan, window=window, max_depth=depth)
        extra = undocumented_forms(family, xi_displayed(cartan, window))
        print(f"note: {len(extra)} closure forms beyond the documented chains",
              file=sys.stderr)
    else:
        which = int(args.family[2:])
        generators, _ = xi_family(cartan, weight, which, k=args.k, window=window)
        family = closure(cartan, generators.forms, window=window, max_depth=depth,
                         name=generators.name, k=generators.k)
    print(json.dumps(family.to_json(), sort_keys=True))
    return EXIT_OK


def _membership_families(cartan, weight, window: int, depth: int):
    families = [xi_closure(cartan, window=window, max_depth=depth)]
    cls = classify_weight(cartan, weight)
    match = cls.highest if cls.highest is not None else cls.lowest
    if match is not None:
        which = {Regime.HIGHEST_ODD: 1, Regime.HIGHEST_EVEN: 2,
                 Regime.LOWEST_ODD: 3, Regime.LOWEST_EVEN: 4}[match.regime]
        generators = regime_generators(cartan, which, match.k, window)
        families.append(closure(cartan, generators.forms, window=window,
                                max_depth=depth, name=generators.name, k=match.k))
    return families


def _cmd_member(args) -> int:
    cartan, _, merged = _settings(args, need_weight=False, need_cartan=False)
    with open(args.vector_file, encoding="utf-8") as handle:
        x = _vector_from_json(json.load(handle))
    if cartan is not None and cartan != x.cartan:
        raise PreconditionViolation(
            f"flags give Cartan ({cartan.c1}, {cartan.c2}) but the vector file "
            f"carries ({x.cartan.c1}, {x.cartan.c2})")
    families = _membership_families(x.cartan, x.weight,
                                    merged["window"], merged["depth"])
    violated = first_violation(x, *families)
    if violated is None:
        print("member")
        return EXIT_OK
    print(f"not a member; violated form {json.dumps(violated.to_json(), sort_keys=True)}")
    return EXIT_NEGATIVE


def _cmd_verify(args) -> int:
    _, _, merged = _settings(args, need_weight=False, need_cartan=False)
    results = run_suite(args.suite)
    failures = sum(0 if r.passed else 1 for r in results)
    if merged["format"] == "json":
        print(json.dumps({"suite": args.suite, "passed": len(results) - failures,
                          "failed": failures,
                          "checks": [{"name": r.name, "passed": r.passed,
                                      "detail": r.detail} for r in results]},
                         sort_keys=True))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            suffix = f" ({r.detail})" if r.detail and not r.passed else ""
            print(f"{status} {r.name}{suffix}")
        print(f"{len(results) - failures}/{len(results)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "hwv":
            return _cmd_extremal(args, "hwv")
        if args.command == "lwv":
            return _cmd_extremal(args, "lwv")
        if args.command == "graph":
            return _cmd_graph(args)
        if args.command == "xi":
            return _cmd_xi(args)
        if args.command == "member":
            return _cmd_member(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise AssertionError(f"unhandled command {args.command}")
    except (PreconditionViolation, RegimeMismatch, UnsupportedCartan,
            WindowViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (NodeBudgetExceeded, FormBudgetExceeded, EnumerationBudgetExceeded,
            StepLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrystalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
