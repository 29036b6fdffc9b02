"""Command-line front end: ``stasheff {enumerate,orders,green,verify,export}``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import ContractViolation, ResourceGuardError
from .orders import DEFAULT_LIMIT, build_poset, enumerate_triangulations, hasse, is_lattice, orders_coincide
from .polytope import PolytopeSpec
from .relation import Relation
from .reptheory import DEFAULT_CHAIN_LIMIT, enumerate_green_sequences, green_poset, summand_set
from .verify import check_green, check_polytope

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt_tuple(t) -> str:
    return "".join(map(str, t)) if max(t, default=0) < 10 else "(" + ",".join(map(str, t)) + ")"


def dot_graph(name: str, n: int, edges, prefix: str = "T") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  {i} [label="{prefix}{i}"];' for i in range(n)]
    lines += [f"  {i} -> {j};" for i, j in sorted(edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_json(data) -> str:
    return json.dumps(data, indent=1, sort_keys=False) + "\n"


def _spec(args) -> PolytopeSpec:
    if args.green:
        raise UsageError(f"{args.command} --green takes --d/--n, not --m/--delta")
    if args.d is not None or args.n is not None:
        raise UsageError("polytope commands take --m/--delta; --d/--n belong to --green")
    if args.m is None or args.delta is None:
        raise UsageError("--m and --delta are required")
    return PolytopeSpec(args.m, args.delta)


def _algebra(args) -> tuple[int, int]:
    if args.m is not None or args.delta is not None:
        raise UsageError("algebra commands take --d/--n, not --m/--delta")
    if args.d is None or args.n is None:
        raise UsageError("--d and --n are required")
    if args.d < 1 or args.n < 1:
        raise UsageError("--d and --n must be positive")
    return args.d, args.n


def run_enumerate(args) -> tuple[str, int]:
    spec = _spec(args)
    elements = enumerate_triangulations(spec, args.limit)
    if args.format == "json":
        return dump_json({"spec": {"m": spec.m, "delta": spec.delta},
                          "elements": [[list(s) for s in t.simplices] for t in elements]}), EXIT_OK
    lines = [f"{len(elements)} triangulations"]
    lines += [f"T{i}: " + " ".join(fmt_tuple(s) for s in t.simplices) for i, t in enumerate(elements)]
    return "\n".join(lines) + "\n", EXIT_OK


def run_orders(args) -> tuple[str, int]:
    spec = _spec(args)
    poset = build_poset(spec, args.limit)
    if args.format == "json":
        return dump_json(poset.to_json()), EXIT_OK
    if args.format == "dot":
        return _poset_dot(poset), EXIT_OK
    n = len(poset.elements)
    lines = [f"{n} triangulations of {spec}",
             "hst1 covers: " + " ".join(f"{i}->{j}" for i, j in poset.covers1),
             "hst2 covers: " + " ".join(f"{i}->{j}" for i, j in hasse(poset.hst2)),
             f"orders coincide: {orders_coincide(spec).coincide}",
             f"hst1 lattice: {is_lattice(poset.hst1).is_lattice}",
             f"hst2 lattice: {is_lattice(poset.hst2).is_lattice}"]
    return "\n".join(lines) + "\n", EXIT_OK


def _poset_dot(poset) -> str:
    n = len(poset.elements)
    return dot_graph("hst1", n, poset.covers1) + dot_graph("hst2", n, hasse(poset.hst2))


def _green_json(d: int, n: int, limit: int) -> dict:
    gp = green_poset(d, n, limit)
    return {
        "d": d,
        "n": n,
        "sequences": [g.to_json() for g in enumerate_green_sequences(d, n, limit)],
        "classes": [c.to_json() for c in gp.classes],
    }


def _green_dot(d: int, n: int, limit: int) -> str:
    gp = green_poset(d, n, limit)
    k = len(gp.classes)
    return dot_graph("green1", k, hasse(gp.leq1)) + dot_graph("green2", k, hasse(gp.leq2))


def run_green(args) -> tuple[str, int]:
    d, n = _algebra(args)
    if args.format == "json":
        return dump_json(_green_json(d, n, args.chain_limit)), EXIT_OK
    if args.format == "dot":
        return _green_dot(d, n, args.chain_limit), EXIT_OK
    sequences = enumerate_green_sequences(d, n, args.chain_limit)
    gp = green_poset(d, n, args.chain_limit)
    lines = [f"{len(sequences)} maximal green sequences, {len(gp.classes)} classes"]
    for i, g in enumerate(sequences):
        lines.append(f"G{i} (length {len(g)}): flips " + " ".join(fmt_tuple(f) for f in g.flips)
                     + " | sigma " + " ".join(fmt_tuple(t) for t in summand_set(g)))
    return "\n".join(lines) + "\n", EXIT_OK


def run_verify(args) -> tuple[str, int]:
    if args.green:
        checks = check_green(*_algebra(args))
    else:
        spec = _spec(args)
        enumerate_triangulations(spec, args.limit)
        checks = check_polytope(spec)
    lines = [json.dumps(c.to_json(), sort_keys=True) for c in checks]
    ok = all(c.passed is not False for c in checks)
    lines.append(json.dumps({"summary": "pass" if ok else "fail", "checks": len(checks)}))
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAILED


def run_export(args) -> tuple[str, int]:
    if args.format == "text":
        raise UsageError("export writes json or dot")
    if args.green:
        d, n = _algebra(args)
        text = dump_json(_green_json(d, n, args.chain_limit)) if args.format == "json" else _green_dot(d, n, args.chain_limit)
    else:
        poset = build_poset(_spec(args), args.limit)
        text = dump_json(poset.to_json()) if args.format == "json" else _poset_dot(poset)
    return text, EXIT_OK


COMMANDS = {
    "enumerate": run_enumerate,
    "orders": run_orders,
    "green": run_green,
    "verify": run_verify,
    "export": run_export,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stasheff", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--m", type=int, help="number of vertices of C(m, delta)")
        p.add_argument("--delta", type=int, help="dimension of C(m, delta)")
        p.add_argument("--d", type=int, help="d of the algebra A_n^d")
        p.add_argument("--n", type=int, help="n of the algebra A_n^d")
        p.add_argument("--green", action="store_true", help="work with green sequences of A_n^d")
        p.add_argument("--format", choices=["text", "json", "dot"], default="json" if name == "export" else "text")
        p.add_argument("--output", type=Path, help="write here instead of stdout")
        p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="maximum number of triangulations")
        p.add_argument("--chain-limit", type=int, default=DEFAULT_CHAIN_LIMIT, help="maximum number of green sequences")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "green":
        args.green = True
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, ContractViolation) as exc:
        print(f"stasheff: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"stasheff: resource limit: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.output is None:
        sys.stdout.write(text)
    else:
        try:
            args.output.write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"stasheff: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
