"""Command-line entry point.

Single computations read an ideal/graph (JSON, or graph6 for graphs) from
standard input or ``--in`` and write JSON to standard output or ``--out``.
``verify`` runs a theorem suite over a corpus and exits 1 when a counterexample
was found.  Exit codes: 0 all pass / computation ok, 1 counterexample found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .connections import colon_quadrics
from .graphs import Graph, Graph6Error, parse_graph6
from .homology import betti_table, regularity
from .linquot import find_lq_ordering, is_lq_ordering
from .monomials import MonomialIdeal
from .polymatroid import is_equigenerated, is_matroidal, is_polymatroidal
from .powers import bounded_power, delta
from .suites import SUITE_NAMES, SuiteConfig, default_jobs, run_suite


def _read_input(args) -> str:
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as handle:
            return handle.read()
    return sys.stdin.read()


def _write_output(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.replace(" ", "").split(",") if part != "")
    except ValueError as exc:
        raise ValueError(f"cannot parse integer vector from {text!r}") from exc


def _load_ideal(text: str) -> MonomialIdeal:
    return MonomialIdeal.from_json(text)


def _load_graph(text: str) -> Graph:
    stripped = text.strip()
    if stripped.startswith("{"):
        return Graph.from_json(stripped)
    first = stripped.splitlines()[0] if stripped else ""
    return parse_graph6(first)


def _cmd_ideal(args) -> int:
    ideal = _load_ideal(_read_input(args))
    if args.op == "restrict":
        result = ideal.restrict(_parse_vector(args.c)).to_json()
    elif args.op == "power":
        result = ideal.power(args.s).to_json()
    elif args.op == "colon":
        result = ideal.colon(_parse_vector(args.u)).to_json()
    elif args.op == "betti":
        result = betti_table(ideal, args.char).to_json()
    else:  # reg
        result = json.dumps({"regularity": regularity(ideal, args.char), "char": args.char})
    _write_output(args, result)
    return 0


def _cmd_graph(args) -> int:
    graph = _load_graph(_read_input(args))
    if args.op == "complement":
        result = graph.complement().to_json()
    elif args.op == "chordal":
        result = json.dumps({"chordal": graph.is_chordal()})
    else:  # match
        result = json.dumps({"matching_number": graph.matching_number()})
    _write_output(args, result)
    return 0


def _cmd_delta(args) -> int:
    text = _read_input(args)
    stripped = text.strip()
    if stripped.startswith("{") and "edges" in json.loads(stripped):
        ideal = Graph.from_json(stripped).edge_ideal()
    elif stripped.startswith("{"):
        ideal = _load_ideal(stripped)
    else:
        ideal = _load_graph(stripped).edge_ideal()
    if args.c is not None:
        c = _parse_vector(args.c)
    elif args.c_policy == "ones":
        c = (1,) * ideal.n
    else:
        raise ValueError("delta needs --c or --c-policy ones")
    _write_output(args, json.dumps({"delta": delta(ideal, c), "c": list(c)}))
    return 0


def _cmd_lq(args) -> int:
    ideal = _load_ideal(_read_input(args))
    if args.op == "find":
        ordering = find_lq_ordering(ideal, args.max_gens)
        payload = {"found": ordering is not None,
                   "order": list(ordering.order) if ordering else None}
    else:  # check
        order = _parse_vector(args.order)
        payload = {"order": list(order), "valid": is_lq_ordering(ideal, order)}
    _write_output(args, json.dumps(payload))
    return 0


def _cmd_polymatroidal(args) -> int:
    ideal = _load_ideal(_read_input(args))
    poly = is_polymatroidal(ideal)
    payload = {
        "equigenerated": is_equigenerated(ideal),
        "polymatroidal": poly,
        "matroidal": is_matroidal(ideal) if poly else False,
    }
    _write_output(args, json.dumps(payload))
    return 0


def _cmd_colon_quadrics(args) -> int:
    graph = _load_graph(_read_input(args))
    c = _parse_vector(args.c)
    u = _parse_vector(args.u)
    _write_output(args, colon_quadrics(graph, args.s, c, u).to_json())
    return 0


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(
        suite=args.suite,
        nmax=args.nmax,
        graph6_path=args.graph6,
        random_count=args.count,
        random_nmax=args.random_nmax,
        seed=args.seed,
        c_policy=args.c_policy,
        c_value=args.c_value,
        c_explicit=_parse_vector(args.c) if args.c else None,
        char=args.char,
        max_generators=args.max_gens,
        max_s=args.max_s,
        jobs=args.jobs,
    )
    report = run_suite(cfg)
    _write_output(args, report.to_json())
    return 1 if report.failed else 0


def _add_io_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="infile", help="read input from FILE instead of stdin")
    parser.add_argument("--out", help="write JSON to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boundedpowers",
        description="bounded powers of monomial and edge ideals: computations and theorem suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ideal = sub.add_parser("ideal", help="operations on a monomial ideal (JSON input)")
    p_ideal.add_argument("op", choices=["restrict", "power", "colon", "betti", "reg"])
    p_ideal.add_argument("--c", help="bound vector, e.g. 1,1,2")
    p_ideal.add_argument("--s", type=int, default=1, help="power exponent")
    p_ideal.add_argument("--u", help="monomial exponent vector, e.g. 1,1,0")
    p_ideal.add_argument("--char", type=int, default=0, help="field characteristic")
    _add_io_options(p_ideal)
    p_ideal.set_defaults(func=_cmd_ideal)

    p_graph = sub.add_parser("graph", help="operations on a graph (JSON or graph6 input)")
    p_graph.add_argument("op", choices=["complement", "chordal", "match"])
    _add_io_options(p_graph)
    p_graph.set_defaults(func=_cmd_graph)

    p_delta = sub.add_parser("delta", help="largest nonvanishing bounded power exponent")
    p_delta.add_argument("--c", help="explicit bound vector")
    p_delta.add_argument("--c-policy", choices=["ones"], help="derive c from the ambient")
    _add_io_options(p_delta)
    p_delta.set_defaults(func=_cmd_delta)

    p_lq = sub.add_parser("lq", help="linear quotients orderings (ideal JSON input)")
    p_lq.add_argument("op", choices=["find", "check"])
    p_lq.add_argument("--order", help="candidate ordering for `check`, e.g. 0,2,1")
    p_lq.add_argument("--max-gens", type=int, default=24, help="search cap on generators")
    _add_io_options(p_lq)
    p_lq.set_defaults(func=_cmd_lq)

    p_poly = sub.add_parser("polymatroidal", help="exchange-condition tests (ideal JSON input)")
    _add_io_options(p_poly)
    p_poly.set_defaults(func=_cmd_polymatroidal)

    p_cq = sub.add_parser("colon-quadrics",
                          help="quadric description of a bounded-power colon (graph input)")
    p_cq.add_argument("--s", type=int, required=True)
    p_cq.add_argument("--c", required=True)
    p_cq.add_argument("--u", required=True, help="generator of the s-th bounded power")
    _add_io_options(p_cq)
    p_cq.set_defaults(func=_cmd_colon_quadrics)

    p_verify = sub.add_parser("verify", help="run a theorem-verification suite")
    p_verify.add_argument("--suite", required=True, choices=list(SUITE_NAMES))
    p_verify.add_argument("--nmax", type=int, help="enumerate all labeled graphs on 1..N vertices")
    p_verify.add_argument("--graph6", help="corpus file of graph6 lines")
    p_verify.add_argument("--count", type=int, help="random corpus size")
    p_verify.add_argument("--random-nmax", type=int, default=5,
                          help="vertex cap for random corpora")
    p_verify.add_argument("--c-policy", default="ones",
                          choices=["ones", "constant", "random", "explicit"])
    p_verify.add_argument("--c-value", type=int, default=1,
                          help="constant value / random upper bound for c entries")
    p_verify.add_argument("--c", help="explicit bound vector (with --c-policy explicit)")
    p_verify.add_argument("--char", type=int, default=0)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=default_jobs())
    p_verify.add_argument("--max-gens", type=int, default=24)
    p_verify.add_argument("--max-s", type=int, default=None)
    p_verify.add_argument("--out", help="write the report to FILE")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, Graph6Error, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
