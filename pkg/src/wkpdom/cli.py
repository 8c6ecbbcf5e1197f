"""Command-line front end.

Verbs: ``gen`` (export a graph), ``construct`` (closed-form set with
certificate), ``verify`` (check a user seed set), ``exact`` (exhaustive
minimum search), ``radius`` (graph propagation radius), ``trace``
(round-by-round propagation), ``check-paper`` (full reproduction report).

Exit codes: 0 ok, 1 reproduction-report failure, 2 parameter or parse
error, 3 budget exceeded, 4 regime violation.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from .constructions import RegimeError, construct_kpds, gamma_formula
from .exact import (
    BudgetExceededError,
    SearchBudget,
    exact_result_to_json,
    min_kpds,
    propagation_radius,
)
from .propagation import (
    certificate_to_json,
    make_certificate,
    propagate_fixpoint,
    trace_to_json,
)
from .report import report_to_json_text, run_check_paper
from .topology import (
    Address,
    ParameterDomainError,
    PyramidGraph,
    build_wk,
    build_wkp,
    export,
    parse_address,
)

EXIT_OK = 0
EXIT_REPORT_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_REGIME = 4


def parse_seed_set(text: str, C: int) -> list[Address]:
    """Parse a semicolon-separated list of address literals."""
    parts = [p for p in (chunk.strip() for chunk in text.split(";")) if p]
    if not parts:
        raise ParameterDomainError("empty seed set literal")
    return [parse_address(p, C) for p in parts]


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise ParameterDomainError(f"{name} must be an integer, got {raw!r}") from None


def _budget(args: argparse.Namespace) -> SearchBudget:
    cap = args.budget if args.budget is not None else _env_int("WKPDOM_MAX_CHECKS", 10_000_000)
    return SearchBudget(max_subset_count=cap)


def _max_vertices(args: argparse.Namespace) -> int:
    if getattr(args, "max_vertices", None) is not None:
        return args.max_vertices
    return _env_int("WKPDOM_MAX_VERTICES", 100_000)


def _pyramid(args: argparse.Namespace) -> PyramidGraph:
    return build_wkp(args.C, args.L, max_vertices=_max_vertices(args))


def _emit(payload: dict, args: argparse.Namespace) -> None:
    if getattr(args, "format", "json") == "text":
        for key, value in payload.items():
            print(f"{key}: {json.dumps(value)}")
    else:
        print(json.dumps(payload))


def _progress_printer(enabled: bool):
    if not enabled:
        return None

    def report(size: int, done: int, total: int) -> None:
        print(f"size {size}: {done}/{total} subsets checked", file=sys.stderr)

    return report


def cmd_gen(args: argparse.Namespace) -> int:
    builder = build_wk if args.family == "wk" else build_wkp
    g = builder(args.C, args.L, max_vertices=_max_vertices(args))
    data = export(g, args.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    g = _pyramid(args)
    members, provenance = construct_kpds(args.C, args.L, args.k, graph=g)
    cert = make_certificate(g, args.k, [g.ordinal(a) for a in members], provenance)
    payload = {"C": args.C, "L": args.L, "k": args.k,
               "gamma_formula": gamma_formula(args.C, args.L, args.k).to_json()}
    payload.update(certificate_to_json(g, cert))
    _emit(payload, args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _pyramid(args)
    seed = [g.ordinal(a) for a in parse_seed_set(args.set, args.C)]
    cert = make_certificate(g, args.k, seed)
    payload = {"C": args.C, "L": args.L, "k": args.k,
               "set": sorted(str(g.vertices[v]) for v in cert.members),
               "is_kpds": cert.is_kpds,
               "radius": None if math.isinf(cert.radius) else cert.radius}
    _emit(payload, args)
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    g = _pyramid(args)
    result = min_kpds(g, args.k, _budget(args), progress=_progress_printer(args.progress))
    _emit(exact_result_to_json(g, args.k, result), args)
    return EXIT_OK


def cmd_radius(args: argparse.Namespace) -> int:
    g = _pyramid(args)
    value = propagation_radius(g, args.k, _budget(args),
                               progress=_progress_printer(args.progress))
    _emit({"C": args.C, "L": args.L, "k": args.k, "radius": value}, args)
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    g = _pyramid(args)
    seed = [g.ordinal(a) for a in parse_seed_set(args.set, args.C)]
    trace = propagate_fixpoint(g, args.k, seed)
    _emit(trace_to_json(g, trace), args)
    return EXIT_OK


def cmd_check_paper(args: argparse.Namespace) -> int:
    report = run_check_paper()
    if args.format == "json":
        sys.stdout.write(report_to_json_text(report))
    else:
        print(report.format_text())
    return EXIT_REPORT_FAIL if report.failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wkpdom",
        description="k-power domination on WK-recursive mesh and WK-pyramid networks",
        epilog="Env overrides: WKPDOM_MAX_CHECKS (search budget), "
               "WKPDOM_MAX_VERTICES (construction cap).",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def graph_args(p: argparse.ArgumentParser, with_k: bool = True) -> None:
        p.add_argument("--C", type=int, required=True, help="digits per level, C >= 1")
        p.add_argument("--L", type=int, required=True, help="number of levels, L >= 1")
        if with_k:
            p.add_argument("--k", type=int, required=True, help="propagation allowance")
        p.add_argument("--max-vertices", type=int, default=None,
                       help="override the construction size cap")

    def solver_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=int, default=None,
                       help="max propagation checks (default 10^7 or WKPDOM_MAX_CHECKS)")
        p.add_argument("--threads", type=int, default=1,
                       help="reserved; the solver currently always runs single-threaded")
        p.add_argument("--progress", action="store_true",
                       help="print enumeration progress to stderr")

    p = sub.add_parser("gen", help="generate a graph and export it")
    graph_args(p, with_k=False)
    p.add_argument("--family", choices=("wkp", "wk"), default="wkp")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", help="build the closed-form k-PDS with a certificate")
    graph_args(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check whether a seed set is a k-PDS")
    graph_args(p)
    p.add_argument("--set", required=True,
                   help='seed addresses, e.g. "(0,(1));(1,(0))"')
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exhaustive minimum k-PDS search")
    graph_args(p)
    solver_args(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("radius", help="propagation radius over all minimum k-PDS")
    graph_args(p)
    solver_args(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("trace", help="round-by-round monitoring trace for a seed set")
    graph_args(p)
    p.add_argument("--set", required=True,
                   help='seed addresses, e.g. "(1,(2));(2,(01))"')
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("check-paper", help="run the full reproduction report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--threads", type=int, default=1,
                   help="reserved; the report currently always runs single-threaded")
    p.set_defaults(func=cmd_check_paper)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except RegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ParameterDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
