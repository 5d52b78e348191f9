"""``kneserkit`` command line.

Exit codes: 0 success, 1 fact failure, 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Sequence
from typing import Any

from . import io
from .bounds import bound_report
from .coloring import SearchStats, chromatic_number
from .core import GroundContext, Hypergraph, KneserInstance, SetSystem, build_kneser
from .defect import colorability_defect
from .errors import CapacityError, InputError, SolverTimeout
from .facts import FAIL, SCOPES, fact_to_json, run_facts
from .representation import is_convex, is_up_monotone, kg1_clique_test, represent_up_monotone

EXIT_OK = 0
EXIT_FACT_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

DEFAULT_CHI_BUDGET = 600
DEFAULT_FACT_BUDGET = 900


def parse_s(text: str | None) -> int | list[int] | None:
    if text is None:
        return None
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InputError(f"--s expects an integer or a comma-separated list, got {text!r}") from exc
    return parts[0] if len(parts) == 1 else parts


def load_system(path: str, s_text: str | None) -> SetSystem:
    return io.system_from_json(io.read_json(path), parse_s(s_text))


def _need_r(args: argparse.Namespace) -> int:
    if args.r is None:
        raise InputError("--r is required for this input")
    return args.r


def _budget(value: int | None) -> float | None:
    return None if value is None or value < 0 else float(value)


class Output:
    """Collects key/value lines for text mode and a dict for JSON mode."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.data: dict[str, Any] = {}
        self.lines: list[str] = []

    def put(self, key: str, value: Any, text: str | None = None) -> None:
        self.data[key] = value
        if text is not False:
            self.lines.append(text if text is not None else f"{key}: {value}")

    def emit(self) -> None:
        if self.fmt == "json":
            print(io.dumps(self.data))
        else:
            for line in self.lines:
                print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_build(args: argparse.Namespace, out: Output) -> int:
    system = load_system(args.input, args.s)
    instance = KneserInstance(system, _need_r(args), args.variant == "multiset")
    h = build_kneser(instance)
    out.put("vertices", h.vertex_count)
    out.put("edges", len(h.edges))
    if args.out:
        io.write_json(args.out, io.hypergraph_to_json(h))
        out.put("written", args.out)
    return EXIT_OK


def _chi_source(args: argparse.Namespace) -> Hypergraph | KneserInstance:
    data = io.read_json(args.input)
    if io.looks_like_hypergraph(data):
        return io.hypergraph_from_json(data)
    system = io.system_from_json(data, parse_s(args.s))
    return KneserInstance(system, _need_r(args), args.variant == "multiset")


def cmd_chi(args: argparse.Namespace, out: Output) -> int:
    source = _chi_source(args)
    stats = SearchStats()
    started = time.perf_counter()
    try:
        chi, witness = chromatic_number(source, time_limit=_budget(args.budget_seconds), stats=stats)
    except SolverTimeout as exc:
        out.put("status", "budget-exhausted")
        out.put("lower", exc.lower)
        out.put("upper", exc.upper)
        if exc.witness is not None and args.out:
            io.write_json(args.out, io.coloring_to_json(exc.witness))
            out.put("witness", args.out)
        return EXIT_BUDGET
    out.put("chi", chi)
    out.put("colors", list(witness.assignment), text=False)
    out.put("nodes", stats.nodes, text=False)
    out.put("seconds", round(time.perf_counter() - started, 3), text=False)
    if args.format == "text":
        out.lines.append(f"search: {stats.nodes} nodes, {time.perf_counter() - started:.3f} s")
    if args.out:
        io.write_json(args.out, io.coloring_to_json(witness))
        out.put("witness", args.out)
    return EXIT_OK


def cmd_defect(args: argparse.Namespace, out: Output) -> int:
    system = load_system(args.input, args.s)
    value, cert = colorability_defect(system.ground, _need_r(args), system)
    out.put("defect", value)
    out.put("covers", [list(R) for R in cert.covers], text="covers: " + " ".join("{" + ",".join(map(str, R)) + "}" for R in cert.covers))
    if args.out:
        io.write_json(args.out, io.certificate_to_json(cert))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, out: Output) -> int:
    system = load_system(args.input, args.s)
    budget = _budget(args.budget_seconds)
    report = bound_report(system.ground, _need_r(args), system, time_limit=budget if budget is not None else None)
    for key, value in report.to_json().items():
        out.put(key, value)
    problems = report.problems()
    out.put("problems", problems, text=None if problems else False)
    if args.out:
        io.write_json(args.out, report.to_json())
    return EXIT_FACT_FAILED if problems else EXIT_OK


def cmd_represent(args: argparse.Namespace, out: Output) -> int:
    h = io.hypergraph_from_json(io.read_json(args.input))
    up = is_up_monotone(h)
    out.put("up_monotone", up)
    try:
        out.put("convex", is_convex(h))
    except CapacityError as exc:
        out.put("convex", None, text=f"convex: skipped ({exc})")
    if all(e.is_set for e in h.edges):
        test = kg1_clique_test(h)
        out.put("kg1_representable", test.representable)
        if test.missing_clique is not None:
            out.put("missing_clique", [v + 1 for v in test.missing_clique])
    if not up:
        return EXIT_OK
    rep = represent_up_monotone(h)
    payload = io.representation_to_json(rep)
    out.put("representation", payload, text=f"representation: n={payload['n']} s={rep.r - 1} sets={len(payload['sets'])}")
    if args.out:
        io.write_json(args.out, payload)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: Output) -> int:
    budget = args.budget_seconds if args.budget_seconds is not None else DEFAULT_FACT_BUDGET
    ledger = run_facts(args.scope, _budget(budget))
    if args.format == "json":
        out.put("facts", [fact_to_json(f) for f in ledger], text=False)
    else:
        out.lines.extend(f.line() for f in ledger)
    counts = {status: sum(f.status == status for f in ledger) for status in ("pass", "fail", "skipped-budget")}
    out.put("summary", counts, text=" ".join(f"{k}={v}" for k, v in counts.items()))
    if args.out:
        io.write_json(args.out, [fact_to_json(f) for f in ledger])
    return EXIT_FACT_FAILED if any(f.status == FAIL for f in ledger) else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kneserkit", description="Generalized Kneser hypergraphs: colorings, defects, bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the main artifact to this JSON file")

    def system_args(p: argparse.ArgumentParser, r_required: bool = True) -> None:
        p.add_argument("input", help="set system JSON")
        p.add_argument("--r", type=int, required=r_required)
        p.add_argument("--s", help="constant multiplicity or comma-separated vector (overrides the file)")

    p = sub.add_parser("build", help="enumerate the Kneser hypergraph of a set system")
    system_args(p)
    p.add_argument("--variant", choices=("multiset", "set"), default="multiset")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("chi", help="exact chromatic number of a set system's hypergraph or a hypergraph file")
    system_args(p, r_required=False)
    p.add_argument("--variant", choices=("multiset", "set"), default="multiset")
    p.add_argument("--budget-seconds", type=int, default=DEFAULT_CHI_BUDGET, help="negative for unlimited")
    common(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("defect", help="colorability defect with certificate")
    system_args(p)
    common(p)
    p.set_defaults(func=cmd_defect)

    p = sub.add_parser("bounds", help="defect, lower bound, chromatic numbers and the (*) upper bound")
    system_args(p)
    p.add_argument("--budget-seconds", type=int, default=60, help="per chromatic computation; 0 skips them")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("represent", help="representability checks for a hypergraph file")
    p.add_argument("input", help="hypergraph JSON")
    common(p)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify-paper", help="recompute the fact ledger")
    p.add_argument("--scope", choices=("all",) + SCOPES, default="all")
    p.add_argument("--budget-seconds", type=int, default=None, help=f"per fact (default {DEFAULT_FACT_BUDGET}); 0 skips solver-backed facts")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except (InputError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
