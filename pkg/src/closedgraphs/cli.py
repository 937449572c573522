"""Command-line front end.

Exit codes: 0 when the property holds (or recognition says YES), 1 when it
fails (a certificate is printed), 2 on input or usage errors.  JSON goes to
stdout, diagnostics and timings to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .certificates import certify
from .forbidden import ForbiddenWitness, classify, is_chordal
from .formats import EDGELIST, GRAPH6, parse_graphs
from .graph import Graph, GraphError
from .intervals import build_representation, validate_representation
from .narrowness import is_narrow
from .orderings import CLOSED, PROPER, Ordering, is_closed_ordering, is_proper_interval_ordering
from .straight import straight_orientation
from .suite import run_suite

YES, NO, USAGE = 0, 1, 2


def cmd_recognize(G: Graph, args) -> tuple[int, dict]:
    cert = certify(G)
    return (YES if cert.verdict else NO), {"closed": cert.verdict, "certificate": cert.to_json()}


def cmd_check_ordering(G: Graph, args) -> tuple[int, dict]:
    sigma = Ordering.parse(args.ordering)
    if len(sigma) != G.n:
        raise GraphError(f"ordering has {len(sigma)} labels, graph has {G.n} vertices")
    check = is_closed_ordering if args.mode == CLOSED else is_proper_interval_ordering
    violation = check(G, sigma)
    out = {"mode": args.mode, "ordering": str(sigma), "ok": violation is None}
    if violation is not None:
        out["violation"] = violation.to_json()
    return (YES if violation is None else NO), out


def cmd_narrow(G: Graph, args) -> tuple[int, dict]:
    witness = is_narrow(G)
    out = {"narrow": witness is None}
    if witness is not None:
        out["witness"] = witness.to_json()
    return (YES if witness is None else NO), out


def cmd_forbidden(G: Graph, args) -> tuple[int, dict]:
    c = classify(G)
    return (YES if c.all_free else NO), c.to_json()


def cmd_chordal(G: Graph, args) -> tuple[int, dict]:
    result = is_chordal(G)
    if isinstance(result, ForbiddenWitness):
        return NO, {"chordal": False, "witness": result.to_json()}
    return YES, {"chordal": True, **result.to_json()}


def cmd_orient(G: Graph, args) -> tuple[int, dict]:
    se = straight_orientation(G)
    if se is None:
        return NO, {"straight": False, "certificate": certify(G).to_json()}
    return YES, {"straight": True, "straight_enumeration": se.to_json()}


def cmd_intervals(G: Graph, args) -> tuple[int, dict]:
    cert = certify(G)
    if not cert.verdict:
        return NO, {"proper_interval": False, "certificate": cert.to_json()}
    rep = build_representation(G, cert.ordering)
    assert not validate_representation(G, rep)
    return YES, {"proper_interval": True, "ordering": str(cert.ordering),
                 "intervals": rep.to_json()}


GRAPH_COMMANDS = {
    "recognize": cmd_recognize,
    "check-ordering": cmd_check_ordering,
    "narrow": cmd_narrow,
    "forbidden": cmd_forbidden,
    "chordal": cmd_chordal,
    "orient": cmd_orient,
    "intervals": cmd_intervals,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="closedgraphs",
                     description="Certifying recognition of closed (proper interval) graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in GRAPH_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", default="-",
                       help="graph file (edge list or graph6); '-' reads stdin")
        p.add_argument("--format", choices=[EDGELIST, GRAPH6],
                       help="input format (auto-detected by default)")
        p.add_argument("--json", action=argparse.BooleanOptionalAction, default=True,
                       help="JSON output (default on)")
        if name == "check-ordering":
            p.add_argument("--ordering", required=True, help='1-based labels, e.g. "3,1,2"')
            p.add_argument("--mode", choices=[CLOSED, PROPER], default=PROPER)
    p = sub.add_parser("suite")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action=argparse.BooleanOptionalAction, default=True)
    return parser


def _emit(payload, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(f"{payload}\n")
    sys.stdout.flush()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "suite":
            report = run_suite(args.max_n, args.seed)
            code = YES if report["total_counterexamples"] == 0 else NO
            payload = report
        else:
            graphs = parse_graphs(_read(args.input), args.format)
            fn = GRAPH_COMMANDS[args.command]
            results = []
            code = YES
            for G in graphs:
                c, out = fn(G, args)
                results.append({"n": G.n, **out})
                code = max(code, c)
            payload = results[0] if len(results) == 1 else results
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"closedgraphs {args.command}: error: {exc}", file=sys.stderr)
        return USAGE
    _emit(payload, args.json)
    elapsed = (time.perf_counter() - start) * 1000
    print(f"closedgraphs {args.command}: {elapsed:.1f} ms", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
