"""Command-line interface: ``fracfactor {factor,all,sufficient,search}``.

Exit codes: 0 feasible / holds / agree, 1 infeasible / fails / disagree,
2 input, precondition or guard error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .allfactors import all_factors_brute, verify_equivalence
from .conditions import (
    DEFAULT_MAX_PAIRS,
    GuardError,
    check_all_including,
    check_exists,
    check_sufficient,
)
from .graph import (
    EdgeSubgraph,
    FactorError,
    ParseError,
    parse_graph,
    parse_subgraph,
    parse_vertex_func,
    remove_edges,
)
from .oracle import CHECKS, SearchConfig, search_counterexample
from .solver import solve_fractional_factor, solve_including

EXIT_CODES = {
    "feasible": 0, "holds": 0, "agree": 0,
    "infeasible": 1, "fails": 1, "disagree": 1,
    "error": 2,
}


class CliError(Exception):
    def __init__(self, kind: str, message: str):
        self.kind = kind
        self.message = message
        super().__init__(f"{kind}: {message}")


def _read(path: str, what: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError("input", f"cannot read {what} file {path}: {exc.strerror}") from None


def _load(args):
    gtext = _read(args.graph, "graph")
    try:
        G = parse_graph(gtext)
    except ParseError as exc:
        raise CliError("parse", f"{args.graph}: {exc}") from None
    funcs = []
    for path, role in ((args.func_g, "g"), (args.func_f, "f")):
        text = _read(path, f"{role} function")
        try:
            funcs.append(parse_vertex_func(text, G, role))
        except ParseError as exc:
            raise CliError("parse", f"{path}: {exc}") from None
    H = EdgeSubgraph.empty(G)
    if getattr(args, "include", None):
        text = _read(args.include, "subgraph")
        try:
            H = parse_subgraph(text, G)
        except ParseError as exc:
            raise CliError("parse", f"{args.include}: {exc}") from None
    g, f = funcs
    for x in range(G.n):
        if g[x] > f[x]:
            raise CliError("precondition", f"g({x}) = {g[x]} exceeds f({x}) = {f[x]}")
    return G, g, f, H


def _witness(w, **extra) -> dict:
    out = w.to_dict()
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# Commands; each returns a report dict without tool_version/elapsed.


def cmd_factor(args) -> dict:
    G, g, f, H = _load(args)
    report: dict = {}
    method = args.method
    if len(H) and g.values != f.values:
        raise CliError("precondition", "--include requires g = f (a single r)")
    if method == "flow":
        if len(H):
            out = solve_including(G, g, H, "direct", args.max_pairs)
        else:
            out = solve_fractional_factor(G, g, f, args.max_pairs)
        if out.feasible:
            report["verdict"] = "feasible"
            report["factor"] = out.factor.to_dict()
        else:
            report["verdict"] = "infeasible"
            extra = {"on": "reduced"} if len(H) else {}
            report["witness"] = _witness(out.witness, **extra)
        return report

    mode = {"thm1": "canonical", "thm2": "full"}[method]
    if len(H):
        bound = [g[x] - H.degrees[x] for x in range(G.n)]
        if min(bound) < 0:
            out = solve_including(G, g, H, "direct", args.max_pairs)
            rep_holds, witness, examined = False, out.witness, 0
        else:
            rep = check_exists(remove_edges(G, H), bound, bound, mode, allow_zero=True,
                               max_pairs=args.max_pairs)
            rep_holds, witness, examined = rep.holds, rep.witness, rep.pairs_examined
        report["verdict"] = "holds" if rep_holds else "fails"
        if witness is not None:
            report["witness"] = _witness(witness, on="reduced")
        report["stats"] = {"pairs_examined": examined}
        return report
    rep = check_exists(G, g, f, mode, max_pairs=args.max_pairs)
    report["verdict"] = "holds" if rep.holds else "fails"
    if rep.witness is not None:
        report["witness"] = _witness(rep.witness)
    report["stats"] = {"pairs_examined": rep.pairs_examined}
    return report


def cmd_all(args) -> dict:
    G, g, f, H = _load(args)
    method = args.method
    if method == "thm3" and len(H):
        raise CliError("precondition", "thm3 requires an empty --include")
    if method in ("thm4", "thm3"):
        mode = "full" if method == "thm4" else "canonical-no-H"
        rep = check_all_including(G, g, f, H, mode)
        report = {"verdict": "holds" if rep.holds else "fails",
                  "stats": {"pairs_examined": rep.pairs_examined}}
        if rep.witness is not None:
            report["witness"] = _witness(rep.witness)
        return report
    if method == "brute":
        rep = all_factors_brute(G, g, f, H)
        report = {"verdict": "holds" if rep.holds else "fails",
                  "stats": {"r_examined": rep.r_examined}}
        if rep.witness is not None:
            report["witness"] = _witness(rep.witness, r=list(rep.failing_r), on="reduced")
        return report
    rep = verify_equivalence(G, g, f, H)
    report = {"verdict": "agree" if rep.agree else "disagree",
              "stats": {"verdicts": dict(sorted(rep.verdicts.items()))}}
    if not rep.agree:
        report["replay"] = {"instance": rep.instance()}
    return report


def cmd_sufficient(args) -> dict:
    G, g, f, H = _load(args)
    try:
        rep = check_sufficient(G, g, f, H)
    except FactorError as exc:
        raise CliError("precondition", str(exc)) from None
    report = {"verdict": "holds" if rep.holds else "fails",
              "stats": {"pairs_examined": rep.pairs_examined}}
    if rep.witness is not None:
        w = rep.witness
        report["witness"] = _witness(w, pair=[w.S[0], w.T[0]])
    return report


def _parse_p(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise CliError("config", f"bad probability {text!r}; expected NUM/DEN") from None


def cmd_search(args) -> dict:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    for c in checks:
        if c not in CHECKS:
            raise CliError("config", f"unknown check {c!r}; known: {','.join(CHECKS)}")
    try:
        config = SearchConfig(n_min=args.n_min, n_max=args.n_max,
                              edge_probability=_parse_p(args.p), trials=args.trials,
                              seed=args.seed, checks=checks)
    except FactorError as exc:
        raise CliError("config", str(exc)) from None
    summary = search_counterexample(config)
    report = {"verdict": "disagree" if summary.found else "agree",
              "stats": {"trials": summary.trials, "checked": summary.checked,
                        "skipped": summary.skipped,
                        "premise_held": dict(sorted(summary.premise_held.items()))}}
    if summary.found:
        report["replay"] = summary.discrepancy.to_dict()
    return report


COMMANDS = {"factor": cmd_factor, "all": cmd_all, "sufficient": cmd_sufficient,
            "search": cmd_search}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracfactor",
        description="Fractional (g,f)-factors and all fractional (g,f)-factors including H.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, include=True):
        p.add_argument("--graph", required=True, help="graph file ('p n m' / 'e u v')")
        p.add_argument("--func-g", required=True, help="lower bound function file")
        p.add_argument("--func-f", required=True, help="upper bound function file")
        if include:
            p.add_argument("--include", help="subgraph file H ('e u v' lines)")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--out", help="write the report to this file instead of stdout")

    p = sub.add_parser("factor", help="find a fractional (g,f)-factor or a witness")
    common(p)
    p.add_argument("--method", choices=("flow", "thm1", "thm2"), default="flow")
    p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)

    p = sub.add_parser("all", help="all fractional (g,f)-factors including H")
    common(p)
    p.add_argument("--method", choices=("thm4", "thm3", "brute", "verify"), default="thm4")

    p = sub.add_parser("sufficient", help="pairwise degree sufficient condition")
    common(p)

    p = sub.add_parser("search", help="seeded search for inconsistencies")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--p", default="1/2", help="edge probability NUM/DEN")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", default=",".join(CHECKS), help="comma-separated check names")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    return parser


def _command_echo(args) -> dict:
    echo = {"name": args.command}
    for key, val in sorted(vars(args).items()):
        if key in ("command", "json", "out") or val is None:
            continue
        echo[key] = val
    return echo


def render_text(report: dict) -> str:
    lines = [f"verdict: {report['verdict']}"]
    if "error" in report:
        lines.append(f"error: {report['error']['kind']}: {report['error']['message']}")
    if "witness" in report:
        w = report["witness"]
        line = f"witness: S={w['S']} T={w['T']} deficiency={w['deficiency']}"
        if "pair" in w:
            line = f"violating pair: x={w['pair'][0]} y={w['pair'][1]} slack={w['deficiency']}"
        if "r" in w:
            line += f" r={w['r']}"
        if w.get("on") == "reduced":
            line += " (on G - E(H))"
        lines.append(line)
    if "factor" in report:
        lines.append("factor:")
        for e in report["factor"]["edges"]:
            num, den = e["h"]
            lines.append(f"  {e['u']} {e['v']} {num}/{den}")
    for key, val in report.get("stats", {}).items():
        lines.append(f"{key}: {val}")
    if "replay" in report:
        lines.append("replay: " + json.dumps(report["replay"], sort_keys=True))
    return "\n".join(lines) + "\n"


def run(argv: Optional[list[str]] = None):
    """Parse ``argv`` and execute; returns ``(exit_code, report, args)``."""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        body = COMMANDS[args.command](args)
    except CliError as exc:
        body = {"verdict": "error", "error": {"kind": exc.kind, "message": exc.message}}
    except GuardError as exc:
        body = {"verdict": "error", "error": {"kind": "guard", "message": str(exc)}}
    except FactorError as exc:
        body = {"verdict": "error", "error": {"kind": "precondition", "message": str(exc)}}
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    report = {"command": _command_echo(args), **body}
    report.setdefault("stats", {})["elapsed_ms"] = elapsed_ms
    report["tool_version"] = __version__
    return EXIT_CODES[report["verdict"]], report, args


def main(argv: Optional[list[str]] = None) -> int:
    code, report, args = run(argv)
    text = json.dumps(report, sort_keys=True) + "\n" if args.json else render_text(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if report["verdict"] == "error":
        err = report["error"]
        sys.stderr.write(f"error: {err['kind']}: {err['message']}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
