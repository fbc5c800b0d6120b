"""Command-line entry point: ``perronmax <command> ...``.

Results go to stdout, diagnostics to stderr. Exit status is 0 on success,
1 on a domain error (bad sequence, disconnected graph, unreadable file) and
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

import numpy as np

from . import __version__
from .bfd import construct_bfd_tree
from .graph import (
    DisconnectedGraphError,
    Graph,
    is_connected_graphical,
    is_graphical,
    is_tree_sequence,
)
from .io import encode_graph6, format_edgelist, parse_degree_sequence, read_graph, write_graph
from .majorization import chain, chain_lambdas, compare
from .oracle import MAX_CONNECTED_N, MAX_TREE_N, enumerate_connected_graphs, enumerate_trees, extremal_report
from .spectral import DEFAULT_TOL, ConvergenceError, perron
from .transforms import maximize
from .verify import run_sweep


class DomainError(Exception):
    """Raised for well-formed requests that cannot be satisfied."""


def _sig(x: float) -> float:
    return float(f"{x:.10g}")


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list()], "graph6": encode_graph6(g)}


def _seq(text: str):
    try:
        return parse_degree_sequence(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return x


def _count(low: int):
    def parse(text: str) -> int:
        x = int(text)
        if x < low:
            raise argparse.ArgumentTypeError(f"must be >= {low}")
        return x

    return parse


def _connected_input(path: str) -> Graph:
    g = read_graph(path)
    if g.n < 2:
        raise DomainError("graph needs at least 2 vertices")
    return g


# -- commands ----------------------------------------------------------------
# Each returns (result dict, plain text, failure message or None).


def cmd_validate(args, cfg):
    pi = args.pi
    res = {
        "sequence": list(pi),
        "graphical": is_graphical(pi),
        "connected_graphical": is_connected_graphical(pi),
        "tree_sequence": is_tree_sequence(pi),
    }
    key = {None: "graphical", "tree": "tree_sequence", "connected": "connected_graphical"}[args.graph_class]
    res["valid"] = res[key]
    text = "\n".join(f"{k}: {str(v).lower()}" for k, v in res.items() if k != "sequence")
    if not res["valid"]:
        what = {"graphical": "graphical", "tree_sequence": "a tree sequence",
                "connected_graphical": "realizable by a connected graph"}[key]
        return res, text, f"{pi} is not {what}"
    return res, text, None


def cmd_construct_bfd(args, cfg):
    try:
        g, ordering = construct_bfd_tree(args.pi)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    r = perron(g, cfg["tol"], cfg["max_iter"])
    text = write_graph(g, args.out, args.format).rstrip("\n")
    if args.out:
        text = f"wrote {args.out}"
    res = {"graph": _graph_json(g), "ordering": ordering.to_dict(), "lambda": _sig(r.lam),
           "vector": [_sig(x) for x in r.f]}
    return res, text, None


def cmd_spectral(args, cfg):
    g = _connected_input(args.input)
    r = perron(g, cfg["tol"], cfg["max_iter"])
    res = {"graph": _graph_json(g), "lambda": _sig(r.lam), "iterations": r.iterations,
           "residual": float(f"{r.residual:.3g}")}
    lines = [f"lambda {r.lam:.10g}", f"iterations {r.iterations}", f"residual {r.residual:.3g}"]
    if args.vector:
        res["vector"] = [_sig(x) for x in r.f]
        lines += [f"f[{v}] {x:.10g}" for v, x in enumerate(r.f)]
    return res, "\n".join(lines), None


def cmd_maximize(args, cfg):
    if args.input:
        start = _connected_input(args.input)
    else:
        if not is_connected_graphical(args.pi):
            raise DomainError(f"{args.pi} has no connected realization")
        start = args.pi
    out = maximize(start, args.restarts, cfg["seed"], args.max_steps, args.strategy, cfg["tol"], cfg["max_iter"])
    best = out.best
    res = {"graph": _graph_json(best.graph), "lambda": _sig(best.lam), "climb": best.to_dict(),
           "winner": out.winner, "final_lambdas": [_sig(r.lam) for r in out.runs]}
    for step in res["climb"]["trace"]:
        step["lambda"] = _sig(step["lambda"])
    res["climb"]["lambda"] = _sig(best.lam)
    res["climb"]["start_lambda"] = _sig(best.start_lam)
    lines = [
        f"lambda {best.lam:.10g}",
        f"start lambda {best.start_lam:.10g}",
        f"steps {len(best.trace)}",
        f"fixpoint {str(best.fixpoint).lower()}",
    ]
    for k, step in enumerate(best.trace, 1):
        mv = step.move
        lines.append(f"step {k}: {mv.kind} {list(mv.removed)} -> {list(mv.added)} lambda {step.lam:.10g}")
    lines.append(format_edgelist(best.graph).rstrip("\n"))
    return res, "\n".join(lines), None


def cmd_enumerate(args, cfg):
    pi = args.pi
    tree = args.graph_class == "tree"
    limit = cfg["limits"]["trees" if tree else "connected"]
    if len(pi) > limit:
        raise DomainError(f"n={len(pi)} exceeds the enumeration limit {limit}")
    try:
        if args.report:
            rep = extremal_report(pi, "trees" if tree else "connected", max_n=limit)
            res = rep.to_dict()
            res["lambda_max"] = _sig(rep.lambda_max)
            res["lambda_min"] = _sig(rep.lambda_min)
            text = "\n".join([
                f"labeled {rep.count_labeled}",
                f"classes {rep.count_iso_classes}",
                f"lambda_max {rep.lambda_max:.10g} {res['argmax']}",
                f"lambda_min {rep.lambda_min:.10g} {res['argmin']}",
            ])
            return res, text, None
        gen = enumerate_trees(pi, limit) if tree else enumerate_connected_graphs(pi, limit)
        graphs = [encode_graph6(g) for g in gen]
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return {"count": len(graphs), "graphs": graphs}, "\n".join(graphs), None


def cmd_chain(args, cfg):
    a, b = args.source, args.target
    if len(a) != len(b):
        raise DomainError(f"sequences have different lengths ({len(a)} and {len(b)})")
    try:
        ch = chain(a, b)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    lams = chain_lambdas(ch)
    res = {
        "relation": compare(a, b),
        "steps": ch.steps,
        "chain": [{"sequence": list(s), "lambda": _sig(x)} for s, x in zip(ch, lams)],
        "increasing": all(y - x > 1e-10 for x, y in zip(lams, lams[1:])),
    }
    text = "\n".join(f"{s}  lambda {x:.10g}" for s, x in zip(ch, lams))
    return res, text, None


def cmd_verify(args, cfg):
    if args.theorem == 1 and args.max_n > cfg["limits"]["connected"]:
        raise DomainError(f"--max-n {args.max_n} exceeds --max-connected-n {cfg['limits']['connected']}")
    if args.theorem == 2 and args.max_n > cfg["limits"]["trees"]:
        raise DomainError(f"--max-n {args.max_n} exceeds --max-tree-n {cfg['limits']['trees']}")
    rep = run_sweep(args.theorem, args.max_n, args.jobs)
    lines = [rep.summary()]
    lines += [f"  {f['sequence']}: {f['reason']} [{f['graph6']}]" for f in rep.failures]
    return rep.to_dict(), "\n".join(lines), None if rep.passed else rep.summary()


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("common options")
    g.add_argument("--json", action="store_true", help="emit {command, config, result} JSON")
    g.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="power-iteration tolerance (default 1e-12)")
    g.add_argument("--max-iter", type=_count(1), default=None, help="power-iteration cap (default 100n+10000)")
    g.add_argument("--seed", type=int, default=0, help="seed for randomized starts (default 0)")
    g.add_argument("--max-tree-n", type=_count(2), default=MAX_TREE_N, help=f"tree enumeration cap (default {MAX_TREE_N})")
    g.add_argument("--max-connected-n", type=_count(2), default=MAX_CONNECTED_N,
                   help=f"connected-graph enumeration cap (default {MAX_CONNECTED_N})")

    p = argparse.ArgumentParser(prog="perronmax", description="Spectral radius maximisation over degree sequences.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("validate", parents=[common], help="classify a degree sequence")
    s.add_argument("--pi", type=_seq, required=True, metavar="SEQ", help='degree sequence, e.g. "4,4,3,3,2,1,1"')
    s.add_argument("--class", dest="graph_class", choices=["tree", "connected"], help="class the sequence must realize")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("construct-bfd", parents=[common], help="build the BFD-tree of a tree sequence")
    s.add_argument("--pi", type=_seq, required=True, metavar="SEQ", help="tree sequence")
    s.add_argument("--out", metavar="FILE", help="write the tree to FILE instead of stdout")
    s.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist", help="graph output format")
    s.set_defaults(run=cmd_construct_bfd)

    s = sub.add_parser("spectral", parents=[common], help="spectral radius and Perron vector of a graph")
    s.add_argument("--in", dest="input", required=True, metavar="FILE", help="edge list or graph6 file, '-' for stdin")
    s.add_argument("--vector", action="store_true", help="also print the Perron vector")
    s.set_defaults(run=cmd_spectral)

    s = sub.add_parser("maximize", parents=[common], help="hill-climb the spectral radius by switches and shifts")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="input", metavar="FILE", help="start graph")
    src.add_argument("--pi", type=_seq, metavar="SEQ", help="start from random connected realizations of SEQ")
    s.add_argument("--max-steps", type=_count(0), default=1000, metavar="N", help="steps per climb (default 1000)")
    s.add_argument("--strategy", choices=["first", "best"], default="first", help="move selection (default first)")
    s.add_argument("--restarts", type=_count(1), default=1, metavar="R", help="number of starts (default 1)")
    s.set_defaults(run=cmd_maximize)

    s = sub.add_parser("enumerate", parents=[common], help="all graphs of a class up to isomorphism")
    s.add_argument("--pi", type=_seq, required=True, metavar="SEQ", help="degree sequence")
    s.add_argument("--class", dest="graph_class", choices=["tree", "connected"], required=True, help="graph class")
    s.add_argument("--report", action="store_true", help="print counts and spectral extremes instead of graphs")
    s.set_defaults(run=cmd_enumerate)

    s = sub.add_parser("chain", parents=[common], help="majorization chain between two tree sequences")
    s.add_argument("--from", dest="source", type=_seq, required=True, metavar="SEQ", help="lower tree sequence")
    s.add_argument("--to", dest="target", type=_seq, required=True, metavar="SEQ", help="upper tree sequence")
    s.set_defaults(run=cmd_chain)

    s = sub.add_parser("verify", parents=[common], help="exhaustive theorem sweep")
    s.add_argument("--theorem", type=int, choices=[1, 2, 3], required=True, help="1: Perron-consistent BFD maximizer; "
                   "2: BFD-tree is the tree maximizer; 3: majorization monotonicity")
    s.add_argument("--max-n", type=_count(2), required=True, metavar="K", help="largest order swept")
    s.add_argument("--jobs", type=_count(1), default=1, metavar="J", help="worker processes (default 1)")
    s.set_defaults(run=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = {
        "tol": args.tol,
        "max_iter": args.max_iter,
        "seed": args.seed,
        "output": "json" if args.json else "text",
        "limits": {"trees": args.max_tree_n, "connected": args.max_connected_n},
    }
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            result, text, problem = args.run(args, cfg)
    except (DomainError, DisconnectedGraphError, ConvergenceError, ValueError, OSError) as exc:
        print(f"perronmax {args.command}: error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"command": args.command, "config": cfg, "result": result}, indent=2, default=_default))
    elif text:
        print(text)
    if problem:
        print(f"perronmax {args.command}: {problem}", file=sys.stderr)
        return 1
    return 0


def _default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")
