from __future__ import annotations
"""
cli.py - sqfreg command-line runner

WHAT THIS FILE DOES (high level)
--------------------------------
- `reg`         regularity of I(G)^[s] (plus matching numbers, linearity, optional Betti table)
- `colon-graph` the graph H with I(H) = (I(G)^[s+1] : e_1...e_s), with even-connection witnesses
- `order`       an admissible ordering of G(I(G)^[s]) with its per-pair certificate
- `classify`    matching numbers, Cameron-Walker shape and the graph classes the bounds use
- `sweep`       run checks over a graph6 stream, JSONL reports on stdout or --out

stdout carries JSON/JSONL only; status lines go to stderr. Exit codes:
0 ok / all pass, 1 check failure or error report, 2 input or config error,
3 precondition, 4 cap exceeded, 5 theorem violation.
"""

import argparse
import logging
import sys
import time
from contextlib import ExitStack
from typing import Any, Dict, List, Optional, Sequence

from . import config as cfgmod
from .cameron_walker import classify_cameron_walker
from .config import Config
from .errors import (
    CapExceededError,
    ConfigError,
    Graph6Error,
    InvariantError,
    PreconditionError,
    SqfregError,
    TheoremViolation,
)
from .even_connection import colon_graph_report
from .graph import (
    Graph,
    Matching,
    bipartition,
    has_hamiltonian_path,
    induced_matching_number,
    is_very_well_covered,
    matching_number,
    pendant_triangles,
)
from .graph6 import parse_edge_list, parse_graph6, parse_pairs, to_graph6
from .ideal import edge_ideal, squarefree_power
from .io_logs import ReportSink, dumps, write_run_summary
from .order import find_admissible_order
from .reg_cache import RegularityCache
from .regularity import BettiTable, betti_table, has_linear_resolution, memo_info, regularity
from .verify import parse_checks, run_sweep

logger = logging.getLogger(__name__)

EXIT_CODES = (
    (Graph6Error, 2),
    (ConfigError, 2),
    (PreconditionError, 3),
    (CapExceededError, 4),
    (TheoremViolation, 5),
    (InvariantError, 1),
)


def exit_code_for(err: BaseException) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(err, cls):
            return code
    return 1


# ==============================================================================
# Commands (return JSON-ready dicts so tests can call them directly)
# ==============================================================================

def _check_power(g: Graph, s: int) -> int:
    match, _ = matching_number(g)
    if not 1 <= s <= match:
        raise PreconditionError(f"need 1 <= s <= match(G) = {match}, got s = {s}")
    return match


def cmd_reg(g: Graph, s: int, config: Config, betti: bool = False) -> Dict[str, Any]:
    match = _check_power(g, s)
    ind, _ = induced_matching_number(g)
    ideal = squarefree_power(edge_ideal(g), s)
    reg = regularity(ideal, config.prime, config.vertex_cap)
    out: Dict[str, Any] = {
        "schema": cfgmod.REPORT_SCHEMA,
        "graph_id": to_graph6(g),
        "s": s,
        "regularity": reg,
        "match": match,
        "ind_match": ind,
        "linear": has_linear_resolution(ideal, config.prime, config.vertex_cap),
        "prime": config.prime,
    }
    if betti:
        out["betti"] = betti_table(ideal, config.prime, config.vertex_cap).to_json()
    return out


def cmd_colon_graph(g: Graph, matching_text: str) -> Dict[str, Any]:
    m = Matching.of(g, parse_pairs(matching_text))
    report = colon_graph_report(g, m)
    report["schema"] = cfgmod.REPORT_SCHEMA
    report["graph_id"] = to_graph6(g)
    return report


def cmd_order(g: Graph, s: int) -> Dict[str, Any]:
    cert = find_admissible_order(g, s)
    return {"schema": cfgmod.REPORT_SCHEMA, "graph_id": to_graph6(g), "s": s, **cert.to_json()}


def cmd_classify(g: Graph, config: Config) -> Dict[str, Any]:
    match, mm = matching_number(g)
    ind, im = induced_matching_number(g)
    parts = bipartition(g)
    try:
        ham: Optional[bool] = has_hamiltonian_path(g, cap=config.hamilton_cap) if g.n else False
    except CapExceededError:
        ham = None
    return {
        "schema": cfgmod.REPORT_SCHEMA,
        "graph_id": to_graph6(g),
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "match": match,
        "max_matching": mm.to_json(),
        "ind_match": ind,
        "max_induced_matching": im.to_json(),
        "cw": classify_cameron_walker(g).to_json(),
        "bipartition": None if parts is None else {"X": sorted(parts[0]), "Y": sorted(parts[1])},
        "very_well_covered": is_very_well_covered(g),
        "hamiltonian_path": ham,
        "pendant_triangles": [list(t) for t in pendant_triangles(g)],
    }


def cmd_sweep(stream, checks: Sequence[str], config: Config, out_path: Optional[str] = None) -> Dict[str, int]:
    """Stream reports into a sink; returns the verdict counts."""
    cache = RegularityCache(config.cache_path)
    t0 = time.time()
    with ReportSink(out_path) as sink:
        for report in run_sweep(stream, checks, config, cache=cache if cache.enabled else None):
            sink.emit(report)
        summary = sink.close()["summary"]
    if cache.enabled:
        written = cache.flush()
        logger.info("[sweep] cache: %d new entr(ies) appended to %s", written, cache.path)
    logger.info("[sweep] regularity memo: %s", memo_info())
    total = sum(summary.values())
    print(f"[sweep] {total} report(s) in {time.time() - t0:.1f}s: "
          + " ".join(f"{k}={v}" for k, v in summary.items()), file=sys.stderr)
    write_run_summary(time.strftime("%Y%m%d-%H%M%S"), {"checks": ",".join(checks), "prime": config.prime,
                                                       **summary})
    return summary


# ==============================================================================
# CLI entrypoint
# ==============================================================================

def _graph_from_args(args: argparse.Namespace) -> Graph:
    if args.g6 is not None and args.edges is not None:
        raise Graph6Error("pass either --g6 or --edges, not both")
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.edges is not None:
        return parse_edge_list(args.edges, n=args.n)
    raise Graph6Error("a graph is required: --g6 <record> or --edges u-v,...")


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None, help="field characteristic (env SQFR_PRIME, default 2)")
    common.add_argument("--cap", type=int, default=None, help="regularity vertex cap (env SQFR_CAP, default 14)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for sweeps (env SQFR_JOBS)")
    common.add_argument("--cache", default=None, help="regularity cache file (env SQFR_CACHE)")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled checks (env SQFR_SEED)")
    common.add_argument("-v", "--verbose", action="store_true", help="log at INFO on stderr")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--g6", default=None, help="graph6 record")
    graph.add_argument("--edges", default=None, help='edge list, e.g. "0-1,1-2"')
    graph.add_argument("--n", type=int, default=None, help="vertex count for --edges (default: largest label + 1)")

    p = argparse.ArgumentParser(prog="sqfreg", description="Regularity of squarefree powers of edge ideals")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reg", parents=[common, graph], help="regularity of I(G)^[s]")
    r.add_argument("--s", type=int, default=1)
    r.add_argument("--betti", action="store_true", help="include the graded Betti table")
    r.add_argument("--text", action="store_true", help="print the Betti table as text instead of JSON")

    c = sub.add_parser("colon-graph", parents=[common, graph], help="colon graph of a matching")
    c.add_argument("--matching", required=True, help='matching "u-v,u-v"')

    o = sub.add_parser("order", parents=[common, graph], help="admissible generator ordering")
    o.add_argument("--s", type=int, default=1)

    sub.add_parser("classify", parents=[common, graph], help="matching numbers and graph classes")

    w = sub.add_parser("sweep", parents=[common], help="run checks over graph6 records")
    w.add_argument("input", nargs="?", default="-", help="graph6 file, one record per line ('-' = stdin)")
    w.add_argument("--checks", default="dagger", help="comma-separated check ids or 'all'")
    w.add_argument("--out", default=None, help="JSONL output file (default stdout)")
    return p.parse_args(argv)


def _setup_logging(verbose: bool) -> None:
    root = logging.getLogger("sqfreg")
    # rebind to the current stderr on every call (repeated main() in one process)
    for h in [h for h in root.handlers if getattr(h, "_sqfreg", False)]:
        root.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(levelname)s] %(name)s: %(message)s"))
    handler._sqfreg = True  # type: ignore[attr-defined]
    root.addHandler(handler)
    level = logging.INFO if verbose else getattr(logging, str(cfgmod.log_level()).upper(), logging.WARNING)
    root.setLevel(level)


def _config_from_args(args: argparse.Namespace) -> Config:
    return Config.from_env().override(
        prime=args.prime, vertex_cap=args.cap, jobs=args.jobs, cache_path=args.cache, seed=args.seed,
    ).validate()


def _print_json(obj: Any) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _dispatch(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    if args.command == "sweep":
        checks = parse_checks(args.checks)
        with ExitStack() as stack:
            if args.input == "-":
                stream = sys.stdin
            else:
                try:
                    stream = stack.enter_context(open(args.input, "r", encoding="ascii", errors="replace"))
                except OSError as e:
                    print(f"[sweep] cannot read {args.input}: {e}", file=sys.stderr)
                    return 2
            summary = cmd_sweep(stream, checks, config, out_path=args.out)
        return 1 if summary.get("fail") or summary.get("error") else 0

    g = _graph_from_args(args)
    if args.command == "reg":
        out = cmd_reg(g, args.s, config, betti=args.betti or args.text)
        if args.text:
            table = BettiTable(prime=out["betti"]["prime"],
                               entries=tuple(tuple(e) for e in out["betti"]["entries"]))
            sys.stdout.write(table.render() + "\n")
            return 0
        _print_json(out)
    elif args.command == "colon-graph":
        _print_json(cmd_colon_graph(g, args.matching))
    elif args.command == "order":
        _print_json(cmd_order(g, args.s))
    elif args.command == "classify":
        _print_json(cmd_classify(g, config))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(argv)
    _setup_logging(args.verbose)
    try:
        return _dispatch(args)
    except SqfregError as e:
        code = exit_code_for(e)
        print(f"[{args.command}] {type(e).__name__}: {e}", file=sys.stderr)
        return code
    except KeyboardInterrupt:
        print("Interrupted by user.", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
