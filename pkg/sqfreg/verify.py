"""
verify.py
---------
Checkers for the regularity bounds and the structural identities behind them,
plus the batch sweep that runs them over a graph6 stream.

Every checker takes a graph and returns a list of ``Report`` objects (one per
power s, or one per instance family). ``fail`` always carries a witness;
instances beyond the configured caps come back as ``skipped`` with a
machine-readable reason so that sweep summaries cannot hide them.

Regularity values go through ``RegCalc``: a per-graph front end to
``regularity.regularity`` that consults the advisory on-disk cache snapshot and
records fresh values so the caller can persist them in input order.
"""
from __future__ import annotations

import itertools
import logging
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from . import config as cfgmod
from .cameron_walker import classify_cameron_walker
from .config import Config
from .errors import CapExceededError, ConfigError, Graph6Error, SqfregError, TheoremViolation
from .even_connection import build_colon_graph, is_valid_even_connection
from .graph import (
    Graph,
    Matching,
    bipartition,
    bits,
    has_hamiltonian_path,
    induced_matching_number,
    is_induced_matching,
    is_very_well_covered,
    iter_matchings,
    matching_number,
    pendant_edges,
    pendant_triangles,
    popcount,
)
from .graph6 import parse_graph6, read_graph6_lines, to_graph6
from .ideal import Ideal, add_and_minimalize, colon_by_monomial, edge_ideal, ideal_equals, render_monomial, squarefree_power
from .order import case_two_consistent, check_regcol_bound, count_admissible_orders, find_admissible_order, verify_order
from .reg_cache import cache_key
from .regularity import has_linear_resolution, regularity
from .report import VERDICTS, Report, verdict_of
from .util.diagnostics import record_event

logger = logging.getLogger(__name__)


# =============================================================================
# Shared context
# =============================================================================

@dataclass
class RegCalc:
    """reg(I(G)^[s]) over GF(p), answered from ``known`` when possible."""
    prime: int
    cap: int
    known: Mapping[str, int] = field(default_factory=dict)
    fresh: Dict[str, int] = field(default_factory=dict)

    def __call__(self, g: Graph, s: int, p: Optional[int] = None) -> int:
        p = self.prime if p is None else p
        key = cache_key(to_graph6(g), s, p)
        hit = self.fresh.get(key)
        if hit is None:
            hit = self.known.get(key)
        if hit is not None:
            return hit
        reg = regularity(squarefree_power(edge_ideal(g), s), p, self.cap)
        self.fresh[key] = reg
        return reg


@dataclass
class CheckContext:
    g: Graph
    graph_id: str
    config: Config
    reg: RegCalc

    @classmethod
    def standalone(cls, g: Graph, config: Optional[Config] = None, **overrides) -> "CheckContext":
        config = (config or Config()).override(**overrides)
        return cls(g=g, graph_id=to_graph6(g), config=config,
                   reg=RegCalc(config.prime, config.vertex_cap))

    @cached_property
    def match(self) -> Tuple[int, Matching]:
        return matching_number(self.g)

    @cached_property
    def ind_match(self) -> Tuple[int, Matching]:
        return induced_matching_number(self.g)

    @cached_property
    def edge_ideal(self) -> Ideal:
        return edge_ideal(self.g)

    @cached_property
    def _powers(self) -> Dict[int, Ideal]:
        return {}

    def power(self, s: int) -> Ideal:
        hit = self._powers.get(s)
        if hit is None:
            hit = self._powers[s] = squarefree_power(self.edge_ideal, s)
        return hit

    def rng(self, salt: str) -> np.random.Generator:
        """Seeded per (seed, graph, check) so results do not depend on scheduling."""
        return np.random.default_rng([self.config.seed, zlib.crc32(f"{self.graph_id}|{salt}".encode())])

    def report(self, check: str, verdict: str, **kw) -> Report:
        return Report(graph_id=self.graph_id, check=check, verdict=verdict, **kw)

    def skipped(self, check: str, reason: str, s: Optional[int] = None, **computed) -> Report:
        return self.report(check, "skipped", s=s, reason=reason, computed=computed)


def _ctx(g: Graph, ctx: Optional[CheckContext], **overrides) -> CheckContext:
    return ctx if ctx is not None else CheckContext.standalone(g, **overrides)


def _sample(ctx: CheckContext, salt: str, items: Sequence, limit: int) -> Tuple[List, bool]:
    """All of ``items`` up to ``limit``, else a seeded sample of ``limit`` in original order."""
    if len(items) <= limit:
        return list(items), False
    idx = np.sort(ctx.rng(salt).choice(len(items), size=limit, replace=False))
    return [items[int(i)] for i in idx], True


def _per_power(ctx: CheckContext, check: str, powers: Iterable[int],
               body: Callable[[int], Report]) -> List[Report]:
    out = []
    for s in powers:
        try:
            out.append(body(s))
        except CapExceededError as e:
            out.append(ctx.skipped(check, "cap_exceeded", s=s, size=e.size, cap=e.cap))
    return out


def _needs_edges(ctx: CheckContext, check: str) -> Optional[List[Report]]:
    if ctx.g.edge_count == 0:
        return [ctx.skipped(check, "no_edges")]
    return None


# =============================================================================
# Regularity bounds
# =============================================================================

def check_dagger(g: Graph, p: int = 2, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """reg(I^[s]) <= match + s for 1 <= s <= match; at s = match also reg = 2 * match."""
    ctx = _ctx(g, ctx, prime=p)
    early = _needs_edges(ctx, "dagger")
    if early:
        return early
    match, mm = ctx.match

    def body(s: int) -> Report:
        reg = ctx.reg(g, s)
        bound = match + s
        ok = reg <= bound
        computed = {"reg": reg, "match": match, "bound": bound}
        if s == match:
            computed["top_linear"] = reg == 2 * match
            ok = ok and reg == 2 * match
        witness = None if ok else {"max_matching": mm.to_json(), "reg": reg}
        return ctx.report("dagger", verdict_of(ok), s=s, computed=computed, witness=witness)

    return _per_power(ctx, "dagger", range(1, match + 1), body)


def _ddagger_triggers(ctx: CheckContext) -> Dict[str, Optional[bool]]:
    g = ctx.g
    try:
        ham: Optional[bool] = has_hamiltonian_path(g, cap=ctx.config.hamilton_cap)
    except CapExceededError:
        ham = None
    return {"very_well_covered": is_very_well_covered(g), "hamiltonian_path": ham}


def check_ddagger(g: Graph, p: int = 2, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """reg(I^[s]) <= s + floor(n/2); tags graphs whose matching of size floor(n/2) makes this imply (dagger)."""
    ctx = _ctx(g, ctx, prime=p)
    early = _needs_edges(ctx, "ddagger")
    if early:
        return early
    match, mm = ctx.match
    half = g.n // 2
    implies = match == half
    triggers = _ddagger_triggers(ctx)
    out: List[Report] = []
    if any(triggers.values()) and not implies:
        payload = {"edges": g.to_edge_list(), "n": g.n, "match": match, **triggers}
        record_event("ddagger_trigger_without_perfect_matching", **payload)
        out.append(ctx.report("ddagger", "fail", computed={"match": match, "half": half, **triggers},
                              witness={"max_matching": mm.to_json()}))

    def body(s: int) -> Report:
        reg = ctx.reg(g, s)
        bound = s + half
        ok = reg <= bound
        return ctx.report("ddagger", verdict_of(ok), s=s,
                          computed={"reg": reg, "bound": bound, "implies_dagger": implies, **triggers},
                          witness=None if ok else {"reg": reg, "n": g.n})

    return out + _per_power(ctx, "ddagger", range(1, match + 1), body)


def check_bipartite_bound(g: Graph, p: int = 2, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    ctx = _ctx(g, ctx, prime=p)
    early = _needs_edges(ctx, "bipartite")
    if early:
        return early
    parts = bipartition(g)
    if parts is None:
        return [ctx.skipped("bipartite", "non_bipartite")]
    xs, ys = parts
    side = min(len(xs), len(ys))
    match, _ = ctx.match

    def body(s: int) -> Report:
        reg = ctx.reg(g, s)
        ok = reg <= side + s
        return ctx.report("bipartite", verdict_of(ok), s=s,
                          computed={"reg": reg, "bound": side + s, "X": len(xs), "Y": len(ys)},
                          witness=None if ok else {"X": sorted(xs), "Y": sorted(ys), "reg": reg})

    return _per_power(ctx, "bipartite", range(1, match + 1), body)


def check_cameron_walker(g: Graph, p: int = 2, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """Cameron-Walker graphs: reg(I^[s]) = match + s, and I^[s] is linear iff s = match."""
    ctx = _ctx(g, ctx, prime=p)
    early = _needs_edges(ctx, "cw")
    if early:
        return early
    cls = classify_cameron_walker(g)
    if not cls.is_cameron_walker:
        return [ctx.skipped("cw", "not_cameron_walker")]
    match = cls.match

    def body(s: int) -> Report:
        reg = ctx.reg(g, s)
        linear = has_linear_resolution(ctx.power(s), ctx.config.prime, ctx.config.vertex_cap)
        ok = reg == match + s and linear == (s == match)
        return ctx.report("cw", verdict_of(ok), s=s,
                          computed={"reg": reg, "match": match, "expected": match + s,
                                    "linear": linear, "kind": cls.kind},
                          witness=None if ok else {"classification": cls.to_json(), "reg": reg})

    return _per_power(ctx, "cw", range(1, match + 1), body)


def check_cw_matching(g: Graph, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """Bipartite Cameron-Walker graphs: match = min(|X|, |Y|) on every non-trivial component."""
    ctx = _ctx(g, ctx)
    early = _needs_edges(ctx, "cw_match")
    if early:
        return early
    if bipartition(g) is None:
        return [ctx.skipped("cw_match", "non_bipartite")]
    if not classify_cameron_walker(g).is_cameron_walker:
        return [ctx.skipped("cw_match", "not_cameron_walker")]
    rows = []
    ok = True
    for comp in g.components():
        if popcount(comp) < 2:
            continue
        h = g.induced(comp)
        xs, ys = bipartition(h)
        xs, ys = [v for v in xs if comp >> v & 1], [v for v in ys if comp >> v & 1]
        m, _ = matching_number(h)
        rows.append({"vertices": list(bits(comp)), "match": m, "X": len(xs), "Y": len(ys)})
        ok = ok and m == min(len(xs), len(ys))
    return [ctx.report("cw_match", verdict_of(ok), computed={"components": rows},
                       witness=None if ok else {"components": rows})]


def check_lower_bound(g: Graph, p: int = 2, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    ctx = _ctx(g, ctx, prime=p)
    early = _needs_edges(ctx, "lower")
    if early:
        return early
    match, _ = ctx.match
    ind, im = ctx.ind_match
    induced = is_induced_matching(g, im)

    def body(s: int) -> Report:
        reg = ctx.reg(g, s)
        ok = induced and reg >= ind + s
        return ctx.report("lower", verdict_of(ok), s=s,
                          computed={"reg": reg, "ind_match": ind, "bound": ind + s, "witness_induced": induced},
                          witness=None if ok else {"induced_matching": im.to_json(), "reg": reg})

    return _per_power(ctx, "lower", range(1, match + 1), body)


def check_top_power_linear(g: Graph, p: int = 2, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """I^[match] has a linear resolution: reg = 2 * match."""
    ctx = _ctx(g, ctx, prime=p)
    early = _needs_edges(ctx, "top_linear")
    if early:
        return early
    match, mm = ctx.match

    def body(s: int) -> Report:
        reg = ctx.reg(g, s)
        ok = reg == 2 * s
        return ctx.report("top_linear", verdict_of(ok), s=s, computed={"reg": reg, "expected": 2 * s},
                          witness=None if ok else {"max_matching": mm.to_json(), "reg": reg})

    return _per_power(ctx, "top_linear", [match], body)


def check_field_agreement(g: Graph, p: int = 2, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """Regularity over the configured prime and over a second, large prime coincide."""
    ctx = _ctx(g, ctx, prime=p)
    early = _needs_edges(ctx, "field")
    if early:
        return early
    p1 = ctx.config.prime
    p2 = cfgmod.CHECK_PRIME if p1 != cfgmod.CHECK_PRIME else 2
    match, _ = ctx.match

    def body(s: int) -> Report:
        r1, r2 = ctx.reg(g, s, p1), ctx.reg(g, s, p2)
        ok = r1 == r2
        if not ok:
            record_event("field_disagreement", edges=g.to_edge_list(), s=s, primes=[p1, p2], regs=[r1, r2])
            logger.error("[field] reg differs over GF(%d) and GF(%d) for %s at s=%d", p1, p2, ctx.graph_id, s)
        regs = {str(p1): r1, str(p2): r2}
        return ctx.report("field", verdict_of(ok), s=s, computed={"regs": regs},
                          witness=None if ok else {"regs": regs})

    return _per_power(ctx, "field", range(1, match + 1), body)


# =============================================================================
# Colon identities
# =============================================================================

def _ideal_diff(a, b) -> Dict[str, List[str]]:
    return {"left": [render_monomial(m) for m in a.gens], "right": [render_monomial(m) for m in b.gens]}


def check_pendant_triangle_colon(g: Graph, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """(I(G)^[s] : xy) = I(G minus {x, y})^[s-1] for pendant triangles with deg x = deg y = 2."""
    ctx = _ctx(g, ctx)
    tris = pendant_triangles(g)
    if not tris:
        return []
    match, _ = ctx.match
    if match < 2:
        return [ctx.skipped("pendant_colon", "s_out_of_range", match=match)]
    out = []
    for x, y, z in tris:
        h = g.delete_vertices([x, y])
        xy = (1 << x) | (1 << y)
        for s in range(2, match + 1):
            left = colon_by_monomial(ctx.power(s), xy)
            right = squarefree_power(edge_ideal(h), s - 1)
            ok = ideal_equals(left, right)
            out.append(ctx.report("pendant_colon", verdict_of(ok), s=s,
                                  computed={"triangle": [x, y, z]},
                                  witness=None if ok else _ideal_diff(left, right)))
    return out


def check_pendant_edge_colon(g: Graph, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """(I(G)^[s] : xz) = I(G minus {x, z})^[s-1] for pendant edges xz with deg x = 1."""
    ctx = _ctx(g, ctx)
    edges = pendant_edges(g)
    if not edges:
        return []
    match, _ = ctx.match
    if match < 2:
        return [ctx.skipped("pendant_edge_colon", "s_out_of_range", match=match)]
    out = []
    for x, z in edges:
        h = g.delete_vertices([x, z])
        xz = (1 << x) | (1 << z)
        for s in range(2, match + 1):
            left = colon_by_monomial(ctx.power(s), xz)
            right = squarefree_power(edge_ideal(h), s - 1)
            ok = ideal_equals(left, right)
            out.append(ctx.report("pendant_edge_colon", verdict_of(ok), s=s,
                                  computed={"edge": [x, z]},
                                  witness=None if ok else _ideal_diff(left, right)))
    return out


def check_sum_identity(g: Graph, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """I(G)^[s] + (xy) = I(G - xy)^[s] + (xy) for pendant triangles."""
    ctx = _ctx(g, ctx)
    tris = pendant_triangles(g)
    if not tris:
        return []
    match, _ = ctx.match
    out = []
    for x, y, z in tris:
        h = g.delete_edge(x, y)
        xy = (1 << x) | (1 << y)
        for s in range(1, match + 1):
            left = add_and_minimalize(ctx.power(s), [xy])
            right = add_and_minimalize(squarefree_power(edge_ideal(h), s), [xy])
            ok = ideal_equals(left, right)
            out.append(ctx.report("sum_identity", verdict_of(ok), s=s,
                                  computed={"triangle": [x, y, z]},
                                  witness=None if ok else _ideal_diff(left, right)))
    return out


def check_colon_degree_two(g: Graph, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """Every minimal generator of (I^[s+1] : u), u in G(I^[s]), has degree 2."""
    ctx = _ctx(g, ctx)
    match, _ = ctx.match
    if match < 2:
        return [ctx.skipped("colon_degree", "match_below_two", match=match)]
    out = []
    for s in range(1, match):
        gens, sampled = _sample(ctx, f"colon_degree|{s}", ctx.power(s).gens, ctx.config.colon_sample)
        upper = ctx.power(s + 1)
        bad = None
        for u in gens:
            colon = colon_by_monomial(upper, u)
            if any(popcount(m) != 2 for m in colon.gens):
                bad = {"u": render_monomial(u), "generators": [render_monomial(m) for m in colon.gens]}
                break
        out.append(ctx.report("colon_degree", verdict_of(bad is None), s=s,
                              computed={"instances": len(gens), "sampled": sampled}, witness=bad))
    return out


def check_colon_graph_oracle(g: Graph, seed: int = 0, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """I(colon graph) equals the brute-force colon, witnesses re-validate, bipartiteness survives."""
    ctx = _ctx(g, ctx, seed=seed)
    match, _ = ctx.match
    top = min(match - 1, ctx.config.colon_oracle_max_s)
    if top < 1:
        return [ctx.skipped("colon_graph", "match_below_two", match=match)]
    parts = bipartition(g)
    out = []
    for s in range(1, top + 1):
        matchings, sampled = _sample(ctx, f"colon_graph|{s}", list(iter_matchings(g, s)),
                                     ctx.config.oracle_sample)
        upper = ctx.power(s + 1)
        bad = None
        for m in matchings:
            cg = build_colon_graph(g, m)
            expected = colon_by_monomial(upper, m.support)
            got = edge_ideal(cg.graph)
            if not ideal_equals(got, expected):
                bad = {"matching": m.to_json(), **_ideal_diff(got, expected)}
                break
            invalid = [list(w.vertices) for (a, b), w in cg.witnesses
                       if not is_valid_even_connection(g, m.edges, a, b, w.vertices)]
            if invalid:
                bad = {"matching": m.to_json(), "invalid_witnesses": invalid}
                break
            if parts is not None:
                xs, _ = parts
                same_side = [[a, b] for a, b in cg.graph.edges() if (a in xs) == (b in xs)]
                if same_side:
                    bad = {"matching": m.to_json(), "same_side_edges": same_side}
                    break
        out.append(ctx.report("colon_graph", verdict_of(bad is None), s=s,
                              computed={"instances": len(matchings), "sampled": sampled}, witness=bad))
    return out


# =============================================================================
# Orderings and the colon recursion bound
# =============================================================================

def check_regcol(g: Graph, p: int = 2, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    ctx = _ctx(g, ctx, prime=p)
    match, _ = ctx.match
    if match < 2:
        return [ctx.skipped("regcol", "match_below_two", match=match)]
    return [check_regcol_bound(g, s, ctx.config.prime, ctx.config.vertex_cap,
                               graph_id=ctx.graph_id, reg_of=ctx.reg)
            for s in range(1, match)]


def check_admissible_order(g: Graph, seed: int = 0, *, ctx: Optional[CheckContext] = None) -> List[Report]:
    """An admissible ordering exists at every level s <= match - 1 and its certificate re-verifies."""
    ctx = _ctx(g, ctx, seed=seed)
    match, _ = ctx.match
    if match < 2:
        return [ctx.skipped("order", "match_below_two", match=match)]
    out = []
    for s in range(1, match):
        try:
            cert = find_admissible_order(g, s)
        except TheoremViolation as e:
            out.append(ctx.report("order", "fail", s=s, computed={}, witness=e.payload))
            continue
        reverified = verify_order(g, s, cert.ordering) is not None
        case_two = case_two_consistent(g, s, cert)
        computed = {"generators": len(cert.ordering), "reverified": reverified, "case_two": case_two}
        if len(cert.ordering) <= ctx.config.order_count_max:
            computed["admissible_count"] = count_admissible_orders(g, s, ctx.config.order_count_max)
        ok = reverified and case_two
        out.append(ctx.report("order", verdict_of(ok), s=s, computed=computed,
                              witness=None if ok else cert.to_json()))
    return out


# =============================================================================
# Registry and sweep
# =============================================================================

CheckFn = Callable[..., List[Report]]

CHECKS: Dict[str, CheckFn] = {
    "dagger": check_dagger,
    "ddagger": check_ddagger,
    "bipartite": check_bipartite_bound,
    "cw": check_cameron_walker,
    "cw_match": check_cw_matching,
    "lower": check_lower_bound,
    "pendant_colon": check_pendant_triangle_colon,
    "pendant_edge_colon": check_pendant_edge_colon,
    "sum_identity": check_sum_identity,
    "colon_degree": check_colon_degree_two,
    "colon_graph": check_colon_graph_oracle,
    "regcol": check_regcol,
    "order": check_admissible_order,
    "top_linear": check_top_power_linear,
    "field": check_field_agreement,
}


def parse_checks(text: Optional[str]) -> Tuple[str, ...]:
    """``"dagger,cw"`` -> ("dagger", "cw"); ``"all"`` selects every check in registry order."""
    names = [c.strip() for c in (text or "dagger").split(",") if c.strip()]
    if "all" in names:
        return tuple(CHECKS)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ConfigError(f"unknown check id(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}, all")
    return tuple(dict.fromkeys(names))


_KNOWN: Mapping[str, int] = {}


def _init_worker(known: Mapping[str, int]) -> None:
    global _KNOWN
    _KNOWN = known


def evaluate_record(lineno: int, record: str, checks: Sequence[str], config: Config,
                    known: Optional[Mapping[str, int]] = None) -> Tuple[List[Report], Dict[str, int]]:
    """All selected checks on one graph6 record; returns the reports and freshly computed regularities."""
    known = _KNOWN if known is None else known
    try:
        g = parse_graph6(record)
    except Graph6Error as e:
        return [Report(graph_id=record, check="parse", verdict="error", reason="graph6",
                       computed={"line": lineno, "message": str(e)})], {}
    reg = RegCalc(config.prime, config.vertex_cap, known)
    ctx = CheckContext(g=g, graph_id=record, config=config, reg=reg)
    reports: List[Report] = []
    for name in checks:
        try:
            reports.extend(CHECKS[name](g, ctx=ctx))
        except SqfregError as e:
            logger.error("[sweep] %s on %s raised %s: %s", name, record, type(e).__name__, e)
            reports.append(ctx.report(name, "error", reason=type(e).__name__,
                                      computed={"line": lineno, "message": str(e)}))
    return reports, reg.fresh


def _evaluate_task(task: Tuple[int, str, Tuple[str, ...], Config]) -> Tuple[List[Report], Dict[str, int]]:
    return evaluate_record(*task)


def run_sweep(lines: Iterable[str], checks: Sequence[str], config: Config,
              cache=None) -> Iterator[Report]:
    """Reports in input order; with ``config.jobs > 1`` graphs are evaluated in worker processes.

    ``cache`` (a ``RegularityCache``) is consulted through a snapshot and fed the
    fresh values in input order.
    """
    checks = tuple(checks)
    known: Dict[str, int] = cache.snapshot() if cache is not None else {}
    tasks = ((lineno, rec, checks, config) for lineno, rec in read_graph6_lines(lines))

    def absorb(fresh: Dict[str, int]) -> None:
        # without a cache nothing outlives its record
        if cache is not None:
            known.update(fresh)
            cache.merge(sorted(fresh.items()))

    if config.jobs <= 1:
        for lineno, rec, chk, cfg in tasks:
            reports, fresh = evaluate_record(lineno, rec, chk, cfg, known)
            absorb(fresh)
            yield from reports
        return

    batch_size = config.jobs * 16
    with ProcessPoolExecutor(max_workers=config.jobs, initializer=_init_worker, initargs=(dict(known),)) as pool:
        while True:
            batch = list(itertools.islice(tasks, batch_size))
            if not batch:
                break
            for reports, fresh in pool.map(_evaluate_task, batch):
                absorb(fresh)
                yield from reports


def summarize(reports: Iterable[Report]) -> Dict[str, Dict[str, int]]:
    counts = {v: 0 for v in VERDICTS}
    for r in reports:
        counts[r.verdict] += 1
    return {"summary": counts}
