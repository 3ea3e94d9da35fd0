from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

import networkx as nx

from sqfreg import order as order_mod
from sqfreg import verify
from sqfreg.config import Config
from sqfreg.errors import ConfigError
from sqfreg.graph import Graph
from sqfreg.reg_cache import RegularityCache
from sqfreg.verify import (
    CHECKS,
    CheckContext,
    check_bipartite_bound,
    check_cameron_walker,
    check_colon_degree_two,
    check_colon_graph_oracle,
    check_cw_matching,
    check_dagger,
    check_ddagger,
    check_field_agreement,
    check_lower_bound,
    check_pendant_edge_colon,
    check_pendant_triangle_colon,
    check_regcol,
    check_admissible_order,
    check_sum_identity,
    check_top_power_linear,
    evaluate_record,
    parse_checks,
    run_sweep,
    summarize,
)

C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
P5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
KITE = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@pytest.fixture(autouse=True)
def _logs_in_tmp(tmp_path, monkeypatch):
    monkeypatch.setenv("SQFR_LOGS_DIR", str(tmp_path / "logs"))


def _verdicts(reports):
    return [(r.s, r.verdict) for r in reports]


def test_dagger_on_five_cycle():
    reports = check_dagger(C5)
    assert _verdicts(reports) == [(1, "pass"), (2, "pass")]
    assert reports[0].computed == {"reg": 3, "match": 2, "bound": 3}
    assert reports[1].computed == {"reg": 4, "match": 2, "bound": 4, "top_linear": True}
    assert reports[0].graph_id == "Dhc"


def test_checks_skip_edgeless_graphs():
    for fn in (check_dagger, check_ddagger, check_bipartite_bound, check_lower_bound):
        (report,) = fn(Graph.empty(3))
        assert report.verdict == "skipped" and report.reason == "no_edges"


def test_ddagger_tags_triggers():
    reports = check_ddagger(C5)
    assert _verdicts(reports) == [(1, "pass"), (2, "pass")]
    assert reports[0].computed["implies_dagger"] is True
    assert reports[0].computed["hamiltonian_path"] is True
    assert reports[0].computed["very_well_covered"] is False


def test_bipartite_bound():
    assert check_bipartite_bound(C5)[0].reason == "non_bipartite"
    reports = check_bipartite_bound(P4)
    assert _verdicts(reports) == [(1, "pass"), (2, "pass")]
    assert reports[1].computed == {"reg": 4, "bound": 4, "X": 2, "Y": 2}


def test_cameron_walker_checks():
    reports = check_cameron_walker(P5)
    assert _verdicts(reports) == [(1, "pass"), (2, "pass")]
    assert [r.computed["linear"] for r in reports] == [False, True]
    assert check_cameron_walker(C5)[0].reason == "not_cameron_walker"

    (report,) = check_cw_matching(TWO_K2)
    assert report.verdict == "pass"
    assert [c["match"] for c in report.computed["components"]] == [1, 1]
    assert check_cw_matching(C5)[0].reason == "non_bipartite"
    assert check_cw_matching(P4)[0].reason == "not_cameron_walker"


def test_lower_bound_and_top_power():
    assert _verdicts(check_lower_bound(C5)) == [(1, "pass"), (2, "pass")]
    assert all(r.computed["witness_induced"] for r in check_lower_bound(C5))
    (top,) = check_top_power_linear(C5)
    assert top.s == 2 and top.verdict == "pass"


def test_field_agreement():
    reports = check_field_agreement(C5)
    assert reports[0].computed == {"regs": {"2": 3, "32003": 3}}
    ctx = CheckContext.standalone(C5, prime=32003)
    assert check_field_agreement(C5, ctx=ctx)[0].computed == {"regs": {"32003": 3, "2": 3}}


def test_pendant_colons():
    assert _verdicts(check_pendant_triangle_colon(KITE)) == [(2, "pass")]
    assert check_pendant_triangle_colon(C5) == []
    assert check_pendant_triangle_colon(K3)[0].reason == "s_out_of_range"
    reports = check_pendant_edge_colon(P4)
    assert [(r.computed["edge"], r.verdict) for r in reports] == [([0, 1], "pass"), ([3, 2], "pass")]
    assert _verdicts(check_sum_identity(KITE)) == [(1, "pass"), (2, "pass")]


def test_colon_checks():
    (report,) = check_colon_degree_two(C5)
    assert report.verdict == "pass"
    assert report.computed == {"instances": 5, "sampled": False}
    assert check_colon_degree_two(K3)[0].reason == "match_below_two"

    (report,) = check_colon_graph_oracle(C5)
    assert report.verdict == "pass" and report.computed["instances"] == 5


def test_sampling_is_seeded():
    def sampled(seed):
        ctx = CheckContext.standalone(C5, colon_sample=2, seed=seed)
        return check_colon_degree_two(C5, ctx=ctx)[0].computed

    assert sampled(3) == {"instances": 2, "sampled": True}
    a = CheckContext.standalone(C5, seed=3).rng("x").integers(0, 1 << 30, size=4).tolist()
    b = CheckContext.standalone(C5, seed=3).rng("x").integers(0, 1 << 30, size=4).tolist()
    assert a == b


def test_regcol_and_order_checks():
    (report,) = check_regcol(C5)
    assert report.verdict == "pass" and report.computed["slack"] == 0
    (report,) = check_admissible_order(P4)
    assert report.verdict == "pass"
    assert report.computed == {"generators": 3, "reverified": True, "case_two": True, "admissible_count": 6}
    assert check_admissible_order(K3)[0].reason == "match_below_two"


def test_parse_checks():
    assert parse_checks(None) == ("dagger",)
    assert parse_checks("cw, dagger,cw") == ("cw", "dagger")
    assert parse_checks("dagger,all") == tuple(CHECKS)
    with pytest.raises(ConfigError):
        parse_checks("dagger,nope")


def test_evaluate_record_reports_parse_errors():
    reports, fresh = evaluate_record(7, "bad!", ("dagger",), Config())
    assert fresh == {}
    (report,) = reports
    assert report.check == "parse" and report.verdict == "error" and report.reason == "graph6"
    assert report.computed["line"] == 7


def test_sweep_keeps_input_order():
    reports = list(run_sweep(["A_", "bad!", "Bw"], ("dagger",), Config()))
    assert [(r.graph_id, r.verdict) for r in reports] == [("A_", "pass"), ("bad!", "error"), ("Bw", "pass")]
    assert summarize(reports) == {"summary": {"pass": 2, "fail": 0, "skipped": 0, "error": 1}}
    assert list(run_sweep([], ("dagger",), Config())) == []


def _small_graph6_records(max_n, connected=False):
    out = []
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() > max_n:
            break
        if connected and (G.number_of_nodes() < 2 or not nx.is_connected(G)):
            continue
        out.append(nx.to_graph6_bytes(G, header=False).strip().decode("ascii"))
    return out


def test_parallel_sweep_matches_serial():
    lines = _small_graph6_records(5)
    checks = ("dagger", "lower", "colon_degree")
    serial = [r.to_json() for r in run_sweep(lines, checks, Config(jobs=1))]
    parallel = [r.to_json() for r in run_sweep(lines, checks, Config(jobs=2))]
    assert serial == parallel


def test_warm_cache_gives_identical_reports(tmp_path):
    lines = _small_graph6_records(5)
    path = str(tmp_path / "reg.jsonl")
    cold_cache = RegularityCache(path)
    cold = [r.to_json() for r in run_sweep(lines, ("dagger",), Config(), cache=cold_cache)]
    assert cold_cache.flush() > 0

    warm_cache = RegularityCache(path)
    warm = [r.to_json() for r in run_sweep(lines, ("dagger",), Config(), cache=warm_cache)]
    assert warm == cold
    assert warm_cache.flush() == 0


@pytest.mark.slow
def test_all_checks_pass_on_small_graphs():
    reports = list(run_sweep(_small_graph6_records(6), parse_checks("all"), Config(jobs=2)))
    bad = [r.to_json() for r in reports if r.verdict in ("fail", "error")]
    assert bad == []


@pytest.mark.slow
def test_all_checks_pass_on_connected_seven_vertex_graphs():
    records = _small_graph6_records(7, connected=True)
    assert len(records) == 995
    reports = list(run_sweep(records, parse_checks("all"), Config(jobs=4)))
    bad = [r.to_json() for r in reports if r.verdict in ("fail", "error")]
    assert bad == []


def _spy_known(monkeypatch):
    seen = []
    original = verify.evaluate_record

    def spy(lineno, record, checks, config, known=None):
        seen.append(dict(known))
        return original(lineno, record, checks, config, known)

    monkeypatch.setattr(verify, "evaluate_record", spy)
    return seen


def test_sweep_without_cache_carries_nothing_between_records(monkeypatch):
    seen = _spy_known(monkeypatch)
    reports = list(run_sweep(["A_", "Bw", "Bw"], ("dagger",), Config()))
    assert [r.verdict for r in reports] == ["pass", "pass", "pass"]
    assert seen == [{}, {}, {}]


def test_sweep_with_cache_reuses_earlier_records(tmp_path, monkeypatch):
    seen = _spy_known(monkeypatch)
    cache = RegularityCache(str(tmp_path / "reg.jsonl"))
    list(run_sweep(["A_", "Bw", "Bw"], ("dagger",), Config(), cache=cache))
    assert seen == [{}, {"A_|1|2": 2}, {"A_|1|2": 2, "Bw|1|2": 2}]


def _events(tmp_path):
    path = tmp_path / "logs" / "diagnostics" / "events.jsonl"
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]


def test_exhausted_order_search_is_logged(tmp_path, monkeypatch):
    monkeypatch.setattr(order_mod._Level, "placeable", lambda self, placed, x: False)
    reports = check_admissible_order(P5)
    assert [(r.s, r.verdict) for r in reports] == [(1, "fail")]
    assert reports[0].witness == {"edges": P5.to_edge_list(), "n": 5, "s": 1}

    (event,) = _events(tmp_path)
    assert event["event"] == "order_exhausted"
    assert (event["edges"], event["n"], event["s"]) == (P5.to_edge_list(), 5, 1)


def test_field_disagreement_is_logged(tmp_path, monkeypatch):
    monkeypatch.setattr(verify, "regularity", lambda ideal, p, cap: 4 if p == 2 else 3)
    reports = check_field_agreement(P4)
    assert [(r.s, r.verdict) for r in reports] == [(1, "fail"), (2, "fail")]
    assert reports[0].witness == {"regs": {"2": 4, "32003": 3}}

    events = _events(tmp_path)
    assert [e["event"] for e in events] == ["field_disagreement"] * 2
    assert [(e["s"], e["primes"], e["regs"]) for e in events] == [(1, [2, 32003], [4, 3]), (2, [2, 32003], [4, 3])]
