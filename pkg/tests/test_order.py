from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from oracles import atlas
from sqfreg.errors import CapExceededError, PreconditionError
from sqfreg.graph import Graph, matching_number
from sqfreg.ideal import monomial
from sqfreg.order import (
    OrderViolation,
    case_two_consistent,
    check_order,
    check_regcol_bound,
    count_admissible_orders,
    find_admissible_order,
    verify_order,
)

C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
# two paths of length two plus a separate edge
FORK = Graph.from_edges(8, [(0, 1), (0, 4), (2, 3), (2, 5), (6, 7)])


def test_path_order_and_certificate():
    cert = find_admissible_order(P4, 1)
    assert cert.ordering == (0b0011, 0b0110, 0b1100)
    assert cert.to_json() == {
        "ordering": ["x0*x1", "x1*x2", "x2*x3"],
        "pairs": [
            {"j": 1, "i": 2, "case": "ii", "r": 1, "var": "x0"},
            {"j": 1, "i": 3, "case": "i", "r": None, "var": None},
            {"j": 2, "i": 3, "case": "ii", "r": 2, "var": "x1"},
        ],
    }
    assert case_two_consistent(P4, 1, cert)


def test_every_path_order_is_admissible():
    assert count_admissible_orders(P4, 1) == 6
    assert verify_order(P4, 1, [0b0110, 0b0011, 0b1100]) is not None


def test_violation_is_reported():
    first = monomial([0, 2, 4, 5])        # x0x4 * x2x5
    second = monomial([0, 1, 2, 3])       # x0x1 * x2x3
    rest = [monomial(v) for v in ([0, 1, 2, 5], [0, 1, 6, 7], [0, 2, 3, 4],
                                  [0, 4, 6, 7], [2, 3, 6, 7], [2, 5, 6, 7])]
    cert, violation = check_order(FORK, 2, [first, second, *rest])
    assert cert is None
    assert violation == OrderViolation(j=1, i=2)
    assert verify_order(FORK, 2, [first, second, *rest]) is None


def test_search_finds_an_order_when_some_fail():
    cert = find_admissible_order(FORK, 2)
    assert len(cert.ordering) == 8
    assert verify_order(FORK, 2, cert.ordering) is not None
    assert case_two_consistent(FORK, 2, cert)
    with pytest.raises(CapExceededError):
        count_admissible_orders(FORK, 2)


def test_bad_inputs():
    with pytest.raises(PreconditionError):
        find_admissible_order(K3, 1)              # match(K3) = 1
    with pytest.raises(PreconditionError):
        check_order(P4, 1, [0b0011, 0b0110])      # not a permutation
    with pytest.raises(PreconditionError):
        check_order(P4, 1, [0b0011, 0b0011, 0b1100])


def test_orders_exist_for_small_graphs():
    for g in atlas(6, connected=True):
        match, _ = matching_number(g)
        for s in range(1, match):
            cert = find_admissible_order(g, s)
            assert verify_order(g, s, cert.ordering) is not None


@pytest.mark.parametrize("g", [C5, P4])
def test_regcol_bound_on_small_graphs(g):
    report = check_regcol_bound(g, 1, 2, graph_id="x")
    assert report.verdict == "pass"
    assert report.check == "regcol"
    assert report.computed["left"] == 4
    assert report.computed["right"] == 4
    assert report.computed["slack"] == 0


def test_regcol_bound_with_injected_regularity():
    calls = []

    def reg_of(h, t):
        calls.append(t)
        return 2 * t

    report = check_regcol_bound(C5, 1, 2, reg_of=reg_of)
    assert report.computed == {"left": 4, "right": 4, "slack": 0, "reg_level_s": 2}
    # left, level s and one colon graph per generator of I(C5)
    assert calls == [2, 1] + [1] * 5


def test_regcol_bound_skips_over_cap():
    report = check_regcol_bound(C5, 1, 2, cap=3)
    assert report.verdict == "skipped"
    assert report.reason == "cap_exceeded"
    assert report.computed == {"size": 5, "cap": 3}
    with pytest.raises(PreconditionError):
        check_regcol_bound(C5, 2, 2)
