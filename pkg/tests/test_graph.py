from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from oracles import atlas, brute_induced_matching_number, nx_matching_number, random_graphs
from sqfreg.errors import CapExceededError, PreconditionError
from sqfreg.graph import (
    Graph,
    Matching,
    bipartition,
    enumerate_matchings,
    has_hamiltonian_path,
    induced_matching_number,
    is_induced_matching,
    is_very_well_covered,
    matching_number,
    pendant_edges,
    pendant_triangles,
)

C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
P5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
STAR3 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_edges_are_sorted_and_normalized():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 1)])
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.edge_count == 3
    assert g.degree(1) == 2
    assert g.neighbors(2) == [1, 3]


def test_loops_and_out_of_range_rejected():
    with pytest.raises(PreconditionError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(PreconditionError):
        Graph.from_edges(3, [(0, 3)])


def test_delete_vertices_keeps_labels():
    h = C5.delete_vertices([0, 1])
    assert h.n == 5
    assert h.edges() == [(2, 3), (3, 4)]
    assert h.isolated_vertices() == [0, 1]


def test_delete_edge_and_components():
    h = C5.delete_edge(0, 4)
    assert h.edges() == P5.edges()
    assert TWO_K2.components() == [0b0011, 0b1100]
    assert not TWO_K2.is_connected()
    with pytest.raises(PreconditionError):
        P4.delete_edge(0, 3)


@pytest.mark.parametrize("g,match,ind", [
    (C5, 2, 1),
    (P4, 2, 1),
    (P5, 2, 2),
    (K3, 1, 1),
    (TWO_K2, 2, 2),
    (STAR3, 1, 1),
])
def test_matching_numbers_of_small_graphs(g, match, ind):
    m, mm = matching_number(g)
    i, im = induced_matching_number(g)
    assert (m, i) == (match, ind)
    assert len(mm) == m and len(im) == i
    Matching.of(g, mm.edges)            # witness is a genuine matching
    assert is_induced_matching(g, im)


def test_matching_numbers_agree_with_oracles():
    for g in atlas(6):
        assert matching_number(g)[0] == nx_matching_number(g), g.to_edge_list()
        assert induced_matching_number(g)[0] == brute_induced_matching_number(g), g.to_edge_list()


def test_matching_numbers_agree_with_oracles_on_eight_vertices():
    for g in random_graphs(8, 120, seed=11, connected=False):
        m, mm = matching_number(g)
        i, im = induced_matching_number(g)
        assert m == nx_matching_number(g), g.to_edge_list()
        assert i == brute_induced_matching_number(g), g.to_edge_list()
        assert is_induced_matching(g, im) and len(mm) == m


@pytest.mark.slow
def test_matching_numbers_agree_with_oracles_seven_vertices():
    for g in atlas(7):
        assert matching_number(g)[0] == nx_matching_number(g), g.to_edge_list()
        assert induced_matching_number(g)[0] == brute_induced_matching_number(g), g.to_edge_list()


def test_matching_of_rejects_bad_edges():
    with pytest.raises(PreconditionError):
        Matching.of(P4, [(0, 2)])
    with pytest.raises(PreconditionError):
        Matching.of(P4, [(0, 1), (1, 2)])


def test_enumerate_matchings_is_lexicographic():
    ms = enumerate_matchings(C5, 2)
    assert [m.edges for m in ms] == [
        ((0, 1), (2, 3)),
        ((0, 1), (3, 4)),
        ((0, 4), (1, 2)),
        ((0, 4), (2, 3)),
        ((1, 2), (3, 4)),
    ]
    assert enumerate_matchings(C5, 3) == []


def test_bipartition():
    assert bipartition(C5) is None
    assert bipartition(K3) is None
    xs, ys = bipartition(P4)
    assert xs == frozenset({0, 2}) and ys == frozenset({1, 3})


@pytest.mark.parametrize("g,expected", [
    (TWO_K2, True),
    (P4, True),
    (Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), True),
    (C5, False),
    (STAR3, False),
    (Graph.from_edges(3, [(0, 1)]), False),     # isolated vertex
])
def test_very_well_covered(g, expected):
    assert is_very_well_covered(g) is expected


def test_hamiltonian_path():
    assert has_hamiltonian_path(P4)
    assert has_hamiltonian_path(C5)
    assert not has_hamiltonian_path(STAR3)
    assert not has_hamiltonian_path(TWO_K2)
    assert has_hamiltonian_path(Graph.empty(1))
    with pytest.raises(CapExceededError):
        has_hamiltonian_path(C5, cap=4)
    with pytest.raises(PreconditionError):
        has_hamiltonian_path(Graph.empty(0))


def test_pendant_triangles_and_edges():
    assert pendant_triangles(K3) == [(0, 1, 2)]
    kite = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert pendant_triangles(kite) == [(0, 1, 2)]
    assert pendant_triangles(C5) == []
    assert pendant_edges(Graph.from_edges(3, [(0, 1), (1, 2)])) == [(0, 1), (2, 1)]
    assert pendant_edges(Graph.from_edges(2, [(0, 1)])) == [(0, 1)]
    assert pendant_edges(kite) == [(3, 2)]
