from __future__ import annotations

import io
import sys
from pathlib import Path

import networkx as nx
import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from oracles import atlas
from sqfreg.errors import Graph6Error
from sqfreg.graph6 import parse_edge_list, parse_graph6, parse_pairs, read_graph6_lines, to_graph6


def test_single_edge():
    g = parse_graph6("A_")
    assert g.n == 2 and g.edges() == [(0, 1)]
    assert to_graph6(g) == "A_"


def test_triangle_and_header():
    g = parse_graph6(b">>graph6<<Bw\n")
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]


def test_codec_matches_networkx():
    for g in atlas(6):
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(G, header=False).strip().decode("ascii")
        assert to_graph6(g) == expected
        back = nx.from_graph6_bytes(expected.encode("ascii"))
        assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()
        assert parse_graph6(expected) == g


@pytest.mark.parametrize("record", [
    "",             # empty
    "A!",           # byte outside 63..126
    "A_x",          # too long for n = 2
    "A`",           # nonzero padding bits
    "`",            # 33 vertices
    "~??",          # multi-byte header
])
def test_malformed_records(record):
    with pytest.raises(Graph6Error):
        parse_graph6(record)


def test_edge_list_parsing():
    g = parse_edge_list("0-1, 1-2 ,2-3")
    assert g.n == 4 and g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert parse_edge_list("0-1", n=4).n == 4
    assert parse_edge_list("").n == 0
    for bad in ("0-0", "a-b", "0:1"):
        with pytest.raises(Graph6Error):
            parse_edge_list(bad)
    with pytest.raises(Graph6Error):
        parse_edge_list("0-5", n=3)


def test_parse_pairs():
    assert parse_pairs("2-3,0-1") == ((2, 3), (0, 1))
    assert parse_pairs("") == ()


def test_read_graph6_lines_skips_blanks_and_header():
    stream = io.StringIO("A_\n\n>>graph6<<Bw\n   \n")
    assert list(read_graph6_lines(stream)) == [(1, "A_"), (3, "Bw")]
