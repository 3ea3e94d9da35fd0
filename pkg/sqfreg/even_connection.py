"""
even_connection.py
------------------
Even-connections with respect to an s-fold product of edges and the colon
graph H with I(H) = (I(G)^[s+1] : e_1...e_s).

A witness is a walk p_0 .. p_{2r+1} (r >= 1) whose pairs {p_{2k+1}, p_{2k+2}}
are drawn from the product e_1..e_s, each factor used at most as often as it
occurs. The search is breadth-first over (vertex at an even position, set of
consumed factor indices); neighbours are expanded in ascending order so the
first witness found is the shortest and, among those, the lexicographically
least.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import PreconditionError
from .graph import Edge, Graph, Matching, bits, matching_number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessPath:
    """``assignment[k]`` is the (0-based) index i with {p_{2k+1}, p_{2k+2}} = e_i."""
    vertices: Tuple[int, ...]
    assignment: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.assignment)

    def to_json(self) -> Dict[str, object]:
        return {"path": list(self.vertices), "e": [i + 1 for i in self.assignment]}


def _normalize(g: Graph, edges: Sequence[Sequence[int]]) -> List[Edge]:
    out = []
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise PreconditionError(f"{u}-{v} is not an edge of the graph")
        out.append((u, v) if u < v else (v, u))
    return out


def even_connection_witness(g: Graph, edges: Sequence[Sequence[int]], u: int, v: int) -> Optional[WitnessPath]:
    es = _normalize(g, edges)
    for w in (u, v):
        if not 0 <= w < g.n:
            raise PreconditionError(f"vertex {w} outside 0..{g.n - 1}")

    # factors touching each vertex, (other endpoint, index) ascending
    touching: Dict[int, List[Tuple[int, int]]] = {}
    for i, (a, b) in enumerate(es):
        touching.setdefault(a, []).append((b, i))
        touching.setdefault(b, []).append((a, i))
    for lst in touching.values():
        lst.sort()

    State = Tuple[int, int]
    parent: Dict[State, Optional[Tuple[State, int, int]]] = {(u, 0): None}
    frontier: List[State] = [(u, 0)]
    while frontier:
        for state in frontier:
            x, used = state
            if used and g.has_edge(x, v):
                return _rebuild(parent, state, v)
        nxt: List[State] = []
        for state in frontier:
            x, used = state
            for a in g.neighbors(x):
                last_b = None
                for b, i in touching.get(a, ()):
                    if used >> i & 1 or b == last_b:
                        continue
                    # equal factors are interchangeable; take the lowest unused index
                    last_b = b
                    child = (b, used | (1 << i))
                    if child not in parent:
                        parent[child] = (state, a, i)
                        nxt.append(child)
        frontier = nxt
    return None


def _rebuild(parent, state, v: int) -> WitnessPath:
    tail: List[int] = [v]
    assignment: List[int] = []
    while parent[state] is not None:
        prev, a, i = parent[state]
        tail.append(state[0])
        tail.append(a)
        assignment.append(i)
        state = prev
    tail.append(state[0])
    return WitnessPath(tuple(reversed(tail)), tuple(reversed(assignment)))


def is_valid_even_connection(g: Graph, edges: Sequence[Sequence[int]], u: int, v: int,
                             path: Sequence[int]) -> bool:
    """Re-check the walk conditions directly on a vertex sequence."""
    es = [tuple(sorted((int(a), int(b)))) for a, b in edges]
    if len(path) < 4 or len(path) % 2:
        return False
    if path[0] != u or path[-1] != v:
        return False
    if any(not g.has_edge(path[k], path[k + 1]) for k in range(len(path) - 1)):
        return False
    used: Dict[Tuple[int, ...], int] = {}
    for k in range(1, len(path) - 1, 2):
        pair = tuple(sorted((path[k], path[k + 1])))
        if pair not in es:
            return False
        used[pair] = used.get(pair, 0) + 1
    return all(used[e] <= es.count(e) for e in used)


# =============================================================================
# Colon graph
# =============================================================================

@dataclass(frozen=True)
class ColonGraph:
    graph: Graph
    vertices: Tuple[int, ...]
    witnesses: Tuple[Tuple[Edge, WitnessPath], ...]

    def to_json(self) -> Dict[str, object]:
        return {
            "vertices": list(self.vertices),
            "edges": [[a, b] for a, b in self.graph.edges()],
            "witnesses": {f"{a}-{b}": list(w.vertices) for (a, b), w in self.witnesses},
        }


def _check_colon_input(g: Graph, m: Matching) -> None:
    s = len(m)
    if s < 1:
        raise PreconditionError("colon graph needs a nonempty matching")
    Matching.of(g, m.edges)
    match, _ = matching_number(g)
    if s >= match:
        raise PreconditionError(
            f"matching of size {s} with match(G) = {match}: I(G)^[{s + 1}] is zero"
        )


def build_colon_graph(g: Graph, m: Matching) -> ColonGraph:
    """H on V(G) minus supp(m): edges of G plus even-connected pairs (labels preserved)."""
    _check_colon_input(g, m)
    rest = g.vertex_mask & ~m.support
    verts = tuple(bits(rest))
    edges: List[Edge] = []
    witnesses: List[Tuple[Edge, WitnessPath]] = []
    for k, a in enumerate(verts):
        for b in verts[k + 1:]:
            if g.has_edge(a, b):
                edges.append((a, b))
                continue
            w = even_connection_witness(g, m.edges, a, b)
            if w is not None:
                edges.append((a, b))
                witnesses.append(((a, b), w))
    h = Graph.from_edges(g.n, edges)
    logger.debug("[colon] %s : %s -> %d edge(s), %d via even-connection",
                 g.to_edge_list(), m.to_text(), len(edges), len(witnesses))
    return ColonGraph(graph=h, vertices=verts, witnesses=tuple(witnesses))


def colon_graph(g: Graph, m: Matching) -> Graph:
    return build_colon_graph(g, m).graph


def colon_graph_report(g: Graph, m: Matching) -> Dict[str, object]:
    report = build_colon_graph(g, m).to_json()
    report["matching"] = m.to_json()
    return report
