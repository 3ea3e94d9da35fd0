"""
cameron_walker.py
-----------------
Recognition of Cameron-Walker graphs (``match(G) == ind-match(G)``) two ways:

* definitionally, by comparing the two matching numbers;
* structurally, per connected component: a star, a star triangle (triangles
  sharing one apex), or a connected bipartite core H = X u Y with at least one
  pendant edge on every X-vertex and optional pendant triangles on Y-vertices.

The two must agree; a disagreement raises ``InvariantError`` and is logged as a
diagnostics event.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Tuple

from .errors import InvariantError
from .graph import Graph, bits, induced_matching_number, matching_number, popcount
from .util.diagnostics import record_event

logger = logging.getLogger(__name__)

Kind = Literal["not-CW", "star", "star-triangle", "bipartite-with-pendants", "disconnected-CW"]
ComponentKind = Literal["not-CW", "star", "star-triangle", "bipartite-with-pendants"]


@dataclass(frozen=True)
class BipartiteCore:
    """The core H of a bipartite-with-pendants component."""
    xs: Tuple[int, ...]
    ys: Tuple[int, ...]
    pendants: Tuple[Tuple[int, Tuple[int, ...]], ...]      # x -> its pendant leaves
    triangles: Tuple[Tuple[int, int, int], ...]            # (a, b, y) with y in Y

    def to_json(self) -> Dict[str, object]:
        return {
            "X": list(self.xs),
            "Y": list(self.ys),
            "pendants": {str(x): list(leaves) for x, leaves in self.pendants},
            "triangles": [list(t) for t in self.triangles],
        }


@dataclass(frozen=True)
class ComponentShape:
    vertices: Tuple[int, ...]
    kind: ComponentKind
    core: Optional[BipartiteCore] = None


@dataclass(frozen=True)
class CWClassification:
    kind: Kind
    components: Tuple[ComponentShape, ...] = field(default_factory=tuple)
    match: int = 0
    ind_match: int = 0

    @property
    def is_cameron_walker(self) -> bool:
        return self.kind != "not-CW"

    @property
    def bipartite_core(self) -> Optional[BipartiteCore]:
        """The core when the graph has exactly one non-trivial component of the bipartite kind."""
        if len(self.components) == 1:
            return self.components[0].core
        return None

    def to_json(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "match": self.match,
            "ind_match": self.ind_match,
            "components": [
                {
                    "vertices": list(c.vertices),
                    "kind": c.kind,
                    **({"core": c.core.to_json()} if c.core else {}),
                }
                for c in self.components
            ],
        }


# -----------------------------------------------------------------------------
# Structural recognition
# -----------------------------------------------------------------------------

def _is_star(g: Graph, comp: int) -> bool:
    size = popcount(comp)
    edges = sum(popcount(g.adj[v] & comp) for v in bits(comp)) // 2
    if edges != size - 1:
        return False
    return any(popcount(g.adj[v] & comp) == size - 1 for v in bits(comp))


def _is_star_triangle(g: Graph, comp: int) -> bool:
    size = popcount(comp)
    if size < 3 or size % 2 == 0:
        return False
    for apex in bits(comp):
        if popcount(g.adj[apex] & comp) != size - 1:
            continue
        others = comp & ~(1 << apex)
        # every non-apex vertex: the apex plus exactly one other non-apex vertex
        if all(g.degree(v) == 2 and popcount(g.adj[v] & others) == 1 for v in bits(others)):
            return True
    return False


def _bipartite_core(g: Graph, comp: int) -> Optional[BipartiteCore]:
    # strip pendant triangles: pairs (a, b) of adjacent degree-2 vertices with a common neighbour y
    tri_pairs = 0
    attach = 0
    triangles = []
    for a in bits(comp):
        if g.degree(a) != 2:
            continue
        p, q = g.neighbors(a)
        for b, y in ((p, q), (q, p)):
            if b > a and g.degree(b) == 2 and g.has_edge(b, y) and g.has_edge(a, y):
                tri_pairs |= (1 << a) | (1 << b)
                attach |= 1 << y
                triangles.append((a, b, y))
    if attach & tri_pairs:
        return None
    rest = comp & ~tri_pairs
    deg = {v: popcount(g.adj[v] & rest) for v in bits(rest)}

    leaves = [v for v in bits(rest) if deg[v] == 1]
    pendant_mask = 0
    xs_mask = 0
    for v in leaves:
        if attach >> v & 1:
            continue
        pendant_mask |= 1 << v
        xs_mask |= g.adj[v] & rest
    if not xs_mask or xs_mask & pendant_mask or xs_mask & attach:
        return None
    ys_mask = rest & ~xs_mask & ~pendant_mask
    if not ys_mask:
        return None
    core = xs_mask | ys_mask
    # every edge of the stripped component runs X-P or X-Y
    for v in bits(rest):
        nb = g.adj[v] & rest
        if xs_mask >> v & 1:
            if nb & xs_mask:
                return None
        elif nb & ~xs_mask:
            return None
    # H must be connected
    seen = core & -core
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & core
        frontier = nxt & ~seen
        seen |= frontier
    if seen != core:
        return None
    pendants = tuple(
        (x, tuple(bits(g.adj[x] & pendant_mask))) for x in bits(xs_mask)
    )
    return BipartiteCore(
        xs=tuple(bits(xs_mask)),
        ys=tuple(bits(ys_mask)),
        pendants=pendants,
        triangles=tuple(sorted(triangles)),
    )


def classify_component(g: Graph, comp: int) -> ComponentShape:
    verts = tuple(bits(comp))
    if _is_star(g, comp):
        return ComponentShape(verts, "star")
    if _is_star_triangle(g, comp):
        return ComponentShape(verts, "star-triangle")
    core = _bipartite_core(g, comp)
    if core is not None:
        return ComponentShape(verts, "bipartite-with-pendants", core)
    return ComponentShape(verts, "not-CW")


def classify_cameron_walker(g: Graph) -> CWClassification:
    """Classify ``g``; isolated vertices are ignored by the structural branch."""
    match, _ = matching_number(g)
    ind, _ = induced_matching_number(g)
    shapes = tuple(classify_component(g, c) for c in g.components() if popcount(c) > 1)

    structural_cw = all(s.kind != "not-CW" for s in shapes)
    if structural_cw != (match == ind):
        payload = {"edges": g.to_edge_list(), "n": g.n, "match": match, "ind_match": ind,
                   "components": [s.kind for s in shapes]}
        record_event("cw_mismatch", **payload)
        logger.error("[cw] structural and definitional tests disagree: %s", payload)
        raise InvariantError("Cameron-Walker structural/definitional mismatch", payload)

    if not structural_cw:
        kind: Kind = "not-CW"
    elif len(shapes) == 1:
        kind = shapes[0].kind
    else:
        # zero or several non-trivial components
        kind = "disconnected-CW"
    return CWClassification(kind=kind, components=shapes, match=match, ind_match=ind)
