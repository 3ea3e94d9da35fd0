"""
graph.py
--------
Simple graphs on vertices 0..n-1 and the exact combinatorics the regularity
checks need: matchings, induced matchings, bipartitions, very well-covered
and Hamiltonian-path tests, pendant triangles.

Graphs are immutable; adjacency is one int bitmask per vertex, so vertex sets
are plain ints throughout (bit v set = vertex v present). Everything here is
exact; nothing is polynomial-time for large n and nothing needs to be at the
sizes this toolkit targets (n <= 32).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import config
from .errors import CapExceededError, PreconditionError

Edge = Tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of ``v``."""
    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= config.MAX_VERTICES:
            raise PreconditionError(f"vertex count {self.n} outside 0..{config.MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise PreconditionError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise PreconditionError(f"loop at vertex {v}")
            if nb >> self.n:
                raise PreconditionError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise PreconditionError(f"asymmetric adjacency between {v} and {u}")

    # --- construction -----------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise PreconditionError(f"loop {u}-{v} in a simple graph")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # --- queries ------------------------------------------------------------
    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> List[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def isolated_vertices(self) -> List[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def components(self) -> List[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        seen = 0
        out: List[int] = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = 1 << start
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # --- derived graphs -----------------------------------------------------
    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        """``G \\ W`` with labels preserved: the deleted vertices become isolated."""
        drop = mask_of(vertices)
        keep = ~drop
        adj = tuple(0 if drop >> v & 1 else nb & keep for v, nb in enumerate(self.adj))
        return Graph(self.n, adj)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise PreconditionError(f"{u}-{v} is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def induced(self, vertex_mask: int) -> "Graph":
        """Induced subgraph on ``vertex_mask``, labels preserved."""
        return self.delete_vertices(bits(self.vertex_mask & ~vertex_mask))

    def to_edge_list(self) -> str:
        return ",".join(f"{u}-{v}" for u, v in self.edges())


# =============================================================================
# Matchings
# =============================================================================

@dataclass(frozen=True)
class Matching:
    """Pairwise-disjoint edges, stored sorted."""
    edges: Tuple[Edge, ...]

    @classmethod
    def of(cls, g: Graph, edges: Iterable[Sequence[int]]) -> "Matching":
        norm = sorted(_norm_edge(int(e[0]), int(e[1])) for e in edges)
        used = 0
        for u, v in norm:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise PreconditionError(f"{u}-{v} is not an edge of the graph")
            pair = (1 << u) | (1 << v)
            if used & pair:
                raise PreconditionError(f"edge {u}-{v} meets another edge of the matching")
            used |= pair
        return cls(tuple(norm))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def support(self) -> int:
        """Vertex bitmask covered by the matching (= the monomial e_1...e_s)."""
        m = 0
        for u, v in self.edges:
            m |= (1 << u) | (1 << v)
        return m

    def to_text(self) -> str:
        return ",".join(f"{u}-{v}" for u, v in self.edges)

    def to_json(self) -> List[List[int]]:
        return [[u, v] for u, v in self.edges]


def _max_matching(g: Graph, induced: bool) -> Tuple[int, List[Edge]]:
    """Exact branch-and-bound over the lowest remaining vertex, memoized on vertex sets.

    For induced matchings choosing edge uv removes the closed neighbourhoods of
    both ends, so no later edge can touch them.
    """
    memo: Dict[int, Tuple[int, Optional[Tuple[int, int, int]]]] = {}
    adj = g.adj

    def best(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit[0]
        # no vertex in mask has a neighbour in mask -> nothing to add
        live = 0
        for v in bits(mask):
            if adj[v] & mask:
                live |= 1 << v
        if not live:
            memo[mask] = (0, None)
            return 0
        v = (live & -live).bit_length() - 1
        top, choice = -1, None
        bound = popcount(live) // 2
        for u in bits(adj[v] & mask):
            rest = mask & ~((1 << v) | (1 << u))
            if induced:
                rest &= ~(adj[v] | adj[u])
            val = 1 + best(rest)
            if val > top:
                top, choice = val, (v, u, rest)
                if top >= bound:
                    break
        if top < bound:
            val = best(mask & ~(1 << v))
            if val > top:
                top, choice = val, (v, -1, mask & ~(1 << v))
        memo[mask] = (top, choice)
        return top

    size = best(g.vertex_mask)
    witness: List[Edge] = []
    mask = g.vertex_mask
    while True:
        _, choice = memo[mask]
        if choice is None:
            break
        v, u, rest = choice
        if u >= 0:
            witness.append(_norm_edge(v, u))
        mask = rest
    return size, sorted(witness)


def matching_number(g: Graph) -> Tuple[int, Matching]:
    """``match(G)`` with a maximum matching as witness."""
    size, edges = _max_matching(g, induced=False)
    return size, Matching(tuple(edges))


def induced_matching_number(g: Graph) -> Tuple[int, Matching]:
    """``ind-match(G)`` with a maximum induced matching as witness."""
    size, edges = _max_matching(g, induced=True)
    return size, Matching(tuple(edges))


def is_induced_matching(g: Graph, m: Matching) -> bool:
    support = m.support
    inside = sum(popcount(g.adj[v] & support) for v in bits(support)) // 2
    return inside == len(m)


def iter_matchings(g: Graph, s: int) -> Iterator[Matching]:
    """All matchings of size ``s`` in lexicographic order of their sorted edge lists."""
    if s < 0:
        raise PreconditionError(f"s must be >= 0, got {s}")
    edges = g.edges()
    chosen: List[Edge] = []

    def rec(start: int, used: int) -> Iterator[Matching]:
        if len(chosen) == s:
            yield Matching(tuple(chosen))
            return
        need = s - len(chosen)
        for k in range(start, len(edges) - need + 1):
            u, v = edges[k]
            pair = (1 << u) | (1 << v)
            if used & pair:
                continue
            chosen.append(edges[k])
            yield from rec(k + 1, used | pair)
            chosen.pop()

    yield from rec(0, 0)


def enumerate_matchings(g: Graph, s: int) -> List[Matching]:
    return list(iter_matchings(g, s))


# =============================================================================
# Graph classes
# =============================================================================

def bipartition(g: Graph) -> Optional[Tuple[frozenset, frozenset]]:
    """2-colouring from the smallest vertex of each component (colour 0 -> X)."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    xs = frozenset(v for v in range(g.n) if color[v] == 0)
    ys = frozenset(v for v in range(g.n) if color[v] == 1)
    return xs, ys


def maximal_independent_sets(g: Graph) -> Iterator[int]:
    """Bron-Kerbosch with pivoting on the complement graph; yields vertex bitmasks."""
    full = g.vertex_mask
    non_adj = [full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)]

    def rec(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot = next(bits(p | x))
        for v in bits(p & ~non_adj[pivot]):
            yield from rec(r | (1 << v), p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from rec(0, full, 0)


def is_very_well_covered(g: Graph) -> bool:
    """No isolated vertices, n even, and every minimal vertex cover has n/2 vertices."""
    if g.n == 0 or g.n % 2 or g.isolated_vertices():
        return False
    half = g.n // 2
    # minimal vertex covers are the complements of maximal independent sets
    return all(g.n - popcount(s) == half for s in maximal_independent_sets(g))


def has_hamiltonian_path(g: Graph, cap: Optional[int] = None) -> bool:
    """Subset DP over (visited set, endpoint); ``reach[S]`` is the endpoint bitmask."""
    cap = config.HAMILTON_CAP if cap is None else cap
    if g.n < 1:
        raise PreconditionError("Hamiltonian path needs at least one vertex")
    if g.n > cap:
        raise CapExceededError(f"Hamiltonian-path DP capped at {cap} vertices, graph has {g.n}",
                               size=g.n, cap=cap)
    if g.n == 1:
        return True
    full = g.vertex_mask
    reach = [0] * (1 << g.n)
    for v in range(g.n):
        reach[1 << v] = 1 << v
    for s in range(1, 1 << g.n):
        ends = reach[s]
        if not ends:
            continue
        for v in bits(ends):
            for u in bits(g.adj[v] & ~s):
                reach[s | (1 << u)] |= 1 << u
    return bool(reach[full])


def pendant_triangles(g: Graph) -> List[Tuple[int, int, int]]:
    """Triangles with at least two vertices of degree exactly 2, degree-2 pair first.

    ``K3`` qualifies (all three vertices have degree 2); its reported pair is the
    two smallest labels.
    """
    out = []
    seen = set()
    for x in range(g.n):
        if g.degree(x) != 2:
            continue
        a, b = g.neighbors(x)
        if not g.has_edge(a, b):
            continue
        tri = (1 << x) | (1 << a) | (1 << b)
        if tri in seen:
            continue
        for y, z in ((a, b), (b, a)):
            if y > x and g.degree(y) == 2:
                out.append((x, y, z))
                seen.add(tri)
                break
    return sorted(out)


def pendant_edges(g: Graph) -> List[Edge]:
    """Edges ``(x, z)`` with ``deg(x) == 1``; a K2 component is reported once."""
    out = []
    for x in range(g.n):
        if g.degree(x) == 1:
            z = g.neighbors(x)[0]
            if g.degree(z) == 1 and z < x:
                continue
            out.append((x, z))
    return out
