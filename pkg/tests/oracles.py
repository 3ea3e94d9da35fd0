"""Independent reference computations for the tests (networkx + dense numpy ranks)."""
from __future__ import annotations

import itertools
import sys
from pathlib import Path
from typing import Dict, Iterator, List, Tuple

import networkx as nx
import numpy as np

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from sqfreg.graph import Graph  # noqa: E402


def to_sqfreg(G: nx.Graph) -> Graph:
    return Graph.from_edges(G.number_of_nodes(), G.edges())


def atlas(max_n: int, connected: bool = False) -> Iterator[Graph]:
    """Every graph on at most ``max_n`` vertices (up to isomorphism), from the networkx atlas."""
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n > max_n:
            break
        if n == 0:
            continue
        if connected and not nx.is_connected(G):
            continue
        yield to_sqfreg(G)


def nx_matching_number(g: Graph) -> int:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return len(nx.max_weight_matching(G, maxcardinality=True))


def brute_induced_matching_number(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for combo in itertools.combinations(edges, k):
            verts = [v for e in combo for v in e]
            if len(set(verts)) != 2 * k:
                continue
            inside = sum(1 for a, b in itertools.combinations(verts, 2) if g.has_edge(a, b))
            if inside == k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def _faces(gens: List[int], sigma: List[int]) -> Dict[int, List[Tuple[int, ...]]]:
    by_dim: Dict[int, List[Tuple[int, ...]]] = {}
    for k in range(len(sigma) + 1):
        for face in itertools.combinations(sigma, k):
            mask = sum(1 << v for v in face)
            if any(g & mask == g for g in gens):
                continue
            by_dim.setdefault(k - 1, []).append(face)
    return by_dim


def _rank(faces: Dict[int, List[Tuple[int, ...]]], d: int) -> int:
    """Real rank of the boundary map C_d -> C_{d-1}, augmented at d = 0."""
    cols = faces.get(d, [])
    rows = faces.get(d - 1, [])
    if not cols or not rows:
        return 0
    index = {f: i for i, f in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)))
    for c, face in enumerate(cols):
        for k in range(len(face)):
            mat[index[face[:k] + face[k + 1:]], c] = (-1) ** k
    return int(np.linalg.matrix_rank(mat))


def homology(gens: List[int], sigma: List[int]) -> Dict[int, int]:
    faces = _faces(gens, sigma)
    out = {}
    for d in range(-1, len(sigma)):
        h = len(faces.get(d, [])) - _rank(faces, d) - _rank(faces, d + 1)
        if h:
            out[d] = h
    return out


def hochster_betti(n: int, gens: List[int]) -> Dict[Tuple[int, int], int]:
    """beta_{i,j}(I) over the rationals, scanning every nonempty vertex subset."""
    table: Dict[Tuple[int, int], int] = {}
    for j in range(1, n + 1):
        for sigma in itertools.combinations(range(n), j):
            for d, h in homology(gens, list(sigma)).items():
                key = (j - d - 2, j)
                table[key] = table.get(key, 0) + h
    return table


def hochster_reg(n: int, gens: List[int]) -> int:
    return max(j - i for i, j in hochster_betti(n, gens))


def random_graphs(n: int, count: int, seed: int, connected: bool = True) -> Iterator[Graph]:
    """Seeded G(n, p) samples with p drawn per graph; disconnected samples are redrawn when asked."""
    rng = np.random.default_rng(seed)
    made = 0
    while made < count:
        G = nx.gnp_random_graph(n, float(rng.uniform(0.2, 0.7)), seed=int(rng.integers(2**31)))
        if connected and not nx.is_connected(G):
            continue
        made += 1
        yield to_sqfreg(G)


def random_cameron_walker(n: int, count: int, seed: int) -> Iterator[Graph]:
    """Connected Cameron-Walker graphs on exactly ``n`` vertices, built from their structure.

    A connected bipartite core X u Y, one pendant leaf on every X-vertex plus
    extra leaves on random X-vertices, and pendant triangles on random
    Y-vertices; vertex labels are shuffled.
    """
    rng = np.random.default_rng(seed)
    made = 0
    while made < count:
        a = int(rng.integers(1, n // 2 + 1))
        b = int(rng.integers(1, n - 2 * a + 1)) if n - 2 * a >= 1 else 0
        if b == 0:
            continue
        rest = n - 2 * a - b
        t = int(rng.integers(0, rest // 2 + 1))
        extra = rest - 2 * t
        xs, ys = list(range(a)), list(range(a, a + b))
        core = nx.Graph()
        core.add_nodes_from(xs + ys)
        core.add_edges_from((x, y) for x in xs for y in ys if rng.random() < 0.5)
        if not nx.is_connected(core):
            continue
        edges = list(core.edges())
        nxt = a + b
        for x in xs + [xs[int(i)] for i in rng.integers(0, a, size=extra)]:
            edges.append((x, nxt))
            nxt += 1
        for _ in range(t):
            y = ys[int(rng.integers(0, b))]
            edges += [(y, nxt), (y, nxt + 1), (nxt, nxt + 1)]
            nxt += 2
        perm = rng.permutation(n)
        made += 1
        yield Graph.from_edges(n, [(int(perm[u]), int(perm[v])) for u, v in edges])
