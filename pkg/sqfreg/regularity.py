"""
regularity.py
-------------
Graded Betti numbers and Castelnuovo-Mumford regularity of squarefree
monomial ideals through Hochster's formula

    beta_{i,j}(I) = sum over |sigma| = j of dim H~_{j-i-2}(Delta_sigma; GF(p)),

where Delta_sigma is the Stanley-Reisner complex of I restricted to sigma
(the subsets of sigma containing no generator). Hence

    reg(I) = 2 + max{ d : H~_d(Delta_sigma) != 0 for some sigma }.

Two scans share the homology kernel: ``regularity`` only looks for the top
non-vanishing degree and prunes subsets that cannot beat the current best;
``betti_table`` visits everything.

Pruning that never changes the answer:
  * variables outside every generator are dropped (they make Delta_sigma a cone);
  * a subset sigma that is not the union of the generators it contains has a
    vertex lying in no minimal non-face of Delta_sigma, which is then a cone
    point, so Delta_sigma is acyclic.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import config
from .errors import CapExceededError, PreconditionError
from .gf import boundary_rank
from .graph import bits, popcount
from .ideal import Ideal, Monomial

logger = logging.getLogger(__name__)


# =============================================================================
# Betti tables
# =============================================================================

@dataclass(frozen=True)
class BettiTable:
    """Sparse graded Betti numbers of an ideal: ``entries`` holds ``(i, j, beta_ij)``."""
    prime: int
    entries: Tuple[Tuple[int, int, int], ...]

    def get(self, i: int, j: int) -> int:
        for a, b, c in self.entries:
            if a == i and b == j:
                return c
        return 0

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return {(i, j): c for i, j, c in self.entries}

    @property
    def regularity(self) -> int:
        return max(j - i for i, j, _ in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    def to_json(self) -> Dict[str, object]:
        return {"prime": self.prime, "entries": [[i, j, c] for i, j, c in self.entries]}

    def render(self) -> str:
        """Macaulay2-style table: columns are i, rows are j - i."""
        if not self.entries:
            return "(zero table)"
        table = self.as_dict()
        cols = range(self.projective_dimension + 1)
        lo = min(j - i for i, j, _ in self.entries)
        rows = range(lo, self.regularity + 1)
        width = max(len(str(c)) for c in list(table.values()) + list(cols)) + 1
        totals = [sum(c for (i, _), c in table.items() if i == k) for k in cols]
        lines = [" " * 7 + "".join(f"{k:>{width}}" for k in cols),
                 f"{'total:':>7}" + "".join(f"{t:>{width}}" for t in totals)]
        for r in rows:
            cells = [table.get((k, k + r), 0) for k in cols]
            lines.append(f"{str(r) + ':':>7}" + "".join(f"{(c or '.'):>{width}}" for c in cells))
        return "\n".join(lines)


# =============================================================================
# Homology of induced subcomplexes
# =============================================================================

def _faces_by_dim(gens: Sequence[Monomial], sigma: int) -> List[List[int]]:
    """Faces of Delta_sigma grouped by dimension; index 0 holds the empty face."""
    inside = [g for g in gens if g & sigma == g]
    by_size: List[List[int]] = [[] for _ in range(popcount(sigma) + 1)]
    sub = sigma
    while True:
        if not any(g & sub == g for g in inside):
            by_size[popcount(sub)].append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & sigma
    while len(by_size) > 1 and not by_size[-1]:
        by_size.pop()
    for level in by_size:
        level.sort()
    return by_size


class _Chain:
    """Boundary ranks of one induced subcomplex, computed on demand."""

    def __init__(self, by_size: List[List[int]], p: int):
        self.by_size = by_size
        self.p = p
        self._index = [{f: k for k, f in enumerate(level)} for level in by_size]
        self._rank: Dict[int, int] = {}

    @property
    def top(self) -> int:
        """dim Delta_sigma (-1 when only the empty face survives)."""
        return len(self.by_size) - 2

    def count(self, d: int) -> int:
        size = d + 1
        return len(self.by_size[size]) if 0 <= size < len(self.by_size) else 0

    def rank(self, d: int) -> int:
        """Rank of the boundary map C_d -> C_{d-1} (augmented at d = 0)."""
        if d < 0 or d > self.top:
            return 0
        hit = self._rank.get(d)
        if hit is not None:
            return hit
        rows = self._index[d]
        columns = []
        for face in self.by_size[d + 1]:
            columns.append([rows[face & ~(1 << v)] for v in bits(face)])
        r = boundary_rank(columns, len(rows), self.p)
        self._rank[d] = r
        return r

    def homology(self, d: int) -> int:
        return self.count(d) - self.rank(d) - self.rank(d + 1)


def _chain(gens: Sequence[Monomial], sigma: int, p: int) -> _Chain:
    return _Chain(_faces_by_dim(gens, sigma), p)


def reduced_homology_ranks(ideal: Ideal, sigma: Sequence[int] | int, p: int,
                           cap: Optional[int] = None) -> List[int]:
    """dim H~_d(Delta_sigma; GF(p)) for d = -1 .. |sigma| - 1.

    For sigma empty the single entry is 1 exactly when the empty set is a
    non-face, i.e. for the unit ideal.
    """
    sig = sigma if isinstance(sigma, int) else _mask(sigma)
    _check_prime(p)
    size = popcount(sig)
    if sig >> ideal.n:
        raise PreconditionError("sigma contains a vertex outside the ambient ring")
    cap = config.DEFAULT_CAP if cap is None else cap
    if size > cap:
        raise CapExceededError(f"|sigma| = {size} exceeds cap {cap}", size=size, cap=cap)
    if sig == 0:
        return [1 if ideal.is_unit else 0]
    if ideal.is_unit:
        return [0] * (size + 1)
    chain = _chain(ideal.gens, sig, p)
    return [chain.homology(d) for d in range(-1, size)]


def _mask(vertices: Sequence[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_prime(p: int) -> None:
    if not config.is_prime(p):
        raise PreconditionError(f"{p} is not prime")


def _check_scannable(ideal: Ideal, cap: Optional[int]) -> int:
    if ideal.is_zero:
        raise PreconditionError("regularity of the zero ideal is undefined here")
    if ideal.is_unit:
        raise PreconditionError("regularity of the unit ideal is undefined here")
    cap = config.DEFAULT_CAP if cap is None else cap
    verts = ideal.generator_support
    if popcount(verts) > cap:
        raise CapExceededError(
            f"ideal involves {popcount(verts)} variables; regularity cap is {cap}",
            size=popcount(verts), cap=cap,
        )
    return verts


def _relevant_subsets(gens: Sequence[Monomial], verts: int) -> Iterator[int]:
    """Nonempty sigma that equal the union of the generators they contain."""
    sub = verts
    while sub:
        cover = 0
        for g in gens:
            if g & sub == g:
                cover |= g
        if cover == sub:
            yield sub
        sub = (sub - 1) & verts


# =============================================================================
# Public scans
# =============================================================================

@lru_cache(maxsize=config.REG_MEMO_SIZE)
def _scan_regularity(gens: Tuple[Monomial, ...], verts: int, p: int) -> int:
    best_d = -2
    # largest sigma first so the pruning bound bites early
    candidates = sorted(_relevant_subsets(gens, verts), key=lambda m: (-popcount(m), m))
    for sigma in candidates:
        if popcount(sigma) - 1 <= best_d:
            break
        chain = _chain(gens, sigma, p)
        for d in range(chain.top, best_d, -1):
            if chain.homology(d):
                best_d = d
                break
    return best_d + 2


def regularity(ideal: Ideal, p: int = 2, cap: Optional[int] = None) -> int:
    """reg(I) over GF(p); the last SQFR_REG_MEMO answers are kept per (generators, p)."""
    _check_prime(p)
    verts = _check_scannable(ideal, cap)
    reg = _scan_regularity(ideal.gens, verts, p)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug("[reg] %s over GF(%d) -> %d", ideal.render(), p, reg)
    return reg


def betti_table(ideal: Ideal, p: int = 2, cap: Optional[int] = None) -> BettiTable:
    _check_prime(p)
    verts = _check_scannable(ideal, cap)
    counts: Dict[Tuple[int, int], int] = {}
    for sigma in _relevant_subsets(ideal.gens, verts):
        j = popcount(sigma)
        chain = _chain(ideal.gens, sigma, p)
        for d in range(-1, chain.top + 1):
            h = chain.homology(d)
            if h:
                key = (j - d - 2, j)
                counts[key] = counts.get(key, 0) + h
    entries = tuple(sorted((i, j, c) for (i, j), c in counts.items()))
    return BettiTable(prime=p, entries=entries)


def has_linear_resolution(ideal: Ideal, p: int = 2, cap: Optional[int] = None) -> bool:
    """True iff reg(I) equals the common generator degree."""
    if ideal.is_zero:
        raise PreconditionError("linear resolution of the zero ideal is undefined here")
    degs = ideal.degrees()
    if len(degs) != 1:
        raise PreconditionError(f"ideal is not equigenerated (degrees {sorted(degs)})")
    (d,) = degs
    return regularity(ideal, p, cap) == d


def euler_sums(table: BettiTable) -> Dict[int, int]:
    """sum_i (-1)^i beta_{i,j}(S/I) per internal degree j >= 1 (beta_{i+1,j}(S/I) = beta_{i,j}(I))."""
    out: Dict[int, int] = {}
    for i, j, c in table.entries:
        out[j] = out.get(j, 0) + (-1) ** (i + 1) * c
    return {j: v for j, v in out.items() if v}


def face_euler_sums(ideal: Ideal) -> Dict[int, int]:
    """The same sums from face counts alone: sum over |sigma| = j of (-1)^(j-1) * chi~(Delta_sigma)."""
    out: Dict[int, int] = {}
    full = (1 << ideal.n) - 1
    sub = full
    while sub:
        by_size = _faces_by_dim(ideal.gens, sub)
        chi = sum((-1) ** (size - 1) * len(level) for size, level in enumerate(by_size))
        j = popcount(sub)
        out[j] = out.get(j, 0) + (-1) ** (j - 1) * chi
        sub = (sub - 1) & full
    return {j: v for j, v in out.items() if v}


def euler_characteristics(ideal: Ideal, p: int = 2,
                          cap: Optional[int] = None) -> Tuple[Dict[int, int], Dict[int, int]]:
    """(from the Betti table, from face counts); the two must agree."""
    return euler_sums(betti_table(ideal, p, cap)), face_euler_sums(ideal)


def memo_info():
    """``functools`` cache statistics of the regularity memo (hits, misses, maxsize, currsize)."""
    return _scan_regularity.cache_info()


def clear_memo() -> None:
    _scan_regularity.cache_clear()
