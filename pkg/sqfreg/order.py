"""
order.py
--------
Admissible orderings of G(I(G)^[s]) and the colon recursion bound.

An ordering u_1..u_m is admissible when every pair j < i satisfies

  (i)  (u_j : u_i) is contained in (I(G)^[s+1] : u_i), or
  (ii) some r <= i-1 has (u_r : u_i) = (x_p) with (u_j : u_i) contained in (x_p).

Colons of squarefree monomials are principal, (u : v) = (u / gcd(u, v)), so
both conditions reduce to bitmask tests once (I^[s+1] : u_i) is known.

Whether u_i can follow a prefix depends only on the *set* of generators in the
prefix, which keeps the backtracking search and the ordering count finite
(memoized over subsets).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple

from . import config
from .errors import CapExceededError, PreconditionError, TheoremViolation
from .even_connection import colon_graph
from .graph import Graph, Matching, bits, matching_number
from .ideal import Ideal, Monomial, colon_by_monomial, edge_ideal, render_monomial, squarefree_power
from .regularity import regularity
from .report import Report
from .util.diagnostics import record_event

logger = logging.getLogger(__name__)

Case = Literal["i", "ii"]


@dataclass(frozen=True)
class PairJustification:
    """Indices are 1-based positions in the ordering."""
    j: int
    i: int
    case: Case
    r: Optional[int] = None
    var: Optional[int] = None

    def to_json(self) -> Dict[str, object]:
        return {"j": self.j, "i": self.i, "case": self.case, "r": self.r,
                "var": None if self.var is None else f"x{self.var}"}


@dataclass(frozen=True)
class OrderCertificate:
    ordering: Tuple[Monomial, ...]
    pairs: Tuple[PairJustification, ...]

    def to_json(self) -> Dict[str, object]:
        return {
            "ordering": [render_monomial(u) for u in self.ordering],
            "pairs": [p.to_json() for p in self.pairs],
        }


@dataclass(frozen=True)
class OrderViolation:
    j: int
    i: int

    def to_json(self) -> Dict[str, int]:
        return {"j": self.j, "i": self.i}


class _Level:
    """G(I^[s]) with the level-(s+1) colons, computed once per generator."""

    def __init__(self, g: Graph, s: int):
        match, _ = matching_number(g)
        if not 1 <= s <= match - 1:
            raise PreconditionError(f"need 1 <= s <= match(G) - 1 = {match - 1}, got s = {s}")
        self.g = g
        self.s = s
        base = edge_ideal(g)
        self.gens: Tuple[Monomial, ...] = squarefree_power(base, s).gens
        self.upper: Ideal = squarefree_power(base, s + 1)
        self._colon: Dict[Monomial, Ideal] = {}

    def colon(self, u: Monomial) -> Ideal:
        hit = self._colon.get(u)
        if hit is None:
            hit = colon_by_monomial(self.upper, u)
            self._colon[u] = hit
        return hit

    def justify(self, placed: Sequence[Monomial], j: int, ui: Monomial) -> Optional[Tuple[Case, Optional[int], Optional[int]]]:
        """Justify the pair (placed[j], ui) using generators in ``placed`` (0-based j)."""
        quotient = placed[j] & ~ui
        if self.colon(ui).contains(quotient):
            return ("i", None, None)
        for r, ur in enumerate(placed):
            var = ur & ~ui
            if var and (var & (var - 1)) == 0 and quotient & var:
                return ("ii", r, var.bit_length() - 1)
        return None

    def placeable(self, placed_mask: int, x: int) -> bool:
        """Can gens[x] follow any ordering of the generator set ``placed_mask``?"""
        placed = [self.gens[k] for k in bits(placed_mask)]
        ui = self.gens[x]
        return all(self.justify(placed, j, ui) is not None for j in range(len(placed)))


def _certify(level: _Level, ordering: Sequence[Monomial]) -> Tuple[List[PairJustification], Optional[OrderViolation]]:
    pairs: List[PairJustification] = []
    for i in range(1, len(ordering)):
        prefix = ordering[:i]
        for j in range(i):
            why = level.justify(prefix, j, ordering[i])
            if why is None:
                return pairs, OrderViolation(j=j + 1, i=i + 1)
            case, r, var = why
            pairs.append(PairJustification(j=j + 1, i=i + 1, case=case,
                                           r=None if r is None else r + 1, var=var))
    return pairs, None


def _check_permutation(level: _Level, ordering: Sequence[Monomial]) -> Tuple[Monomial, ...]:
    ordering = tuple(int(u) for u in ordering)
    if sorted(ordering) != sorted(level.gens) or len(set(ordering)) != len(ordering):
        raise PreconditionError("ordering is not a permutation of the minimal generators")
    return ordering


def check_order(g: Graph, s: int, ordering: Sequence[Monomial]) -> Tuple[Optional[OrderCertificate], Optional[OrderViolation]]:
    """Certificate for an admissible ordering, else the first violating pair."""
    level = _Level(g, s)
    ordering = _check_permutation(level, ordering)
    pairs, violation = _certify(level, ordering)
    if violation is not None:
        return None, violation
    return OrderCertificate(ordering=ordering, pairs=tuple(pairs)), None


def verify_order(g: Graph, s: int, ordering: Sequence[Monomial]) -> Optional[OrderCertificate]:
    cert, violation = check_order(g, s, ordering)
    if violation is not None:
        logger.info("[order] pair (%d, %d) violates both conditions", violation.j, violation.i)
    return cert


def find_admissible_order(g: Graph, s: int) -> OrderCertificate:
    """Lexicographically least admissible ordering (generators in canonical order)."""
    level = _Level(g, s)
    m = len(level.gens)
    full = (1 << m) - 1
    dead: set = set()
    order: List[int] = []

    def extend(placed: int) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        for x in range(m):
            if placed >> x & 1 or not level.placeable(placed, x):
                continue
            order.append(x)
            if extend(placed | (1 << x)):
                return True
            order.pop()
        dead.add(placed)
        return False

    if not extend(0):
        payload = {"edges": g.to_edge_list(), "n": g.n, "s": s}
        record_event("order_exhausted", **payload)
        logger.error("[order] no admissible ordering for %s at s=%d", g.to_edge_list(), s)
        raise TheoremViolation("no admissible ordering of the squarefree-power generators", payload)

    ordering = tuple(level.gens[x] for x in order)
    pairs, violation = _certify(level, ordering)
    if violation is not None:
        raise TheoremViolation("search produced an ordering its own verifier rejects",
                               {"edges": g.to_edge_list(), "s": s, "pair": violation.to_json()})
    return OrderCertificate(ordering=ordering, pairs=tuple(pairs))


def count_admissible_orders(g: Graph, s: int, limit: Optional[int] = None) -> int:
    level = _Level(g, s)
    limit = config.ORDER_COUNT_MAX if limit is None else limit
    m = len(level.gens)
    if m > limit:
        raise CapExceededError(f"{m} generators; ordering count capped at {limit}", size=m, cap=limit)

    @lru_cache(maxsize=None)
    def ways(placed: int) -> int:
        if placed == 0:
            return 1
        total = 0
        for x in bits(placed):
            rest = placed & ~(1 << x)
            if level.placeable(rest, x):
                total += ways(rest)
        return total

    return ways((1 << m) - 1)


def case_two_consistent(g: Graph, s: int, certificate: OrderCertificate) -> bool:
    """Every case-(ii) pivot has the shape x_p * u_i / x_q for some x_q dividing u_i."""
    gens = set(squarefree_power(edge_ideal(g), s).gens)
    for pair in certificate.pairs:
        if pair.case != "ii":
            continue
        ui = certificate.ordering[pair.i - 1]
        ur = certificate.ordering[pair.r - 1]
        p = 1 << pair.var
        if ui & p:
            return False
        if not any((ui & ~(1 << q)) | p == ur and ur in gens for q in bits(ui)):
            return False
    return True


# =============================================================================
# Colon recursion bound
# =============================================================================

RegOf = Callable[[Graph, int], int]


def _default_reg(p: int, cap: Optional[int]) -> RegOf:
    def reg_of(h: Graph, t: int) -> int:
        return regularity(squarefree_power(edge_ideal(h), t), p, cap)
    return reg_of


def _matching_on(g: Graph, u: Monomial) -> Matching:
    """A perfect matching of G restricted to supp(u)."""
    size, m = matching_number(g.induced(u))
    if 2 * size != bin(u).count("1"):
        raise PreconditionError(f"{render_monomial(u)} is not a product of disjoint edges")
    return m


def check_regcol_bound(g: Graph, s: int, p: int, cap: Optional[int] = None,
                       graph_id: str = "", reg_of: Optional[RegOf] = None) -> Report:
    """reg(I^[s+1]) <= max{ reg(I^[s+1] : u_i) + 2s, reg(I^[s]) } with colon graphs for the u_i."""
    match, _ = matching_number(g)
    if not 1 <= s <= match - 1:
        raise PreconditionError(f"need 1 <= s <= match(G) - 1 = {match - 1}, got s = {s}")
    reg_of = reg_of or _default_reg(p, cap)
    try:
        left = reg_of(g, s + 1)
        level_s = reg_of(g, s)
        colon_regs: Dict[str, int] = {}
        for u in squarefree_power(edge_ideal(g), s).gens:
            h = colon_graph(g, _matching_on(g, u))
            colon_regs[render_monomial(u)] = reg_of(h, 1)
    except CapExceededError as e:
        return Report(graph_id, "regcol", "skipped", s=s, reason="cap_exceeded",
                      computed={"size": e.size, "cap": e.cap})
    right = max(max(r + 2 * s for r in colon_regs.values()), level_s)
    computed = {"left": left, "right": right, "slack": right - left, "reg_level_s": level_s}
    if left <= right:
        return Report(graph_id, "regcol", "pass", s=s, computed=computed)
    return Report(graph_id, "regcol", "fail", s=s, computed=computed,
                  witness={"colon_regs": colon_regs})
