"""
ideal.py
--------
Squarefree monomials and squarefree monomial ideals.

A squarefree monomial is an int bitmask over variable indices (bit i <-> x_i),
so ``deg = popcount``, ``gcd = &``, ``lcm = |`` and ``u | v`` (divides) is
``u & v == u``. An ``Ideal`` stores its minimal generating set G(I) sorted by
(degree, bitmask); equality of ideals is equality of those tuples.

The zero ideal has no generators; the unit ideal is generated by the empty
monomial (``0``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import PreconditionError
from .graph import Graph, bits, mask_of, popcount

Monomial = int      # squarefree monomial as a support bitmask
ONE: Monomial = 0


def monomial(support: Iterable[int]) -> Monomial:
    return mask_of(support)


def support(m: Monomial) -> Tuple[int, ...]:
    return tuple(bits(m))


def degree(m: Monomial) -> int:
    return popcount(m)


def divides(u: Monomial, v: Monomial) -> bool:
    return u & v == u


def render_monomial(m: Monomial) -> str:
    """``x0*x1*x3``; the empty monomial renders as ``1``."""
    return "*".join(f"x{i}" for i in bits(m)) or "1"


def _sort_key(m: Monomial) -> Tuple[int, int]:
    return (popcount(m), m)


def minimalize(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Divisibility-minimal elements, canonically ordered."""
    kept: List[Monomial] = []
    for g in sorted(set(gens), key=_sort_key):
        if not any(h & g == h for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class Ideal:
    """Squarefree monomial ideal in K[x_0..x_{n-1}] given by its minimal generators."""
    n: int
    gens: Tuple[Monomial, ...]

    @classmethod
    def of(cls, n: int, gens: Iterable[Monomial]) -> "Ideal":
        gens = tuple(gens)
        for g in gens:
            if g < 0 or g >> n:
                raise PreconditionError(f"monomial {render_monomial(g)} outside x0..x{n - 1}")
        return cls(n, minimalize(gens))

    @classmethod
    def zero(cls, n: int) -> "Ideal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "Ideal":
        return cls(n, (ONE,))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (ONE,)

    @property
    def generator_support(self) -> Monomial:
        """Variables occurring in some generator."""
        m = 0
        for g in self.gens:
            m |= g
        return m

    def degrees(self) -> Dict[int, int]:
        """Generator-degree histogram."""
        out: Dict[int, int] = {}
        for g in self.gens:
            d = popcount(g)
            out[d] = out.get(d, 0) + 1
        return out

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) == 1

    def contains(self, m: Monomial) -> bool:
        return any(g & m == g for g in self.gens)

    def render(self) -> str:
        return "(" + ", ".join(render_monomial(g) for g in self.gens) + ")"

    def to_json(self) -> List[List[int]]:
        return [list(bits(g)) for g in self.gens]

    def __str__(self) -> str:
        return self.render()


def edge_ideal(g: Graph) -> Ideal:
    return Ideal(g.n, minimalize((1 << u) | (1 << v) for u, v in g.edges()))


def squarefree_power(ideal: Ideal, s: int) -> Ideal:
    """I^[s]: minimal elements among unions of s generators with pairwise disjoint supports."""
    if s < 1:
        raise PreconditionError(f"squarefree power needs s >= 1, got {s}")
    if s == 1 or ideal.is_zero:
        return ideal
    if ideal.is_unit:
        return ideal
    gens = ideal.gens
    out = set()

    def rec(start: int, used: int, left: int) -> None:
        if left == 0:
            out.add(used)
            return
        for k in range(start, len(gens) - left + 1):
            g = gens[k]
            if g & used:
                continue
            rec(k + 1, used | g, left - 1)

    rec(0, 0, s)
    return Ideal(ideal.n, minimalize(out))


def colon_by_monomial(ideal: Ideal, m: Monomial) -> Ideal:
    """(I : m) = (g / gcd(g, m) : g in G(I)), minimalized."""
    return Ideal(ideal.n, minimalize(g & ~m for g in ideal.gens))


def add_and_minimalize(ideal: Ideal, extra: Iterable[Monomial]) -> Ideal:
    extra = tuple(extra)
    for m in extra:
        if m < 0 or m >> ideal.n:
            raise PreconditionError(f"monomial {render_monomial(m)} outside x0..x{ideal.n - 1}")
    return Ideal(ideal.n, minimalize(ideal.gens + extra))


def ideal_equals(a: Ideal, b: Ideal) -> bool:
    if a.n != b.n:
        raise PreconditionError(f"ideals live in different rings ({a.n} vs {b.n} variables)")
    return a.gens == b.gens


def ideal_subset(a: Ideal, b: Ideal) -> bool:
    """a ⊆ b as ideals."""
    return all(b.contains(g) for g in a.gens)


def parse_monomial(text: str) -> Monomial:
    """Inverse of ``render_monomial``: ``"x0*x3"`` -> bitmask."""
    text = text.strip()
    if text == "1":
        return ONE
    out = 0
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor.startswith("x") or not factor[1:].isdigit():
            raise PreconditionError(f"bad variable {factor!r}")
        out |= 1 << int(factor[1:])
    return out
