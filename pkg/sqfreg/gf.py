"""Exact matrix rank over prime fields.

GF(2) rows are packed into Python ints and eliminated with XOR; other primes
use dense numpy int64 elimination reduced mod p after every row operation
(p < 2**31 keeps every product inside int64).
"""
from __future__ import annotations

from typing import List, Sequence

import numpy as np

from .errors import PreconditionError

MAX_PRIME = (1 << 31) - 1


def gf2_rank(rows: List[int]) -> int:
    """Rank over GF(2) of rows given as int bitsets (pivot on the lowest set bit)."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                rank += 1
                break
            row ^= piv
    return rank


def modp_rank(matrix: np.ndarray, p: int) -> int:
    """Rank over GF(p) by Gauss-Jordan elimination."""
    if p < 2 or p > MAX_PRIME:
        raise PreconditionError(f"prime {p} outside 2..{MAX_PRIME}")
    a = np.asarray(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        if others.size:
            factors = a[others, col][:, None]
            a[others] = (a[others] - factors * a[rank][None, :]) % p
        rank += 1
    return rank


def boundary_rank(columns: Sequence[Sequence[int]], n_rows: int, p: int) -> int:
    """Rank of a simplicial boundary matrix given column-wise as row indices.

    Column ``c`` lists its facets in vertex order; the sign of the k-th facet
    is ``(-1)**k``. Signs vanish in characteristic 2.
    """
    if not columns or n_rows == 0:
        return 0
    if p == 2:
        packed = []
        for col in columns:
            row = 0
            for r in col:
                row |= 1 << r
            packed.append(row)
        return gf2_rank(packed)
    mat = np.zeros((len(columns), n_rows), dtype=np.int64)
    for c, col in enumerate(columns):
        for k, r in enumerate(col):
            mat[c, r] = 1 if k % 2 == 0 else p - 1
    return modp_rank(mat, p)
