"""Exact matrix rank: fraction-free elimination over ℚ, modular elimination over 𝔽_p."""

from typing import List, Sequence

import numpy as np

# p * p must stay inside int64 during row updates
MAX_PRIME = 2**31 - 1


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over ℚ of an integer matrix using Bareiss elimination on Python ints."""
    rows: List[List[int]] = [[int(x) for x in r] for r in matrix]
    m = len(rows)
    if m == 0 or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for r in range(rank + 1, m):
            row = rows[r]
            a = row[col]
            for c in range(col + 1, ncols):
                # exact: every entry is a minor of the input
                row[c] = (p * row[c] - a * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(matrix, p: int) -> int:
    """Rank over 𝔽_p of an integer matrix, row-reducing with numpy int64."""
    a = np.array(matrix, dtype=np.int64)
    if a.ndim != 2 or a.size == 0:
        return 0
    a %= p
    m, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == m:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, col].copy()
        if below.any():
            a[rank + 1:] = (a[rank + 1:] - np.outer(below, a[rank])) % p
        rank += 1
    return rank
