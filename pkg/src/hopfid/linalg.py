"""Exact Gaussian elimination over a cyclotomic field.

Matrices are lists of rows of CyclotomicNumber.  Everything is dense and
exact; the sizes that show up here (a few thousand entries) make fraction-free
tricks unnecessary.
"""

from __future__ import annotations

from .cyclotomic import CyclotomicNumber

__all__ = ["row_reduce", "rank", "kernel_basis"]


def row_reduce(rows):
    """Reduced row echelon form in place; returns the list of pivot columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not rows[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows) -> int:
    work = [list(row) for row in rows]
    return len(row_reduce(work))


def kernel_basis(rows, ncols, order):
    """A basis of the right kernel of the matrix, one vector per free column."""
    work = [list(row) for row in rows]
    pivots = row_reduce(work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    zero = CyclotomicNumber.zero(order)
    one = CyclotomicNumber.one(order)
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        basis.append(vec)
    return basis
