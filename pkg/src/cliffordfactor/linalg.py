"""Exact Gaussian elimination over the rationals."""
from __future__ import annotations

from typing import Optional, Sequence

from .rational import ZERO, Rational, rat


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Rational]], list[int]]:
    """Reduced row echelon form and pivot column list."""
    m = [[rat(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(vectors: Sequence[Sequence]) -> int:
    return len(rref(vectors)[1])


def solve_affine(
    matrix: Sequence[Sequence], rhs: Sequence
) -> tuple[Optional[list[Rational]], list[list[Rational]]]:
    """Solve ``matrix @ x = rhs`` exactly.

    Returns ``(particular, nullspace_basis)``; ``particular`` is ``None`` when
    the system is inconsistent. Free variables of the particular solution are
    set to zero and each nullspace vector has exactly one free variable equal
    to one, so the basis is canonical for a given column order.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(nrows)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None, []
    x = [ZERO] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = rat(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(v)
    return x, basis
