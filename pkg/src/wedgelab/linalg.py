"""Small exact linear algebra: rank and nullspace by Gaussian elimination
over Fractions, plus a fraction-free integer kernel for the hot path. Sizes
here are tiny (at most 10 columns), so no pivot strategy beyond first-nonzero
is needed for correctness."""
from __future__ import annotations

import math
from fractions import Fraction


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (in place on a copy) and pivot column list."""
    m = [list(map(Fraction, row)) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c]
        m[r] = [v / inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    return len(_echelon(rows)[1])


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace of the matrix, one vector per free column."""
    if not rows:
        return [
            [Fraction(1) if i == j else Fraction(0) for i in range(ncols)]
            for j in range(ncols)
        ]
    m, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(vec)
    return basis


def _primitive(ints: list[int]) -> list[int]:
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        return [v // g for v in ints]
    return ints


def integer_kernel_unique(rows: list[list[int]], ncols: int) -> list[int] | None:
    """Primitive integer kernel vector of an integer matrix whose nullspace
    is one-dimensional; None when the nullity differs from one.

    Fraction-free Gauss-Jordan: rows are cross-multiplied and compressed by
    their gcd, so everything stays in (small) integers until the single
    back-substitution at the end.
    """
    m = [list(row) for row in rows]
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pval = prow[c]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = _primitive([pval * a - f * b for a, b in zip(m[i], prow)])
        pivots.append(c)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        return None
    fc = free[0]
    vec = [Fraction(0)] * ncols
    vec[fc] = Fraction(1)
    for r, pc in enumerate(pivots):
        vec[pc] = Fraction(-m[r][fc], m[r][pc])
    lcm = 1
    for v in vec:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return _primitive([int(v * lcm) for v in vec])
