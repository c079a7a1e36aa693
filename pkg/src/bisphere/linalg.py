"""Rational-free (Bareiss) elimination over the rationals."""

from __future__ import annotations

from math import lcm
from typing import List, Sequence

from .polyalg import Rational


class SingularSystemError(ArithmeticError):
    pass


def _integer_rows(rows: Sequence[Sequence[Rational]]) -> List[List[int]]:
    out = []
    for row in rows:
        row = [Rational(v) for v in row]
        d = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * d) for v in row])
    return out


def bareiss_echelon(rows: Sequence[Sequence[Rational]]):
    """Row echelon form of an integer-scaled copy; returns (matrix, pivot columns).

    Each row is first scaled by the lcm of its denominators, which leaves the
    row space unchanged.  Entries stay integral throughout because every
    division by the previous pivot is exact.
    """
    M = _integer_rows(rows)
    if not M:
        return M, []
    nrows, ncols = len(M), len(M[0])
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for i in range(r + 1, nrows):
            a = M[i][c]
            row_i, row_r = M[i], M[r]
            for j in range(c, ncols):
                row_i[j] = (piv * row_i[j] - a * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return M, pivots


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    return len(bareiss_echelon(rows)[1])


def solve(A: Sequence[Sequence[Rational]], b: Sequence[Rational]) -> List[Rational]:
    """Unique exact solution of A x = b; raises SingularSystemError otherwise."""
    if len(A) != len(b):
        raise ValueError("row count of A and length of b differ")
    ncols = len(A[0]) if A else 0
    M, pivots = bareiss_echelon([list(row) + [bi] for row, bi in zip(A, b)])
    if ncols in pivots:
        raise SingularSystemError("inconsistent system")
    if len(pivots) < ncols:
        raise SingularSystemError(f"rank {len(pivots)} < {ncols} unknowns")
    x = [Rational(0)] * ncols
    for r in range(ncols - 1, -1, -1):
        c = pivots[r]
        acc = Rational(M[r][ncols])
        for j in range(c + 1, ncols):
            acc -= M[r][j] * x[j]
        x[c] = acc / M[r][c]
    return x
