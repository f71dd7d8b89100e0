"""Exact rational linear algebra.

Rank, reduced row echelon form, nullspace and inverse over the rationals.
The forward pass uses fraction-free (Bareiss) elimination on a
denominator-cleared integer copy, so intermediates stay integral; the final
normalization reintroduces rationals only where the echelon form demands it.
Arbitrary-precision integers throughout: correctness over speed.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import NamedTuple, Optional, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def as_matrix(rows: Sequence[Sequence[Fraction | int]]) -> Matrix:
    """Coerce nested sequences to a rectangular tuple-of-tuples of Fractions."""
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if out:
        width = len(out[0])
        if any(len(row) != width for row in out):
            raise ValueError("matrix rows have unequal lengths")
    return out


class Echelon(NamedTuple):
    rank: int
    matrix: Matrix
    pivots: tuple[int, ...]


def _cleared_rows(m: Matrix) -> list[list[int]]:
    cleared = []
    for row in m:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        cleared.append([int(x * scale) for x in row])
    return cleared


def rref(rows: Sequence[Sequence[Fraction | int]]) -> Echelon:
    """Reduced row echelon form with rank and pivot columns, exactly."""
    m = as_matrix(rows)
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    work = _cleared_rows(m)

    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][c]
        for i in range(r + 1, n_rows):
            head = work[i][c]
            for j in range(c, n_cols):
                work[i][j] = (work[i][j] * lead - head * work[r][j]) // prev
        prev = lead
        pivots.append(c)
        r += 1
        if r == n_rows:
            break

    reduced = [[Fraction(x) for x in row] for row in work]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        lead = reduced[k][c]
        reduced[k] = [x / lead for x in reduced[k]]
        for i in range(k):
            factor = reduced[i][c]
            if factor:
                reduced[i] = [a - factor * b for a, b in zip(reduced[i], reduced[k])]
    return Echelon(
        rank=len(pivots),
        matrix=tuple(tuple(row) for row in reduced),
        pivots=tuple(pivots),
    )


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    return rref(rows).rank


def nullspace(rows: Sequence[Sequence[Fraction | int]]) -> tuple[Vector, ...]:
    """Basis of the right nullspace, one vector per free column, in column order."""
    m = as_matrix(rows)
    n_cols = len(m[0]) if m else 0
    echelon = rref(m)
    pivot_set = set(echelon.pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for row_idx, pivot_col in enumerate(echelon.pivots):
            vec[pivot_col] = -echelon.matrix[row_idx][free]
        basis.append(tuple(vec))
    return tuple(basis)


def invert(rows: Sequence[Sequence[Fraction | int]]) -> Optional[Matrix]:
    """Exact inverse of a square matrix, or None when singular."""
    m = as_matrix(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("invert requires a square matrix")
    if n == 0:
        return ()
    augmented = [row + identity_matrix(n)[i] for i, row in enumerate(m)]
    echelon = rref(augmented)
    # invertible iff every pivot lands in the left block
    if echelon.rank != n or echelon.pivots != tuple(range(n)):
        return None
    return tuple(row[n:] for row in echelon.matrix)


def identity_matrix(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def apply(matrix: Matrix, vector: Sequence[Fraction | int]) -> Vector:
    vec = tuple(Fraction(x) for x in vector)
    if matrix and len(matrix[0]) != len(vec):
        raise ValueError(
            f"matrix width {len(matrix[0])} does not match vector length {len(vec)}"
        )
    return tuple(
        sum((a * b for a, b in zip(row, vec) if a and b), Fraction(0))
        for row in matrix
    )


def multiply(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = tuple(zip(*b)) if b else ()
    return tuple(
        tuple(
            sum((x * y for x, y in zip(row, col) if x and y), Fraction(0))
            for col in bt
        )
        for row in a
    )
