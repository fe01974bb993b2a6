"""Fraction-free elimination over Q(i): exact rank and determinant.

Bareiss-style two-row updates with first-nonzero pivoting; all divisions are
exact, so no entry ever leaves Q(i).  Performance is secondary at the matrix
sizes this engine meets (a few dozen rows).
"""

from __future__ import annotations

from .algebra import GaussianRational, ONE, ZERO, as_gaussian


def _copy(rows):
    return [[as_gaussian(x) for x in row] for row in rows]


def matrix_rank(rows) -> int:
    """Rank over Q(i) of a rectangular matrix given as nested sequences."""
    m = _copy(rows)
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    prev = ONE
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if m[i][c]), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        for i in range(r + 1, n_rows):
            head = m[i][c]
            for j in range(c + 1, n_cols):
                m[i][j] = (pivot * m[i][j] - head * m[r][j]) / prev
            m[i][c] = ZERO
        prev = pivot
        r += 1
    return r


def determinant(rows) -> GaussianRational:
    """Exact determinant over Q(i) of a square matrix."""
    m = _copy(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return ONE
    prev = ONE
    sign = 1
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c]), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        pivot = m[c][c]
        for i in range(c + 1, n):
            head = m[i][c]
            for j in range(c + 1, n):
                m[i][j] = (pivot * m[i][j] - head * m[c][j]) / prev
            m[i][c] = ZERO
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det
