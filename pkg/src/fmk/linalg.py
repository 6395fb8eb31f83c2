"""Exact dense linear algebra over a configurable field.

Matrices are lists of rows; scalars support +, -, *, / and truth
testing.  Everything is plain Gaussian elimination with exact pivots;
the systems arising in this package are small (tens of unknowns).
"""

from __future__ import annotations


def _rref(rows, width, field):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        pivot_row = None
        for rr in range(r, len(rows)):
            if rows[rr][c]:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and rows[rr][c]:
                f = rows[rr][c]
                rows[rr] = [a - f * b for a, b in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows, width, field) -> int:
    if not rows:
        return 0
    reduced, pivots = _rref(rows, width, field)
    return len(pivots)


def nullspace(rows, width, field):
    """Basis of {x : A x = 0}, one vector per free column."""
    reduced, pivots = _rref(rows, width, field)
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [field.zero] * width
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(vec)
    return basis


def solve(rows, rhs, width, field):
    """A particular solution of A x = b, or None if inconsistent.

    Free variables are set to zero.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = _rref(aug, width + 1, field)
    if width in pivots:
        return None
    x = [field.zero] * width
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][width]
    return x


def solve_with_nullspace(rows, rhs, width, field):
    """(particular solution, nullspace basis) or None if inconsistent."""
    part = solve(rows, rhs, width, field)
    if part is None:
        return None
    return part, nullspace(rows, width, field)
