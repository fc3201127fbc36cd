"""Exact Gaussian elimination over the scalar field."""

from __future__ import annotations


def solve_linear(field, rows, rhs):
    """Solve rows * x = rhs over the field; rows is a list of lists of
    Scalars.  Returns one solution (free variables set to zero) or raises
    ValueError when inconsistent.  Pivots favor entries with few monomials."""
    m = len(rows)
    if m == 0:
        return []
    ncols = len(rows[0])
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for _ in range(ncols):
        best = None
        for i in range(r, m):
            for jc in range(ncols):
                if jc in piv_cols:
                    continue
                e = A[i][jc]
                if not e.is_zero():
                    w = len(e.num) + len(e.den)
                    if best is None or w < best[0]:
                        best = (w, i, jc)
        if best is None:
            break
        _, bi, bj = best
        A[r], A[bi] = A[bi], A[r]
        piv = A[r][bj]
        inv = piv.inv()
        A[r] = [e * inv for e in A[r]]
        for i in range(m):
            if i != r and not A[i][bj].is_zero():
                c = A[i][bj]
                A[i] = [a - c * b for a, b in zip(A[i], A[r])]
        piv_cols.append(bj)
        r += 1
        if r == m:
            break
    # consistency check on zero rows
    for i in range(r, m):
        if not A[i][ncols].is_zero():
            raise ValueError("inconsistent linear system")
    x = [field.zero] * ncols
    for row_idx, jc in enumerate(piv_cols):
        x[jc] = A[row_idx][ncols]
    return x
