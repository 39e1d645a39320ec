"""Exact linear algebra helpers.

Two kernels: fraction-free Bareiss elimination for dense rational matrices,
and plain Gaussian elimination over the Scalar fraction field for small
dense symbolic systems (nullspaces for potential reconstruction, solving
rescaling constants).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import S_ONE, S_ZERO, Scalar


def bareiss_rank(rows):
    """Rank of a dense matrix of Fractions via fraction-free elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    prev = Fraction(1)
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev
            m[i][c] = Fraction(0)
        prev = m[r][c]
        r += 1
        if r == nr:
            break
    return r


def scalar_nullspace(rows, ncols):
    """Nullspace basis of a matrix with Scalar entries (dense Gauss).

    rows: list of dict col->Scalar.  Returns a list of basis vectors, each a
    list of Scalars of length ncols.
    """
    dense = []
    for row in rows:
        dense.append([row.get(j, S_ZERO) for j in range(ncols)])
    pivots = []  # (row, col)
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(dense)):
            if not dense[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        inv = dense[r][c].inv()
        dense[r] = [x * inv for x in dense[r]]
        for i in range(len(dense)):
            if i != r and not dense[i][c].is_zero():
                f = dense[i][c]
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[r])]
        pivots.append((r, c))
        r += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [S_ZERO] * ncols
        vec[free] = S_ONE
        for rr, cc in pivots:
            vec[cc] = -dense[rr][free]
        basis.append(vec)
    return basis


def scalar_solve(rows, rhs, ncols):
    """Solve A x = b over the Scalar field; returns one solution or None.

    rows: list of dict col->Scalar; rhs: list of Scalars.
    """
    aug = []
    for row, b in zip(rows, rhs):
        d = dict(row)
        d[ncols] = b
        aug.append(d)
    basis_cols = ncols + 1
    dense = [[row.get(j, S_ZERO) for j in range(basis_cols)] for row in aug]
    r = 0
    pivots = []
    for c in range(ncols):
        piv = None
        for i in range(r, len(dense)):
            if not dense[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        inv = dense[r][c].inv()
        dense[r] = [x * inv for x in dense[r]]
        for i in range(len(dense)):
            if i != r and not dense[i][c].is_zero():
                f = dense[i][c]
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[r])]
        pivots.append((r, c))
        r += 1
    for i in range(r, len(dense)):
        if not dense[i][ncols].is_zero():
            return None  # inconsistent
    x = [S_ZERO] * ncols
    for rr, cc in pivots:
        x[cc] = dense[rr][ncols]
    return x
