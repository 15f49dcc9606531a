"""Pure-Python integer row-elimination kernels.

Reference implementation of the routines in ``_kernels.pyx``; both must give
identical results. Rows are dense lists of Python ints kept in *reduced*
echelon form: every row is zero in the pivot columns of all other rows, its
own pivot entry is positive, and its content (gcd of entries) is 1.
"""

from math import gcd


def _normalize(row, pivot):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if row[pivot] < 0:
        g = -g
    if g != 1:
        for j in range(len(row)):
            if row[j]:
                row[j] //= g


def _support(row):
    return [j for j, v in enumerate(row) if v]


def reduce_vector(vec, rows, pivots, supports):
    """Reduce ``vec`` (in place) against the echelon rows; returns it."""
    n = len(vec)
    for row, p, supp in zip(rows, pivots, supports):
        b = vec[p]
        if not b:
            continue
        a = row[p]
        g = gcd(a, b)
        a //= g
        b //= g
        if a != 1:
            for j in range(n):
                if vec[j]:
                    vec[j] *= a
        for j in supp:
            vec[j] -= b * row[j]
    return vec


def insert_row(vec, rows, pivots, supports):
    """Insert ``vec`` into the echelon form.

    Returns the new pivot column, or -1 if ``vec`` lies in the span.
    """
    vec = reduce_vector(list(vec), rows, pivots, supports)
    p = -1
    for j, v in enumerate(vec):
        if v:
            p = j
            break
    if p < 0:
        return -1
    _normalize(vec, p)
    supp = _support(vec)
    a = vec[p]
    for idx in range(len(rows)):
        row = rows[idx]
        b = row[p]
        if not b:
            continue
        g = gcd(a, b)
        s = a // g
        t = b // g
        for j in range(len(row)):
            if row[j]:
                row[j] *= s
        for j in supp:
            row[j] -= t * vec[j]
        _normalize(row, pivots[idx])
        supports[idx] = _support(row)
    rows.append(vec)
    pivots.append(p)
    supports.append(supp)
    return p


def rref_int(matrix, ncols):
    """Reduced echelon form of an integer matrix, rows sorted by pivot."""
    rows, pivots, supports = [], [], []
    for r in matrix:
        insert_row(r, rows, pivots, supports)
    order = sorted(range(len(rows)), key=pivots.__getitem__)
    return [rows[i] for i in order], [pivots[i] for i in order]
