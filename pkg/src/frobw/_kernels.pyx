# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer row-elimination kernels.

Same contract as ``_kernels_py``: rows are dense lists of Python ints in
reduced echelon form with positive pivots and unit content.
"""

from math import gcd


cdef void _normalize(list row, Py_ssize_t pivot):
    cdef Py_ssize_t j, n = len(row)
    cdef object g = 0
    cdef object v
    for j in range(n):
        v = row[j]
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if row[pivot] < 0:
        g = -g
    if g != 1:
        for j in range(n):
            v = row[j]
            if v:
                row[j] = v // g


cdef list _support(list row):
    cdef Py_ssize_t j, n = len(row)
    cdef list out = []
    for j in range(n):
        if row[j]:
            out.append(j)
    return out


cpdef list reduce_vector(list vec, list rows, list pivots, list supports):
    cdef Py_ssize_t n = len(vec)
    cdef Py_ssize_t i, j, p, nrows = len(rows)
    cdef list row, supp
    cdef object a, b, g, v
    for i in range(nrows):
        p = pivots[i]
        b = vec[p]
        if not b:
            continue
        row = <list>rows[i]
        supp = <list>supports[i]
        a = row[p]
        g = gcd(a, b)
        a = a // g
        b = b // g
        if a != 1:
            for j in range(n):
                v = vec[j]
                if v:
                    vec[j] = v * a
        for j in supp:
            vec[j] = vec[j] - b * row[j]
    return vec


cpdef Py_ssize_t insert_row(vec, list rows, list pivots, list supports):
    cdef list v = reduce_vector(list(vec), rows, pivots, supports)
    cdef Py_ssize_t n = len(v)
    cdef Py_ssize_t j, idx, p = -1
    cdef list row, supp
    cdef object a, b, g, s, t, x
    for j in range(n):
        if v[j]:
            p = j
            break
    if p < 0:
        return -1
    _normalize(v, p)
    supp = _support(v)
    a = v[p]
    for idx in range(len(rows)):
        row = <list>rows[idx]
        b = row[p]
        if not b:
            continue
        g = gcd(a, b)
        s = a // g
        t = b // g
        for j in range(n):
            x = row[j]
            if x:
                row[j] = x * s
        for j in supp:
            row[j] = row[j] - t * v[j]
        _normalize(row, pivots[idx])
        supports[idx] = _support(row)
    rows.append(v)
    pivots.append(p)
    supports.append(supp)
    return p


def rref_int(matrix, Py_ssize_t ncols):
    cdef list rows = [], pivots = [], supports = []
    for r in matrix:
        insert_row(r, rows, pivots, supports)
    order = sorted(range(len(rows)), key=pivots.__getitem__)
    return [rows[i] for i in order], [pivots[i] for i in order]
