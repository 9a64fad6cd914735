# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``.

Same contracts, same canonical output: ``rref_fp`` runs on C int64 arithmetic
when the modulus fits (products stay below 2**62), ``rref_int`` keeps Python
arbitrary-precision integers but with typed loops.  See ``_pykernels`` for the
contract documentation.
"""

from libc.stdlib cimport free, malloc

from math import gcd

from homalg import _pykernels


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rref_fp(list rows, p):
    if 1 < p < (1 << 31):
        return _rref_fp_small(rows, p)
    return _pykernels.rref_fp(rows, p)


cdef _rref_fp_small(list rows, long long p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return [], []
    cdef Py_ssize_t ncols = len(<list>rows[0])
    if ncols == 0:
        return [], []
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, i, col, rank = 0, piv
    cdef long long b, v, inv
    cdef list row, out
    pivots = []
    try:
        for r in range(nrows):
            row = <list> rows[r]
            for i in range(ncols):
                m[r * ncols + i] = row[i]
        for col in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if m[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for i in range(ncols):
                    v = m[rank * ncols + i]
                    m[rank * ncols + i] = m[piv * ncols + i]
                    m[piv * ncols + i] = v
            inv = _inv_mod(m[rank * ncols + col], p)
            if inv != 1:
                for i in range(col, ncols):
                    if m[rank * ncols + i] != 0:
                        m[rank * ncols + i] = m[rank * ncols + i] * inv % p
            for r in range(nrows):
                if r == rank:
                    continue
                b = m[r * ncols + col]
                if b != 0:
                    for i in range(col, ncols):
                        v = m[rank * ncols + i]
                        if v != 0:
                            v = (m[r * ncols + i] - b * v) % p
                            if v < 0:
                                v += p
                            m[r * ncols + i] = v
            pivots.append(col)
            rank += 1
            if rank == nrows:
                break
        out = []
        for r in range(rank):
            out.append([m[r * ncols + i] for i in range(ncols)])
        return out, pivots
    finally:
        free(m)


def row_primitive_int(list row):
    cdef Py_ssize_t i, n = len(row)
    g = 0
    lead = 0
    cdef object v
    for i in range(n):
        v = row[i]
        if v:
            if lead == 0:
                lead = v
            g = gcd(g, v)
            if g == 1 and lead > 0:
                return row
    if g == 0:
        return row
    if lead < 0:
        g = -g
    if g != 1:
        for i in range(n):
            v = row[i]
            if v:
                row[i] = v // g
    return row


def rref_int(list rows):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return [], []
    cdef Py_ssize_t ncols = len(<list>rows[0])
    cdef Py_ssize_t rank = 0, col, r, i, piv
    cdef list row, prow
    cdef object a, b, g, ma, mb, v, best
    pivots = []
    for col in range(ncols):
        piv = -1
        best = 0
        for r in range(rank, nrows):
            v = (<list>rows[r])[col]
            if v:
                a = -v if v < 0 else v
                if piv < 0 or a < best:
                    piv = r
                    best = a
                    if a == 1:
                        break
        if piv < 0:
            continue
        if piv != rank:
            row = <list> rows[rank]
            rows[rank] = rows[piv]
            rows[piv] = row
        prow = row_primitive_int(<list> rows[rank])
        a = prow[col]
        for r in range(nrows):
            if r == rank:
                continue
            row = <list> rows[r]
            b = row[col]
            if not b:
                continue
            g = gcd(a, b)
            ma = a // g
            mb = b // g
            if ma == 1:
                for i in range(col, ncols):
                    v = prow[i]
                    if v:
                        row[i] = row[i] - mb * v
            else:
                for i in range(ncols):
                    row[i] = ma * row[i] - mb * prow[i]
            row_primitive_int(row)
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rows[:rank], pivots
