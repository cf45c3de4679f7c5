# cython: boundscheck=False, wraparound=False
"""Compiled twin of ``pure.py``.

The bigint routines (det_int, echelon_int, rank_int) still hold Python ints --
exactness is the whole point -- so the speedup there comes from typed loop
machinery, not from C arithmetic. rank_mod is the exception: entries fit in 64
bits once reduced mod p < 2^31, so its inner loop runs entirely in C.
"""
from libc.stdlib cimport malloc, free

BACKEND = "compiled"


def det_int(rows):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t i, j, k, piv
    cdef int sign = 1
    cdef list rowk, rowi
    prev = 1
    for k in range(n - 1):
        rowk = <list>a[k]
        if rowk[k] == 0:
            piv = -1
            for i in range(k + 1, n):
                if (<list>a[i])[k] != 0:
                    piv = i
                    break
            if piv < 0:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
            rowk = <list>a[k]
        pv = rowk[k]
        for i in range(k + 1, n):
            rowi = <list>a[i]
            f = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pv - f * rowk[j]) // prev
            rowi[k] = 0
        prev = pv
    if sign > 0:
        return (<list>a[n - 1])[n - 1]
    return -(<list>a[n - 1])[n - 1]


def echelon_int(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t m = len(rows[0]) if n else 0
    cdef list a = [list(row) for row in rows]
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list rowr, rowi
    prev = 1
    for c in range(m):
        piv = -1
        for i in range(r, n):
            if (<list>a[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        rowr = <list>a[r]
        pv = rowr[c]
        for i in range(r + 1, n):
            rowi = <list>a[i]
            f = rowi[c]
            for j in range(c + 1, m):
                rowi[j] = (rowi[j] * pv - f * rowr[j]) // prev
            rowi[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
        if r == n:
            break
    return a, pivots


def rank_int(rows):
    if not rows:
        return 0
    return len(echelon_int(rows)[1])


def rank_mod(rows, p):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t m = len(rows[0]) if n else 0
    if n == 0 or m == 0:
        return 0
    cdef long long pp = p
    cdef long long *a = <long long *>malloc(n * m * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, r, piv
    cdef long long f, inv
    try:
        for i in range(n):
            row = rows[i]
            for j in range(m):
                a[i * m + j] = row[j] % pp
        r = 0
        for c in range(m):
            piv = -1
            for i in range(r, n):
                if a[i * m + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(m):
                    a[r * m + j], a[piv * m + j] = a[piv * m + j], a[r * m + j]
            inv = <long long>pow(a[r * m + c], p - 2, p)
            for i in range(r + 1, n):
                f = a[i * m + c]
                if f != 0:
                    f = f * inv % pp
                    for j in range(c, m):
                        a[i * m + j] = (a[i * m + j] - f * a[r * m + j]) % pp
                        if a[i * m + j] < 0:
                            a[i * m + j] += pp
            r += 1
            if r == n:
                break
        return r
    finally:
        free(a)
