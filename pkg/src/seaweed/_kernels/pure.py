"""Pure-Python integer elimination kernels.

Reference implementation of the hot loops behind determinant, rank, and kernel
computations. The compiled twin in ``_fast.pyx`` mirrors these signatures
exactly; this module is the fallback (and the ground truth the backend parity
tests compare against). Everything here works on plain ``list[list[int]]`` and
never mutates its arguments.

The elimination scheme is fraction-free (Bareiss): the update

    a[i][j] <- (a[i][j] * pivot - a[i][k] * a[k][j]) // prev_pivot

keeps every intermediate entry an exact k x k minor of the input, so the
division is exact and entries stay integers of bounded size instead of
exploding into rationals.
"""
from __future__ import annotations

BACKEND = "pure"


def det_int(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (empty matrix -> 1)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        rowk = a[k]
        pv = rowk[k]
        for i in range(k + 1, n):
            rowi = a[i]
            f = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pv - f * rowk[j]) // prev
            rowi[k] = 0
        prev = pv
    return sign * a[n - 1][n - 1]


def echelon_int(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form and the list of pivot columns.

    Column skipping preserves the exact-division property: a skipped column is
    zero below the current row from that point on, so the elimination is the
    Bareiss recurrence on the surviving column submatrix.
    """
    a = [row[:] for row in rows]
    n = len(a)
    m = len(a[0]) if n else 0
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(m):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        rowr = a[r]
        pv = rowr[c]
        for i in range(r + 1, n):
            rowi = a[i]
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


def rank_int(rows: list[list[int]]) -> int:
    """Exact rank over the rationals of an integer matrix."""
    if not rows:
        return 0
    return len(echelon_int(rows)[1])


def rank_mod(rows: list[list[int]], p: int) -> int:
    """Rank of the matrix reduced mod the prime p.

    Always a lower bound for the rational rank: a pivot chain mod p exhibits a
    minor that is nonzero mod p, hence nonzero over Q. Callers exploit this for
    certified early answers (see the index oracle).
    """
    a = [[x % p for x in row] for row in rows]
    n = len(a)
    m = len(a[0]) if n else 0
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        rowr = a[r]
        inv = pow(rowr[c], p - 2, p)
        for i in range(r + 1, n):
            f = a[i][c]
            if f:
                f = f * inv % p
                rowi = a[i]
                for j in range(c, m):
                    rowi[j] = (rowi[j] - f * rowr[j]) % p
        r += 1
        if r == n:
            break
    return r
