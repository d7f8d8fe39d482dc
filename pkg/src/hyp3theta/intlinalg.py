"""Exact integer and rational linear algebra: Hermite normal form, integer
kernels, rational RREF.

Matrices are lists of lists of Python ints / Fractions; everything is
arbitrary precision.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def hermite_normal_form(mat):
    """Row-style HNF with transformation: returns (H, U) with U unimodular
    and U @ mat == H, H in row echelon form with nonnegative pivots."""
    m = [list(map(int, row)) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]

    def addrow(i, j, c):
        # row_i += c * row_j
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]

    def swap(i, j):
        m[i], m[j] = m[j], m[i]
        U[i], U[j] = U[j], U[i]

    def negate(i):
        m[i] = [-a for a in m[i]]
        U[i] = [-a for a in U[i]]

    r = 0
    for c in range(cols):
        # gcd out the column below row r
        while True:
            nz = [i for i in range(r, rows) if m[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(m[i][c]))
            swap(r, piv)
            done = True
            for i in range(r + 1, rows):
                if m[i][c] != 0:
                    addrow(i, r, -(m[i][c] // m[r][c]))
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if r < rows and m[r][c] != 0:
            if m[r][c] < 0:
                negate(r)
            for i in range(r):
                if m[i][c] % m[r][c] != 0 or m[i][c] != 0:
                    addrow(i, r, -(m[i][c] // m[r][c]))
            r += 1
            if r == rows:
                break
    return m, U


def integer_kernel(mat):
    """Basis of the integer kernel {x in Z^n : mat @ x = 0} for a matrix with
    Fraction or int entries.  The basis generates the full (saturated) kernel
    lattice; computed from the HNF transformation of the transpose."""
    rows = [list(r) for r in mat]
    if not rows:
        raise ValueError("empty matrix")
    n = len(rows[0])
    # clear denominators row by row
    cleared = []
    for r in rows:
        den = lcm(*[Fraction(x).denominator for x in r]) if r else 1
        cleared.append([int(Fraction(x) * den) for x in r])
    # transpose: n x k; row-kernel of the transpose = kernel of mat
    t = [[cleared[i][j] for i in range(len(cleared))] for j in range(n)]
    H, U = hermite_normal_form(t)
    basis = [U[i] for i in range(n) if all(x == 0 for x in H[i])]
    return basis


def rational_rank(mat) -> int:
    m = [[Fraction(x) for x in row] for row in mat]
    rows, cols = len(m), len(m[0]) if m else 0
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][c]
        m[rank] = [x / inv for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def fraction_matmul(a, b):
    return [
        [sum(Fraction(a[i][k]) * Fraction(b[k][j]) for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def fraction_inverse(a):
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c]
        aug[c] = [x / inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def is_unimodular(mat) -> bool:
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return False
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = m[c][c]
        m[c] = [x / inv for x in m[c]]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return abs(det) == 1
