"""Integer Smith normal form with exact unimodular transforms.

Used to enumerate the torus solutions of monomial equations: for a
nonsingular integer matrix A the cosets of A Z^n inside Z^n are exactly
|det A| many, and the diagonalization U A V = S lists them constructively.
Plain Python ints throughout, so there is no overflow.
"""

from __future__ import annotations


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (U, S, V) with U A V = S, U and V unimodular, S diagonal >= 0.

    The diagonal satisfies the usual divisibility chain s_1 | s_2 | ... .
    """
    a = [[int(x) for x in row] for row in matrix]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    u = _identity(n_rows)
    v = _identity(n_cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        # row_dst += factor * row_src
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, factor):
        for row in a:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    size = min(n_rows, n_cols)
    for s in range(size):
        while True:
            # move a least-magnitude nonzero pivot to (s, s)
            pivot = None
            best = None
            for i in range(s, n_rows):
                for j in range(s, n_cols):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                        best = abs(a[i][j])
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != s:
                swap_rows(s, pi)
            if pj != s:
                swap_cols(s, pj)
            if a[s][s] < 0:
                negate_row(s)
            done = True
            for i in range(s + 1, n_rows):
                if a[i][s] != 0:
                    add_row(s, i, -(a[i][s] // a[s][s]))
                    if a[i][s] != 0:
                        done = False
            for j in range(s + 1, n_cols):
                if a[s][j] != 0:
                    add_col(s, j, -(a[s][j] // a[s][s]))
                    if a[s][j] != 0:
                        done = False
            if not done:
                continue
            # enforce divisibility: fold any bad entry back into the pivot row
            bad = None
            for i in range(s + 1, n_rows):
                for j in range(s + 1, n_cols):
                    if a[i][j] % a[s][s] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, s, 1)
    return u, a, v


def snf_determinant(s: list[list[int]]) -> int:
    det = 1
    for i in range(len(s)):
        det *= s[i][i]
    return det
