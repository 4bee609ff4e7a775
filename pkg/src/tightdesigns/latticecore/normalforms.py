"""Integer row reduction (Hermite), Smith normal form with transforms, and
exact rational matrix helpers. Matrices are lists of rows."""

from __future__ import annotations

from fractions import Fraction


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A):
    return [list(r) for r in zip(*A)]


def hermite_rows(M: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix; zero rows dropped.

    Pivot column is the first column with a nonzero entry among the
    remaining rows; the pivot row is the one with minimal absolute entry
    there. Pivots are made positive and entries above them reduced into
    ``[0, pivot)``.
    """
    rows = [list(r) for r in M if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        nonzero = [r for r in rows if r[col]]
        if not nonzero:
            col += 1
            continue
        while len(nonzero) > 1:
            pivot = min(nonzero, key=lambda r: abs(r[col]))
            for r in nonzero:
                if r is not pivot:
                    q = r[col] // pivot[col]
                    for j in range(col, ncols):
                        r[j] -= q * pivot[j]
            rows = [r for r in rows if any(r)]
            nonzero = [r for r in rows if r[col]]
        pivot = nonzero[0]
        rows = [r for r in rows if r is not pivot]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        for b in basis:
            q = b[col] // pivot[col]
            if q:
                for j in range(col, ncols):
                    b[j] -= q * pivot[j]
        basis.append(pivot)
        col += 1
    return basis


def smith_normal_form(A: list[list[int]]):
    """Return ``(diag, U, V)`` with ``U A V`` diagonal, U and V unimodular.

    ``diag`` lists the diagonal (nonnegative, each dividing the next).
    """
    m, n = len(A), len(A[0])
    S = [list(r) for r in A]
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        S[dst] = [a - q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col dst -= q * col src
        for M in (S, V):
            for r in M:
                r[dst] -= q * r[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            done = True
            for i in range(t + 1, m):
                q = S[i][t] // S[t][t]
                if q:
                    add_row(i, t, q)
                if S[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = S[t][j] // S[t][t]
                if q:
                    add_col(j, t, q)
                if S[t][j]:
                    done = False
            if not done:
                continue
            # divisibility: fold a non-multiple into row t
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % S[t][t]), None)
            if bad is None:
                break
            S[t] = [a + b for a, b in zip(S[t], S[bad[0]])]
            U[t] = [a + b for a, b in zip(U[t], U[bad[0]])]
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return [S[i][i] for i in range(min(m, n))], U, V


def rational_det(M) -> Fraction:
    A = [[Fraction(x) for x in r] for r in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return det


def rational_inverse(M) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return [r[n:] for r in A]
