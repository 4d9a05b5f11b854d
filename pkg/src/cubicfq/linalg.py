"""Gaussian elimination over a finite field (matrices as lists of rows)."""

from __future__ import annotations

from .gf import FieldSpec


def row_reduce(F: FieldSpec, rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(F: FieldSpec, rows) -> int:
    return len(row_reduce(F, rows)[1])


def nullspace(F: FieldSpec, rows, ncols: int | None = None):
    """Basis of {v : M v = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_reduce(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = F.neg(red[i][f])
        basis.append(v)
    return basis


def det3(F: FieldSpec, m) -> int:
    a, b, c = m
    t1 = F.mul(a[0], F.sub(F.mul(b[1], c[2]), F.mul(b[2], c[1])))
    t2 = F.mul(a[1], F.sub(F.mul(b[0], c[2]), F.mul(b[2], c[0])))
    t3 = F.mul(a[2], F.sub(F.mul(b[0], c[1]), F.mul(b[1], c[0])))
    return F.add(F.sub(t1, t2), t3)


def det(F: FieldSpec, m) -> int:
    n = len(m)
    m = [list(r) for r in m]
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = F.neg(result)
        result = F.mul(result, m[c][c])
        inv = F.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c]:
                f = F.mul(m[i][c], inv)
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[c])]
    return result


def inverse(F: FieldSpec, m):
    n = len(m)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m)]
    red, pivots = row_reduce(F, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def matmul(F: FieldSpec, a, b):
    return [[F.sum(F.mul(a[i][k], b[k][j]) for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def matvec(F: FieldSpec, a, v):
    return [F.sum(F.mul(x, y) for x, y in zip(row, v)) for row in a]


def solve(F: FieldSpec, m, rhs):
    """The unique solution of m x = rhs for square invertible m."""
    return matvec(F, inverse(F, m), rhs)
