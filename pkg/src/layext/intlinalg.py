"""Exact integer linear algebra on small dense matrices.

Matrices are lists of rows of Python ints; vectors are row vectors.  The
routines here back the lattice computations: Hermite form for canonical
lattice bases and membership, Smith form with unimodular transforms for
quotient-group structure, kernels and integer linear solving.  Everything is
deterministic: pivots are chosen as the smallest absolute nonzero entry,
scanning top-to-bottom then left-to-right, and diagonal entries are
normalized positive.
"""

from __future__ import annotations

from fractions import Fraction

Vec = tuple[int, ...]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b) -> list[list[int]]:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(ra[k] * b[k][j] for k in range(len(ra))) for j in range(cols)] for ra in a]


def vec_mat(v, a) -> list[int]:
    """Row vector times matrix."""
    if not a:
        return []
    cols = len(a[0])
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(cols)]


def det(a) -> int:
    """Determinant via fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _echelon(rows, ncols, payload):
    """Row-style Hermite reduction; returns (rows, payload, zero_payloads).

    Row operations are unimodular, so the row span is preserved and the
    payload column (if any) is carried along linearly.  `zero_payloads`
    collects the payload values of rows that reduced to zero; for a
    consistent payload they must all vanish.
    """
    rows = [list(r) for r in rows]
    pay = list(payload) if payload is not None else None
    m = len(rows)
    top = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(top, m) if rows[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(rows[i][col]), i))
            if i0 != top:
                rows[top], rows[i0] = rows[i0], rows[top]
                if pay is not None:
                    pay[top], pay[i0] = pay[i0], pay[top]
            p = rows[top][col]
            done = True
            for i in range(top + 1, m):
                if rows[i][col] != 0:
                    q = rows[i][col] // p
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[top])]
                    if pay is not None:
                        pay[i] -= q * pay[top]
                    if rows[i][col] != 0:
                        done = False
            if done:
                break
        if top < m and rows[top][col] != 0:
            if rows[top][col] < 0:
                rows[top] = [-x for x in rows[top]]
                if pay is not None:
                    pay[top] = -pay[top]
            p = rows[top][col]
            for i in range(top):
                q = rows[i][col] // p
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[top])]
                    if pay is not None:
                        pay[i] -= q * pay[top]
            top += 1
            if top == m:
                break
    basis = [tuple(r) for r in rows[:top]]
    betas = pay[:top] if pay is not None else None
    zero_pay = pay[top:] if pay is not None else []
    return basis, betas, zero_pay


def hnf(rows, ncols: int) -> tuple[Vec, ...]:
    """Hermite normal form of the lattice spanned by the given rows.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot); zero rows are dropped.
    """
    basis, _, _ = _echelon(rows, ncols, None)
    return tuple(basis)


def hnf_with_payload(rows, ncols: int, payload):
    """Hermite form carrying a parallel column of Fractions through the row ops."""
    basis, betas, zero_pay = _echelon(rows, ncols, list(payload))
    return tuple(basis), tuple(betas), tuple(zero_pay)


def pivot_columns(basis) -> list[int]:
    return [next(j for j, x in enumerate(row) if x != 0) for row in basis]


def reduce_by_hnf(vec, basis, betas=None):
    """Reduce a vector by an HNF basis; returns (remainder, payload_combination).

    The remainder is zero iff the vector lies in the lattice, in which case the
    payload combination is the payload value of the vector.
    """
    v = list(vec)
    acc = Fraction(0)
    for idx, row in enumerate(basis):
        col = next(j for j, x in enumerate(row) if x != 0)
        q = v[col] // row[col]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
            if betas is not None:
                acc += q * betas[idx]
    return tuple(v), acc


def kernel(rows, ncols: int) -> tuple[Vec, ...]:
    """Basis of the left kernel {x : x·A = 0} of the matrix with the given rows."""
    m = len(rows)
    if m == 0:
        return ()
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    red, _, _ = _echelon(aug, ncols + m, None)
    ker = [tuple(r[ncols:]) for r in red if all(x == 0 for x in r[:ncols])]
    return hnf(ker, m)


def smith(rows, ncols: int):
    """Smith normal form: returns (U, diag, V) with U·A·V diagonal.

    U and V are unimodular; diag lists the min(m, ncols) diagonal entries,
    non-negative and satisfying the divisibility chain d1 | d2 | ...
    """
    m = len(rows)
    a = [list(r) for r in rows]
    u = identity(m)
    v = identity(ncols)

    def row_sub(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < m and t < ncols:
        # smallest absolute nonzero entry of the trailing submatrix
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, ncols):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best = x
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        if a[t][t] < 0:
            row_neg(t)
        restart = False
        p = a[t][t]
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // p
                row_sub(i, t, q)
                if a[i][t]:
                    restart = True
        if restart:
            continue
        for j in range(t + 1, ncols):
            if a[t][j]:
                q = a[t][j] // p
                col_sub(j, t, q)
                if a[t][j]:
                    restart = True
        if restart:
            continue
        # pivot row/column are clear; enforce divisibility on the rest
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, ncols):
                if a[i][j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_sub(t, offender, -1)  # add the offending row, then redo the pivot
            continue
        t += 1

    diag = [a[i][i] for i in range(min(m, ncols))]
    return u, diag, v


def solve_left(rows, ncols: int, target) -> Vec | None:
    """Solve x·A = target for an integer row vector x, or return None."""
    m = len(rows)
    if m == 0:
        return () if all(x == 0 for x in target) else None
    u, diag, v = smith(rows, ncols)
    bv = vec_mat(list(target), v)
    y = [0] * m
    for j in range(ncols):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            if bv[j] != 0:
                return None
        else:
            if bv[j] % d != 0:
                return None
            y[j] = bv[j] // d
    return tuple(vec_mat(y, u))


def invert_unimodular(mat) -> list[list[int]]:
    """Inverse of a unimodular integer matrix (exact, result is integral)."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            x = aug[i][n + j]
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(x))
        inv.append(row)
    return inv
