"""Smith normal form over the integers with transform matrices.

Pure arbitrary-precision integer arithmetic; no floating point anywhere.
Pivots are chosen by minimal absolute value to limit entry growth.
"""

from __future__ import annotations

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            e = ai[k]
            if e:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] += e * bk[j]
    return out


def determinant(m: Matrix) -> int:
    """Fraction-free Bareiss determinant; exact for integer matrices."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def is_unimodular(m: Matrix) -> bool:
    return abs(determinant(m)) == 1


def _swap_rows(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: Matrix, dst: int, src: int, factor: int) -> None:
    # row[dst] += factor * row[src]
    msrc = m[src]
    mdst = m[dst]
    for j in range(len(mdst)):
        mdst[j] += factor * msrc[j]


def _add_col(m: Matrix, dst: int, src: int, factor: int) -> None:
    for row in m:
        row[dst] += factor * row[src]


def _negate_row(m: Matrix, i: int) -> None:
    m[i] = [-x for x in m[i]]


def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*m*V == D, U and V unimodular, D diagonal
    with nonnegative entries satisfying d1 | d2 | ... along the diagonal.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[int(x) for x in row] for row in m]
    u = identity(rows)
    v = identity(cols)

    t = 0
    while t < min(rows, cols):
        # pick the nonzero entry of smallest magnitude in the trailing block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (pivot is None or abs(x) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            _swap_rows(a, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(a, t, pj)
            _swap_cols(v, t, pj)

        while True:
            # clear the pivot column with Euclidean steps
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                    if a[i][t]:
                        _swap_rows(a, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                    if a[t][j]:
                        _swap_cols(a, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
            if dirty:
                continue
            # force the pivot to divide the rest of the block
            offender = None
            d = a[t][t]
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)

        if a[t][t] < 0:
            _negate_row(a, t)
            _negate_row(u, t)
        t += 1

    return u, a, v


def diagonal(d: Matrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def invariant_factors(m: Matrix) -> list[int]:
    """Diagonal of the Smith form, without the transform matrices."""
    _, d, _ = smith_normal_form(m)
    return diagonal(d)
