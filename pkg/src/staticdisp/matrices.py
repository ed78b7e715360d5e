"""Small dense exact matrices as tuples of rows.

Entries may be any field elements supporting + - * / and ``== 0``
(Fraction, QuadNum, RatFunc).  Sizes here never exceed 5x5, so plain
Gaussian elimination is all that is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple, ...]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    rows = tuple(tuple(Fraction(x) if isinstance(x, (int, str)) else x for x in r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise ValueError(f"shape mismatch {shape(a)} @ {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
                 for row in a)


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    if shape(a)[1] != len(v):
        raise ValueError("shape mismatch in matrix-vector product")
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0) * v[0]) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_pow(a: Matrix, n: int) -> Matrix:
    """Exact power by repeated squaring; negative powers via the inverse."""
    if n < 0:
        a, n = inverse(a), -n
    result = identity(len(a))
    while n:
        if n & 1:
            result = mat_mul(result, a)
        a = mat_mul(a, a)
        n >>= 1
    return result


def det(m: Matrix):
    n = len(m)
    rows = [list(r) for r in m]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        p = rows[c][c]
        result = result * p
        for r in range(c + 1, n):
            f = rows[r][c] / p
            if f != 0:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return result * sign


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(r[n:]) for r in aug)


def rref(m: Matrix, column_order: Sequence[int] | None = None):
    """Reduced row echelon form; returns (rows, pivot columns).

    ``column_order`` sets the order in which columns are tried as pivots,
    which decides which unknowns end up free in :func:`nullspace`.
    """
    rows = [list(r) for r in m]
    ncols = shape(m)[1]
    order = list(column_order) if column_order is not None else list(range(ncols))
    pivots = []
    r = 0
    for c in order:
        if r >= len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace(m: Matrix, column_order: Sequence[int] | None = None) -> list[tuple]:
    """Basis of the right kernel; one vector per free column, that entry set to 1."""
    ncols = shape(m)[1]
    rows, pivots = rref(m, column_order)
    order = list(column_order) if column_order is not None else list(range(ncols))
    free = [c for c in order if c not in pivots]
    zero = Fraction(0)
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)
