from fractions import Fraction

import sympy as sp
from hypothesis import given, strategies as st

from staticdisp.matrices import (det, identity, inverse, mat_mul, mat_pow, mat_vec, nullspace, rref,
                                 to_matrix, transpose)

small = st.integers(-6, 6)
mats = st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3)


@given(mats)
def test_det_against_sympy(m):
    assert det(to_matrix(m)) == sp.Matrix(m).det()


@given(mats)
def test_inverse_roundtrip(m):
    M = to_matrix(m)
    if det(M) == 0:
        return
    assert mat_mul(M, inverse(M)) == identity(3)


@given(mats)
def test_nullspace_vectors_are_in_kernel(m):
    M = to_matrix(m)
    ns = nullspace(M)
    assert len(ns) == 3 - sp.Matrix(m).rank()
    for v in ns:
        assert all(x == 0 for x in mat_vec(M, v))


def test_nullspace_column_order_controls_free_variables():
    M = to_matrix([[1, 1, 1]])
    default = nullspace(M)
    rev = nullspace(M, column_order=[2, 1, 0])
    assert len(default) == len(rev) == 2
    # pivot on the last column; free columns come out in the requested order
    assert rev[0] == (0, 1, -1) and rev[1] == (1, 0, -1)


def test_rref_and_powers():
    R, piv = rref(to_matrix([[2, 4], [1, 3]]))
    assert [tuple(r) for r in R] == [tuple(r) for r in identity(2)] and list(piv) == [0, 1]
    A = to_matrix([[1, 1], [0, 1]])
    assert mat_pow(A, 5) == to_matrix([[1, 5], [0, 1]])
    assert mat_pow(mat_pow(A, 3), 2) == mat_pow(A, 6)
    assert transpose(A) == to_matrix([[1, 0], [1, 1]])
    assert mat_vec(A, (Fraction(1, 2), 1)) == (Fraction(3, 2), 1)
