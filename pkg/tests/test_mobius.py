from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from staticdisp.crossing import CrossingMatrix, from_label, reduced_two_row, su2_two_row
from staticdisp.mobius import (DegenerateMapError, MobiusMap, ProjPoint, crossing_mobius,
                               flow_apply, induced_mobius, mobius_classify, mobius_eigenvalues,
                               mobius_power, sheet_coordinate, x0_candidates)

TWO_ROW = [f"su2:l={l}" for l in range(1, 7)] + ["p33-reduced"]


def test_induced_map_two_row():
    M = induced_mobius(su2_two_row(1))
    assert M.projectively_equal(MobiusMap(((2, 1), (-1, 4))))
    assert mobius_classify(M) == "parabolic"
    assert mobius_classify(induced_mobius(reduced_two_row())) == "hyperbolic"


def test_hyperbolic_eigenvalues():
    lp, lm = mobius_eigenvalues(induced_mobius(reduced_two_row()))
    assert float(lp) > float(lm)
    assert lp * lm == induced_mobius(reduced_two_row()).det


def test_degenerate_map():
    with pytest.raises(DegenerateMapError):
        mobius_classify(MobiusMap(((1, 2), (2, 4))))


@pytest.mark.parametrize("label", TWO_ROW)
@given(a=st.integers(-12, 12), b=st.integers(-12, 12))
def test_semigroup_law(label, a, b):
    M = induced_mobius(from_label(label))
    assert mobius_power(M, a + b).projectively_equal(mobius_power(M, a) @ mobius_power(M, b))


@pytest.mark.parametrize("label", TWO_ROW)
def test_power_matches_iteration(label):
    M = induced_mobius(from_label(label))
    P = MobiusMap(((1, 0), (0, 1)))
    for n in range(8):
        assert mobius_power(M, n).projectively_equal(P)
        P = M @ P


@pytest.mark.parametrize("label", TWO_ROW)
@given(n=st.integers(-30, 30))
def test_ladders(label, n):
    A = from_label(label)
    a = crossing_mobius(A)
    for cand in x0_candidates(A):
        xn = sheet_coordinate(A, cand.x, n)
        assert sheet_coordinate(A, cand.x, 1 - n) == xn.reciprocal()
        assert sheet_coordinate(A, cand.x, -n) == a(xn)


def test_projective_points():
    assert ProjPoint(3, 0) == ProjPoint.INF
    assert ProjPoint.of("inf").is_infinite
    assert ProjPoint(Fraction(2, 4)) == ProjPoint.of("1/2")
    assert ProjPoint(0).reciprocal().is_infinite
    assert str(ProjPoint.INF) == "inf"


def test_flow_interpolates_integer_powers():
    A = reduced_two_row()
    M = induced_mobius(A)
    for x0 in (2, -4):
        for n in range(-3, 4):
            exact = sheet_coordinate(A, x0, n)
            flow = flow_apply(M, n, x0)
            if exact.is_infinite:
                assert flow is None or abs(flow) > 1e10
            else:
                assert abs(flow - float(exact.value)) < 1e-9


def test_x0_candidates():
    xs = {c.x for c in x0_candidates(reduced_two_row())}
    assert xs == {ProjPoint(-4), ProjPoint(2)}
    su2 = {c.x: c for c in x0_candidates(su2_two_row(1))}
    assert su2[ProjPoint(1)].tag.startswith("trivial")
    assert ProjPoint(-2) in su2


def test_general_l_start():
    for l in range(1, 6):
        assert ProjPoint(-(1 + Fraction(1, l))) in {c.x for c in x0_candidates(su2_two_row(l))}


@pytest.mark.parametrize("label", TWO_ROW)
def test_inverse_map(label):
    M = induced_mobius(from_label(label))
    assert (M @ M.inverse()).projectively_equal(MobiusMap(((1, 0), (0, 1))))
    with pytest.raises(DegenerateMapError):
        MobiusMap(((1, 2), (2, 4))).inverse()
