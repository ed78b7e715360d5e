from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from staticdisp.crossing import from_label, three_row_p33
from staticdisp.dynamics import (PoleCrossingError, SheetColumn, apply_crossing, check_printed_rest_points,
                                 continue_sheet, invert, rest_points)
from staticdisp.scalars import QuadNum, as_exact

LABELS = [f"su2:l={l}" for l in range(1, 5)] + ["p33", "p33-reduced"]


def test_sheet_bookkeeping():
    S = SheetColumn((Fraction(2), Fraction(-1)), 0, 0.25)
    T = invert(apply_crossing(S, from_label("su2:l=1")))
    assert T.sheet == 1 and T.z == -0.25
    with pytest.raises(PoleCrossingError) as info:
        invert(SheetColumn((1, 0)))
    assert info.value.index == 2


@given(st.integers(-5, 5))
def test_continuation_inverse_words(p):
    A = from_label("su2:l=1")
    S0 = SheetColumn((Fraction(3), Fraction(5)))
    try:
        S = continue_sheet(continue_sheet(S0, A, p), A, -p)
    except PoleCrossingError:
        return
    assert S.values == S0.values


@pytest.mark.parametrize("label", LABELS)
def test_rest_points_back_substitute(label):
    A = from_label(label)
    for rp in rest_points(A):
        assert rp.verified
        assert all(r == 0 for r in rp.residuals(A))
        col = rp.column()
        AS = [sum(complex(a) * s for a, s in zip(row, col)) for row in A.entries]
        assert max(abs(s * t - 1) for s, t in zip(col, AS)) < 1e-12


def test_p33_nontrivial_points():
    pts = [p for p in rest_points(three_row_p33()) if p.imaginary]
    assert len(pts) == 4
    for p in pts:
        s1, s2, s3 = p.components
        assert as_exact(s2 + s3) == 0
        X = as_exact(s1 / s2)
        assert as_exact(X * X - 7 * X + 1) == 0


def test_printed_pairing_is_flagged():
    checks = check_printed_rest_points(three_row_p33())
    assert checks and not any(c.ok for c in checks)


def test_trivial_points_only_when_double_direction():
    pts = rest_points(from_label("su2:l=1"))
    assert {p.components for p in pts} == {(1, 1), (-1, -1)}


def test_golden_components():
    pts = [p for p in rest_points(three_row_p33()) if p.imaginary]
    assert any(p.components[0] == QuadNum(2, 1, 5) for p in pts)
