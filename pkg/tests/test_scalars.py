from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from staticdisp.scalars import (IncompatibleFieldError, QuadNum, as_exact, close, format_decimal,
                                format_exact, get_tolerance, parse_exact, quad_sqrt, rat_normalize,
                                rational_sqrt, set_tolerance, squarefree_part)

rats = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 50))


def sym(q: QuadNum):
    return sp.Rational(q.a.numerator, q.a.denominator) + \
        sp.Rational(q.b.numerator, q.b.denominator) * sp.sqrt(q.d)


def test_tolerance_roundtrip():
    old = get_tolerance()
    try:
        set_tolerance(1e-6)
        assert close(1.0, 1.0 + 1e-7)
        with pytest.raises(ValueError):
            set_tolerance(-1)
    finally:
        set_tolerance(old)


def test_rat_normalize_and_squarefree():
    assert rat_normalize(4, -6) == Fraction(-2, 3)
    with pytest.raises(ZeroDivisionError):
        rat_normalize(1, 0)
    assert squarefree_part(20) == (2, 5)
    with pytest.raises(ValueError):
        squarefree_part(-12)
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None


@given(rats, rats, rats, rats)
def test_quad_field_ops_match_sympy(a, b, c, e):
    x, y = QuadNum(a, b, 5), QuadNum(c, e, 5)
    for ours, theirs in ((x + y, sym(x) + sym(y)), (x - y, sym(x) - sym(y)), (x * y, sym(x) * sym(y))):
        ours = ours if isinstance(ours, QuadNum) else QuadNum(ours, 0, 5)
        assert sp.simplify(sym(ours) - theirs) == 0
    if a or b:
        inv = x.inverse()
        assert x * inv == 1


@given(rats, rats)
def test_sign_is_exact(a, b):
    x = QuadNum(a, b, 5)
    s = x.sign()
    ref = sp.sign(sym(x))
    assert s == int(ref)


def test_norm_and_conj():
    phi = QuadNum(Fraction(1, 2), Fraction(1, 2), 5)
    assert phi.norm() == Fraction(-1)
    assert phi * phi.conj() == -1
    assert phi * phi == phi + 1


def test_mixed_radicands_rejected():
    with pytest.raises(IncompatibleFieldError):
        QuadNum(1, 1, 5) + QuadNum(1, 1, 3)


def test_quad_sqrt_in_field():
    r = quad_sqrt(QuadNum(Fraction(3, 2), Fraction(1, 2), 5))   # phi^2
    assert r is not None and r * r == QuadNum(Fraction(3, 2), Fraction(1, 2), 5)
    assert quad_sqrt(Fraction(2)) is None
    assert quad_sqrt(Fraction(8), 2) == QuadNum(0, 2, 2)


def test_formatting():
    assert format_exact(Fraction(-3, 4)) == "-3/4"
    assert format_exact(QuadNum(2, 1, 5)) == "2+sqrt(5)"
    assert as_exact(QuadNum(Fraction(1, 3), 0, 5)) == Fraction(1, 3)
    assert parse_exact("  -7/21 ") == Fraction(-1, 3)
    assert format_decimal(None) == "inf"
    assert float(format_decimal(Fraction(1, 3))) == 1 / 3
