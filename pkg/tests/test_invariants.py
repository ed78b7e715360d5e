import time
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from staticdisp.crossing import extend_block, su2_two_row, three_row_p33
from staticdisp.invariants import (CONIC_TWO_ROW, SacBasis, act_inversion, act_linear,
                                   bundle_parameter, bundle_second_intersection, coords,
                                   curve_certificate, eliminate_linear, factor_low_degree,
                                   invariant_planes, is_invariant_hypersurface, normalize_params,
                                   odd_even_parts, ratio_from_conic, restrict_to_rest_point,
                                   solve_invariance_params, two_row_invariant)
from staticdisp.polynomials import Poly, RatFunc, parse_poly

X3 = coords(3)
X4 = coords(4)


@st.composite
def forms(draw, n=3, deg=2):
    from staticdisp.polynomials import all_monomials
    mons = all_monomials(coords(n), deg)
    terms = {m: draw(st.integers(-3, 3)) for m in draw(st.lists(st.sampled_from(mons), min_size=1, max_size=4))}
    return Poly(coords(n), terms)


def test_conic_under_inversion():
    res = is_invariant_hypersurface(CONIC_TWO_ROW, act_inversion(CONIC_TWO_ROW))
    assert res.invariant and res.cofactor == parse_poly("-x0*x2", X3)


def test_conic_under_extended_crossing():
    B = extend_block(su2_two_row(1))
    res = is_invariant_hypersurface(CONIC_TWO_ROW, act_linear(CONIC_TWO_ROW, B, X3))
    assert res.invariant and res.cofactor == 1


@given(forms())
def test_involutions_act_as_involutions(F):
    if F.is_zero():
        return
    B = extend_block(su2_two_row(1))
    assert act_linear(act_linear(F, B, X3), B, X3) == F
    twice = act_inversion(act_inversion(F, X3), X3)
    assert F.divides(twice)
    assert len(twice.exact_div(F).terms) == 1      # a monomial cofactor


def test_sac_form_of_conic():
    basis = SacBasis()
    G = basis.to_basis(CONIC_TWO_ROW)
    odd, even = odd_even_parts(G, basis.odd)
    assert odd.is_zero()
    s, a, c = (Poly.var(v, G.vars) for v in ("s", "a", "c"))
    assert even == 3 * s ** 2 - 3 * s * c - 3 * a ** 2
    assert basis.from_basis(G) == CONIC_TWO_ROW


def test_ratio_recovery():
    n = RatFunc.var()
    assert ratio_from_conic(CONIC_TWO_ROW, (n - 2) / (n + 1)) == n / (n - 1)


def test_bundle():
    q1 = bundle_second_intersection(CONIC_TWO_ROW, (0, 0), 1)
    q0 = bundle_second_intersection(CONIC_TWO_ROW, (0, 0), 0)
    assert q1 == (1, 1) and q0 == (2, 0)
    n = RatFunc.var()
    k = bundle_parameter((0, 0))
    x, y = bundle_second_intersection(CONIC_TWO_ROW, (0, 0), k)
    assert x == n / (n - 1)
    assert y == (n * n - 2 * n) / (n * n - 1)


def test_plane_families():
    fams = {f.mu: f for f in invariant_planes(extend_block(three_row_p33()), X4)}
    assert set(fams) == {1, -1}
    assert fams[1].plane.format() == "x0*c0 + x1*c1 + 2*x2*c0 + x2*c1 + x3*c2"
    rp = restrict_to_rest_point(fams[1])
    assert rp == parse_poly("c0*x0 + c1*x1 + (2*c0 + c1)*x2 - (3*c0 + 2*c1)*x3",
                                  rp.vars)


def test_eliminate_linear():
    plane = parse_poly("x0 + x1 - x3", X4)
    surf = parse_poly("x3^2 - x0*x1", X4)
    out = eliminate_linear(plane, surf, "x3")
    assert out.degree("x3") == 0
    assert out == (parse_poly("x0^2 + x0*x1 + x1^2", X4)).primitive()


@given(forms(deg=1), forms(deg=1), forms(deg=1))
def test_factorization_remultiplies(a, b, c):
    F = a * b * c
    if F.is_zero():
        return
    fac = factor_low_degree(F, X3)
    assert fac.expand() == F


def test_factorization_oracle():
    F = parse_poly("x0^2*x1 - x1^3", X3)
    fac = factor_low_degree(F, X3)
    assert len(fac.factors) == 3 and fac.irreducible is None
    sfac = sp.factor_list(sp.sympify("x0**2*x1 - x1**3"))
    assert sum(k for _, k in sfac[1]) == 3
    assert factor_low_degree(CONIC_TWO_ROW, X3).irreducible is not None


def test_pipeline_solution_and_budget():
    t0 = time.perf_counter()
    sol = solve_invariance_params(three_row_p33())
    assert time.perf_counter() - t0 < 60
    assert sol.solutions == [(Fraction(-1), Fraction(3))]
    assert not sol.identically_zero
    kinds = {c.params: c.kind for c in sol.candidates}
    assert kinds[(Fraction(-1), Fraction(3))] == "conic and line"


def test_pipeline_factors_and_curve():
    sol = solve_invariance_params(three_row_p33())
    cand = next(c for c in sol.candidates if c.params == (-1, 3))
    want_line = parse_poly("x0 - x2", cand.G.vars)
    assert any(f == want_line or f == -want_line for f in cand.factorization.factors)
    conic = cand.factorization.irreducible
    assert conic.primitive() == parse_poly("x0*x1 + 3*x0*x2 - 3*x1^2 - x1*x2", conic.vars).primitive()
    plane = sol.plane.subs({"c0": -1, "c1": 3}).with_vars(X4)
    assert plane.primitive() == parse_poly("-x0 + 3*x1 + x2 - 3*x3", X4).primitive()
    B = extend_block(three_row_p33())
    conic4 = conic.with_vars(X4)
    assert curve_certificate(plane, conic4, lambda P: act_inversion(P, X4), "I").invariant
    assert curve_certificate(plane, conic4, lambda P: act_linear(P, B, X4), "A").invariant


def test_normalize_params():
    assert normalize_params(2, -6) == (Fraction(-1), Fraction(3))
    assert normalize_params(Fraction(1, 2), 0) == (1, 0)


@pytest.mark.parametrize("l", range(1, 5))
def test_general_two_row_invariant(l):
    F = two_row_invariant(l)
    assert F.total_degree(X3) == l + 1
    inv = is_invariant_hypersurface(F, act_inversion(F, X3))
    assert inv.invariant
    B = extend_block(su2_two_row(l))
    assert is_invariant_hypersurface(F, act_linear(F, B, X3)).invariant
    if l == 1:
        assert F == CONIC_TWO_ROW


def test_act_linear_rejects_singular():
    with pytest.raises(ValueError):
        act_linear(CONIC_TWO_ROW, ((1, 0, 0), (0, 0, 0), (0, 0, 1)), X3)
