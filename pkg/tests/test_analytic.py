import cmath
import math

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from staticdisp.analytic import (BlaschkeSpec, GridSpec, OddRationalFn, SpecError, blaschke_eval,
                                 boundary_value, broken_evaluator, condition_residuals, n_of_z,
                                 sample_points, sheet_argument, shift_identity_residual,
                                 trivial_evaluator, two_row_column, two_row_evaluator, w_of_z,
                                 zeta_of_z)

off_cut = st.builds(complex, st.floats(-3, 3), st.floats(-3, 3)).filter(
    lambda z: GridSpec().cut_distance(z) > 1e-3 and abs(z) > 1e-3)
disk = st.builds(complex, st.floats(-0.7, 0.7), st.floats(-0.7, 0.7))


def test_principal_values():
    assert abs(w_of_z(0.5) - 1 / 6) < 1e-15
    assert abs(zeta_of_z(1j) - 1j * (math.sqrt(2) - 1)) < 1e-15
    w = w_of_z(2 + 0j)
    assert abs(w - (0.5 + 1j * math.acosh(2) / math.pi)) < 1e-14


@given(off_cut)
def test_w_matches_sympy_asin(z):
    ref = complex(sp.N(sp.asin(sp.nsimplify(z.real, rational=True)
                               + sp.I * sp.nsimplify(z.imag, rational=True)) / sp.pi, 30))
    assert abs(w_of_z(z) - ref) < 1e-12


@given(off_cut)
def test_zeta_inside_disk_and_odd(z):
    assert abs(zeta_of_z(z)) < 1
    assert abs(zeta_of_z(-z) + zeta_of_z(z)) < 1e-12


@given(off_cut)
def test_n_of_z_odd(z):
    beta = OddRationalFn((0, 1), (1, 0, 1))
    assert abs(n_of_z(-z, beta) + n_of_z(z, beta)) < 1e-10


def test_blaschke_validation():
    BlaschkeSpec(2, (0.5, -0.5))
    with pytest.raises(SpecError):
        BlaschkeSpec(1)
    with pytest.raises(SpecError):
        BlaschkeSpec(0, (0.5,))
    with pytest.raises(SpecError):
        BlaschkeSpec(0, (1.2, -1.2))
    with pytest.raises(SpecError):
        BlaschkeSpec(0, (0.3 + 0.2j, -0.3 - 0.2j))      # conjugate partners missing
    BlaschkeSpec(0, (0.3 + 0.2j, -0.3 - 0.2j, 0.3 - 0.2j, -0.3 + 0.2j))


@given(disk)
def test_blaschke_bounded_by_one(zeta):
    D = BlaschkeSpec(2, (0.5, -0.5, 0.3 + 0.2j, -0.3 - 0.2j, 0.3 - 0.2j, -0.3 + 0.2j))
    assert abs(D(zeta)) <= 1 + 1e-12


@given(st.floats(-math.pi, math.pi))
def test_blaschke_unimodular_on_circle(t):
    D = BlaschkeSpec(2, (0.5, -0.5))
    assert abs(abs(D(cmath.exp(1j * t))) - 1) < 1e-12


def test_odd_rational_rejects_even():
    with pytest.raises(SpecError):
        OddRationalFn((1, 1), (1,))


def test_sheet_argument_parity():
    z = 0.3
    assert sheet_argument(0, z) == n_of_z(z)
    assert sheet_argument(1, z) == 1 - n_of_z(z)


SMALL = GridSpec(nx=40, ny=40)


def test_two_row_passes():
    reps = condition_residuals(two_row_evaluator(), grid=SMALL)
    assert [r.condition for r in reps] == ["1B", "1C", "1D"]
    assert all(r.passes(1e-9) for r in reps)


def test_trivial_blaschke_passes():
    reps = condition_residuals(trivial_evaluator(BlaschkeSpec(0, (0.5, -0.5))), grid=SMALL)
    assert all(r.passes(1e-9) for r in reps)


def test_broken_detected():
    reps = {r.condition: r for r in condition_residuals(broken_evaluator, grid=SMALL)}
    assert reps["1C"].max_residual > 1e-3 and reps["1D"].max_residual > 1e-3
    assert reps["1D"].at_z is not None


def test_boundary_value_limits():
    s = boundary_value(two_row_evaluator(), 1.7)
    assert max(abs(abs(x) - 1) for x in s) < 1e-9


def test_shift_identity():
    for z in sample_points(20, seed=3):
        assert shift_identity_residual(z) < 1e-10


def test_two_row_column_margin():
    with pytest.raises(ZeroDivisionError):
        two_row_column(1.0, margin=1e-3)
