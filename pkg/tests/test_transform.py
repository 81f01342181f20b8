import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lanczos_gamma import FreeParameter, a0, generate
from lanczos_gamma.errors import DomainError, ParameterError, QuadratureConvergenceError
from lanczos_gamma.transform import (
    a_k_by_quadrature,
    coefficients_by_quadrature,
    cos_power_integral,
    f_even,
    integrand_profile,
    iter_quadrature,
    solve_v,
    taylor_coefficients,
    transform_sample,
)

HALF_PI = math.pi / 2
SQRT2 = math.sqrt(2)


def _v_taylor(x):
    c = taylor_coefficients(3)
    return 1 + c[0] * x + c[1] * x ** 2 + c[2] * x ** 3


def test_solve_v_landmarks():
    assert solve_v(0) == 1
    assert solve_v(HALF_PI) == math.e
    assert solve_v(-HALF_PI) == 0


@pytest.mark.parametrize("theta", [HALF_PI + 1e-9, -2, 4])
def test_solve_v_domain(theta):
    with pytest.raises(DomainError):
        solve_v(theta)


def test_solve_v_residual_and_branch():
    for theta in np.linspace(-HALF_PI, HALF_PI, 1000)[1:-1]:
        v = solve_v(theta)
        assert abs(v * (1 - math.log(v)) - math.cos(theta) ** 2) <= 1e-12
        assert np.sign(v - 1) == np.sign(theta)


@settings(max_examples=200, deadline=None)
@given(st.floats(-HALF_PI, HALF_PI).filter(lambda t: abs(t) < HALF_PI))
def test_solve_v_residual_property(theta):
    v = solve_v(theta)
    assert 0 < v < math.e
    assert abs(v * (1 - math.log(v)) - math.cos(theta) ** 2) <= 1e-12


def test_taylor_coefficients():
    assert taylor_coefficients(1) == [SQRT2]
    c = taylor_coefficients(3)
    assert c[0] == pytest.approx(SQRT2, abs=1e-15)
    assert c[1] == pytest.approx(1 / 3, abs=1e-15)
    assert c[2] == pytest.approx(-SQRT2 / 36, abs=1e-15)
    # c_4 = 2/135 from the x^4 coefficient, solved by hand
    assert taylor_coefficients(4)[3] == pytest.approx(2 / 135, abs=1e-15)


def test_taylor_series_solves_the_ode():
    # with 12 terms the residual of (1/2)(v^2)' - (1 - x^2) v' - 2 x v is O(x^13)
    c = [1.0] + taylor_coefficients(12)
    p = np.polynomial.Polynomial(c)
    dp = p.deriv()
    for x in [0.1, 0.2, 0.3]:
        res = p(x) * dp(x) - (1 - x * x) * dp(x) - 2 * x * p(x)
        assert abs(res) < 50 * x ** 13 + 1e-15


def test_taylor_matches_implicit_solution():
    for x in np.linspace(-1e-3, 1e-3, 41):
        assert abs(_v_taylor(x) - solve_v(math.asin(x))) <= 1e-12


def test_dv_dx_relation():
    # log v * dv/dx = 2x, with x = sin(theta), by central differences
    h = 1e-6
    for x in [-0.9, -0.5, 0.2, 0.7]:
        dv = (solve_v(math.asin(x + h)) - solve_v(math.asin(x - h))) / (2 * h)
        assert math.log(solve_v(math.asin(x))) * dv == pytest.approx(2 * x, abs=1e-7)


def test_taylor_cap():
    with pytest.raises(ParameterError):
        taylor_coefficients(21)


def test_f_even_limit_and_symmetry():
    assert f_even(0, FreeParameter(1, 2)) == 1
    for t in [1e-7, 5e-7, 2e-6]:
        assert f_even(t, 1) == pytest.approx(1, abs=1e-5)
    assert f_even(0.5, 1).imag == 0
    assert f_even(0.5, FreeParameter(1, 2 * math.pi)) == pytest.approx(
        f_even(0.5, FreeParameter(1, -2 * math.pi)).conjugate(), rel=1e-14
    )
    assert f_even(-0.3, FreeParameter(1, 1)) == f_even(0.3, FreeParameter(1, 1))


def test_f_even_continuous_across_limit_switch():
    r = FreeParameter(2, 3)
    left, right = f_even(0.999e-6, r), f_even(1.001e-6, r)
    assert abs(left - right) < 1e-11


def test_f_even_endpoint():
    with pytest.raises(DomainError):
        f_even(HALF_PI, 1)


def test_transform_sample():
    s = transform_sample(-0.4, FreeParameter(1, 1))
    assert s.v < 1 and s.f_even == f_even(-0.4, FreeParameter(1, 1))


def test_quadrature_k0_matches_closed_form_a0():
    assert abs(a_k_by_quadrature(0, 1) - a0(1)) <= 1e-8


def test_quadrature_matches_recursion_samples():
    assert abs(a_k_by_quadrature(5, 1) - generate(1, 10)[5]) <= 1e-8
    r = FreeParameter(1, 2 * math.pi)
    assert abs(a_k_by_quadrature(3, r) - generate(r, 10)[3]) <= 1e-7


@pytest.mark.parametrize("r", [FreeParameter(1, 0), FreeParameter(1, math.pi), FreeParameter(1, 2 * math.pi)])
def test_oracle_equivalence(r):
    quad = coefficients_by_quadrature(r, 9)
    rec = generate(r, 10).coefficients
    for q, a in zip(quad, rec):
        assert abs(q - a) <= 1e-7


def test_fourier_partial_sum_at_zero():
    a = generate(1, 10).coefficients
    total = a[0] / 2 + sum(a[1:])
    assert abs(total - 1) <= 10 * abs(a[9])


def test_quadrature_budget_exhaustion():
    with pytest.raises(QuadratureConvergenceError) as info:
        a_k_by_quadrature(4, FreeParameter(1, 2), tol=1e-15, budget=300)
    assert info.value.previous != info.value.current


def test_iter_quadrature_reports_failures_in_place():
    rows = list(iter_quadrature(1, 2, tol=1e-15, budget=300))
    assert [k for k, _, _ in rows] == [0, 1, 2]
    assert all(exc is not None for _, _, exc in rows)


def test_quadrature_k_cap():
    with pytest.raises(ParameterError):
        a_k_by_quadrature(21, 1)


def _direct(z, k):
    # independent oracle: mpmath tanh-sinh quadrature of the trig integral
    with mpmath.workdps(30):
        f = lambda t: mpmath.cos(t) ** (2 * mpmath.mpf(z)) * mpmath.cos(2 * k * t)
        return float(mpmath.quad(f, [-mpmath.pi / 2, 0, mpmath.pi / 2]))


def test_cos_power_integral_hand_values():
    assert cos_power_integral(0.5, 0) == pytest.approx(2, abs=1e-12)
    assert cos_power_integral(1, 1) == pytest.approx(math.pi / 4, abs=1e-12)
    assert cos_power_integral(1, 2) == 0
    assert abs(_direct(1, 2)) <= 1e-10


@pytest.mark.parametrize("z", [0.5, 1.0, 1.5, 2.0])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_cos_power_integral_vs_direct(z, k):
    assert abs(cos_power_integral(z, k) - _direct(z, k)) <= 1e-10


def test_cos_power_integral_complex_argument():
    z = complex(0.7, 0.4)
    with mpmath.workdps(30):
        f = lambda t: mpmath.cos(t) ** (2 * mpmath.mpc(z)) * mpmath.cos(2 * t)
        want = complex(mpmath.quad(f, [-mpmath.pi / 2, 0, mpmath.pi / 2]))
    assert abs(cos_power_integral(z, 1) - want) <= 1e-10


def test_cos_power_integral_domain():
    with pytest.raises(DomainError):
        cos_power_integral(-0.5, 0)


def test_integrand_profile():
    prof = integrand_profile(11)
    assert prof[0] == (0.0, 0.0)
    assert prof[-1][0] == math.e and abs(prof[-1][1]) < 1e-15
    fine = integrand_profile(2719)
    v_best, y_best = max(fine, key=lambda p: p[1])
    nearest = min(fine, key=lambda p: abs(p[0] - 1))
    assert (v_best, y_best) == nearest
    assert y_best == pytest.approx(1, abs=1e-6)
    assert all(y <= 1 for _, y in fine)
