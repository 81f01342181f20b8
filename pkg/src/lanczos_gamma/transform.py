"""Lanczos coefficients as Fourier cosine coefficients, by quadrature.

The substitution cos^2(theta) = v (1 - log v) carries the Gamma integral to
an integral over [-pi/2, pi/2]. v < 1 on theta < 0 and v > 1 on theta > 0.
Its even part f_E has the cosine series a_0/2 + sum a_k cos(2 k theta), and
those a_k are the same numbers the interpolation recursion produces, which
makes this module an independent check on coeffgen.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .coeffgen import ParameterLike, as_parameter
from .errors import DomainError, ParameterError, QuadratureConvergenceError

HALF_PI = math.pi / 2
SQRT2 = math.sqrt(2.0)

TAYLOR_SWITCH = 1e-3
F_EVEN_LIMIT_SWITCH = 1e-6
ENDPOINT_GAP = 1e-9

GL_ORDER = 16
INITIAL_PANELS = 8
QUAD_TOL = 1e-10
NODE_BUDGET = 2 ** 14
MAX_K = 20


@dataclass(frozen=True)
class TransformSample:
    theta: float
    v: float
    f_even: complex


def taylor_coefficients(m: int) -> list[float]:
    """c_1..c_m of v(x) = 1 + c_1 x + c_2 x^2 + ... solving
    (1/2)(v^2)' - (1 - x^2) v' - 2 x v = 0 with v(0) = 1, c_1 = +sqrt(2).

    Collecting x^n gives sum_{i=1}^{n} (n-i+1) c_i c_{n-i+1} + (n-3) c_{n-1} = 0,
    where c_n enters only through the i = 1 and i = n terms.
    """
    if int(m) != m or not 1 <= m <= 20:
        raise ParameterError(f"m must be an integer in [1, 20], got {m}")
    c = [1.0, SQRT2]
    for n in range(2, m + 1):
        rest = sum((n - i + 1) * c[i] * c[n - i + 1] for i in range(2, n))
        rest += (n - 3) * c[n - 1]
        c.append(-rest / ((n + 1) * c[1]))
    return c[1 : m + 1]


_TAYLOR = taylor_coefficients(6)


def _taylor_w(x):
    """v - 1 from the truncated Taylor series in x = sin(theta)."""
    w = 0.0 * x
    for c in reversed(_TAYLOR):
        w = (w + c) * x
    return w


def _solve_vw(theta: np.ndarray):
    """Vectorised solve of v(1 - log v) = cos^2(theta) on the sign(theta) branch.

    Returns (v, w) with w = v - 1; w comes straight from the Taylor series
    near theta = 0 so that log1p(w) keeps its relative accuracy there.
    """
    theta = np.asarray(theta, dtype=float)
    v = np.empty_like(theta)
    w = np.empty_like(theta)

    small = np.abs(theta) < TAYLOR_SWITCH
    w[small] = _taylor_w(np.sin(theta[small]))
    v[small] = 1.0 + w[small]

    big = ~small
    th = theta[big]
    target = np.cos(th) ** 2
    s2 = np.sin(th) ** 2
    upper = th > 0
    lo = np.where(upper, 1.0, 0.0)
    hi = np.where(upper, math.e, 1.0)
    x = np.clip(1.0 + _taylor_w(np.sin(th)), lo, hi)
    x = np.where((x <= lo) | (x >= hi), 0.5 * (lo + hi), x)

    def residual(x):
        # near v = 1 use the w form: v(1 - log v) - 1 = w - (1 + w) log1p(w)
        near = (x > 0.5) & (x < 2.0)
        xn = np.where(near, x - 1.0, 0.0)
        g_near = xn - x * np.log1p(xn) + s2
        with np.errstate(divide="ignore", invalid="ignore"):
            g_far = np.where(x > 0, x * (1.0 - np.log(x)), 0.0) - target
        return np.where(near, g_near, g_far)

    for _ in range(200):
        g = residual(x)
        # g increases on the lower branch, decreases on the upper one
        below = np.where(upper, g > 0, g < 0)
        lo = np.where(below, x, lo)
        hi = np.where(below, hi, x)
        hit = g == 0
        lo = np.where(hit, x, lo)
        hi = np.where(hit, x, hi)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = g / (-np.log(x))
            x_new = x - step
        bad = ~np.isfinite(x_new) | (x_new <= lo) | (x_new >= hi)
        x_new = np.where(bad, 0.5 * (lo + hi), x_new)
        done = np.abs(x_new - x) <= 4e-16 * np.maximum(x, 1e-300)
        x = x_new
        if np.all(done | hit | (hi - lo <= 4e-16 * hi)):
            break

    v[big] = x
    w[big] = x - 1.0
    v[theta == -HALF_PI] = 0.0
    w[theta == -HALF_PI] = -1.0
    v[theta == HALF_PI] = math.e
    w[theta == HALF_PI] = math.e - 1.0
    return v, w


def solve_v(theta: float) -> float:
    """The v in [0, e] with v(1 - log v) = cos^2(theta), v on the side of 1 given by sign(theta)."""
    theta = float(theta)
    if not -HALF_PI <= theta <= HALF_PI:
        raise DomainError(f"theta must lie in [-pi/2, pi/2], got {theta}")
    v, _ = _solve_vw(np.array([theta]))
    return float(v[0])


def _f_r_array(theta, r: complex):
    v, w = _solve_vw(theta)
    log_v = np.log1p(w)
    return SQRT2 * np.exp(r * log_v) * np.sin(theta) / log_v


def _f_even_array(theta, r: complex):
    theta = np.asarray(theta, dtype=float)
    out = np.empty(theta.shape, dtype=complex)
    zero = theta == 0.0
    out[zero] = 1.0
    t = theta[~zero]
    out[~zero] = 0.5 * (_f_r_array(t, r) + _f_r_array(-t, r))
    return out


def f_even(theta: float, r: ParameterLike) -> complex:
    """Even part of sqrt(2) v^r sin(theta) / log v.

    Near theta = 0 (below 1e-6) v - 1 comes from the Taylor series, which
    keeps the 0/0 ratio accurate; at theta = 0 the limit 1 is returned.
    """
    r = as_parameter(r)
    theta = float(theta)
    if not abs(theta) <= HALF_PI - ENDPOINT_GAP:
        raise DomainError(f"f_even needs |theta| <= pi/2 - {ENDPOINT_GAP}, got {theta}")
    return complex(_f_even_array(np.array([theta]), r.value)[0])


def transform_sample(theta: float, r: ParameterLike) -> TransformSample:
    return TransformSample(float(theta), solve_v(theta), f_even(theta, r))


class _EvenIntegrand:
    """f_even on Gauss-Legendre panels, cached per panel so that several k
    for the same r share integrand evaluations."""

    def __init__(self, r: complex, order: int = GL_ORDER):
        self.r = r
        self.nodes, self.weights = np.polynomial.legendre.leggauss(order)
        self._cache = {}

    def panel(self, a: float, b: float):
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            half = 0.5 * (b - a)
            theta = a + half * (self.nodes + 1.0)
            hit = (theta, half * self.weights, _f_even_array(theta, self.r))
            self._cache[key] = hit
        return hit

    def integrate(self, a: float, b: float, k: int) -> complex:
        theta, weights, f = self.panel(a, b)
        return complex(np.dot(weights, f * np.cos(2 * k * theta)))


def _fsum(values) -> complex:
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _adaptive(integrand: _EvenIntegrand, k: int, tol: float, budget: int) -> complex:
    order = len(integrand.nodes)
    length = math.pi
    edges = np.linspace(-HALF_PI, HALF_PI, INITIAL_PANELS + 1)
    panels = list(zip(edges[:-1].tolist(), edges[1:].tolist()))
    while True:
        coarse, fine, errs = [], [], []
        for a, b in panels:
            m = 0.5 * (a + b)
            q = integrand.integrate(a, b, k)
            q2 = integrand.integrate(a, m, k) + integrand.integrate(m, b, k)
            coarse.append(q)
            fine.append(q2)
            errs.append(abs(q - q2))
        total_coarse, total_fine = _fsum(coarse), _fsum(fine)
        if abs(total_fine - total_coarse) <= tol:
            return total_fine
        refined = []
        for (a, b), err in zip(panels, errs):
            if err > tol * (b - a) / length:
                m = 0.5 * (a + b)
                refined += [(a, m), (m, b)]
            else:
                refined.append((a, b))
        # the fine estimate of the refined partition needs twice its nodes
        if 2 * order * len(refined) > budget:
            raise QuadratureConvergenceError(total_coarse, total_fine, budget)
        panels = refined


def _check_k(k):
    if int(k) != k or not 0 <= k <= MAX_K:
        raise ParameterError(f"k must be an integer in [0, {MAX_K}], got {k}")


def a_k_by_quadrature(k: int, r: ParameterLike, *, tol: float = QUAD_TOL, budget: int = NODE_BUDGET) -> complex:
    """a_k(r) = (2/pi) * integral of f_even(theta) cos(2 k theta) over [-pi/2, pi/2].

    Composite Gauss-Legendre; panels whose halves disagree are split until
    successive partitions agree to `tol`. Nodes never touch +-pi/2.
    """
    _check_k(k)
    r = as_parameter(r)
    integrand = _EvenIntegrand(r.value)
    return 2.0 / math.pi * _adaptive(integrand, int(k), tol, budget)


def iter_quadrature(r: ParameterLike, k_max: int, *, tol: float = QUAD_TOL,
                    budget: int = NODE_BUDGET):
    """Yield (k, a_k or None, error or None) for k = 0..k_max.

    Integrand values are shared across k; a convergence failure at one k is
    reported in place and does not stop the others.
    """
    _check_k(k_max)
    r = as_parameter(r)
    integrand = _EvenIntegrand(r.value)
    for k in range(int(k_max) + 1):
        try:
            yield k, 2.0 / math.pi * _adaptive(integrand, k, tol, budget), None
        except QuadratureConvergenceError as exc:
            yield k, None, exc


def coefficients_by_quadrature(r: ParameterLike, k_max: int, *, tol: float = QUAD_TOL,
                               budget: int = NODE_BUDGET) -> list[complex]:
    """a_0..a_{k_max} by quadrature."""
    out = []
    for _, value, exc in iter_quadrature(r, k_max, tol=tol, budget=budget):
        if exc is not None:
            raise exc
        out.append(value)
    return out


def cos_power_integral(z, k: int) -> complex:
    """Closed form of the integral of cos^{2z}(theta) cos(2k theta) over [-pi/2, pi/2]:
    sqrt(pi) Gamma(z+1/2) Gamma(z+1) / (Gamma(z+k+1) Gamma(z-k+1)).

    Returns 0 when a denominator Gamma sits on a pole.
    """
    from .evaluator import gamma
    from .reference import reference_set

    z = complex(z)
    if int(k) != k or k < 0:
        raise ParameterError(f"k must be a non-negative integer, got {k}")
    if not z.real > -0.5:
        raise DomainError(f"cos_power_integral needs Re(z) > -1/2, got {z}")
    for arg in (z + k + 1, z - k + 1):
        if abs(arg.imag) < 1e-12 and arg.real <= 0.5:
            m = round(arg.real)
            if m <= 0 and abs(arg - m) < 1e-12:
                return 0j
    coeffs = reference_set()
    num = math.sqrt(math.pi) * gamma(z + 0.5, coeffs) * gamma(z + 1, coeffs)
    return num / (gamma(z + k + 1, coeffs) * gamma(z - k + 1, coeffs))


def integrand_profile(n_points: int) -> list[tuple[float, float]]:
    """(v, v(1 - log v)) at n_points uniform v in [0, e]."""
    if int(n_points) != n_points or n_points < 2:
        raise ParameterError(f"n_points must be an integer >= 2, got {n_points}")
    out = []
    for v in np.linspace(0.0, math.e, int(n_points)).tolist():
        out.append((v, 0.0 if v == 0.0 else v * (1.0 - math.log(v))))
    return out
