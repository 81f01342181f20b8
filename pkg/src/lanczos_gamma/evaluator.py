"""Evaluate Gamma over the complex plane from a coefficient set."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .coeffgen import CoefficientSet
from .errors import DomainError, PoleError

LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
POLE_TOL = 1e-12
REFLECTION_SPLIT = 0.5


@dataclass(frozen=True)
class PartialSumTerm:
    k: int
    rational_factor: complex
    value: complex


def _check_denominators(z: complex, n_terms: int):
    for k in range(1, n_terms):
        if abs(z + k) < POLE_TOL:
            raise DomainError(f"series denominator z + {k} vanishes at z = {z}")


def series_terms(z, coeffs: CoefficientSet) -> list[PartialSumTerm]:
    """The individual terms of the bracketed series, factor_k built incrementally."""
    z = complex(z)
    _check_denominators(z, coeffs.n_terms)
    terms = [PartialSumTerm(0, 0.5, 0.5 * coeffs[0])]
    factor = 1.0 + 0j
    for k in range(1, coeffs.n_terms):
        factor *= (z - k + 1) / (z + k)
        terms.append(PartialSumTerm(k, factor, coeffs[k] * factor))
    return terms


def series_sum(z, coeffs: CoefficientSet) -> complex:
    """a_0/2 + sum_k a_k prod_{j<k} (z-j)/(z+j+1)."""
    z = complex(z)
    _check_denominators(z, coeffs.n_terms)
    total = 0.5 * coeffs[0]
    factor = 1.0 + 0j
    for k in range(1, coeffs.n_terms):
        factor *= (z - k + 1) / (z + k)
        total += coeffs[k] * factor
    return total


def _log_prefactor(z: complex, r: complex) -> complex:
    # log of sqrt(2 pi) (z+r+1/2)^{z+1/2} e^{-(z+r+1/2)}, principal branch
    base = z + r + 0.5
    return LOG_SQRT_2PI + (z + 0.5) * cmath.log(base) - base


def _check_zp1_domain(z: complex):
    if z.real < -0.5:
        raise DomainError(f"gamma_zp1 needs Re(z) >= -1/2, got {z}; use gamma() instead")


def gamma_zp1(z, coeffs: CoefficientSet) -> complex:
    """Gamma(z+1) from the Lanczos series.

    The series is used directly for Re(z) >= 0. On -1/2 <= Re(z) < 0 the
    truncated series is markedly less accurate (about 8e-6 relative at
    z = -1/2 for r = 1, N = 10), so one step of Gamma(z+1) = Gamma(z+2)/(z+1)
    moves the evaluation back into Re(z) >= 0.
    """
    z = complex(z)
    _check_zp1_domain(z)
    if z.real < 0:
        return gamma_zp1(z + 1, coeffs) / (z + 1)
    s = series_sum(z, coeffs)
    return cmath.exp(_log_prefactor(z, coeffs.r.value)) * s


def _log_abs_gamma_zp1(z: complex, coeffs: CoefficientSet) -> float:
    _check_zp1_domain(z)
    if z.real < 0:
        return _log_abs_gamma_zp1(z + 1, coeffs) - math.log(abs(z + 1))
    return _log_prefactor(z, coeffs.r.value).real + math.log(abs(series_sum(z, coeffs)))


def _check_pole(z: complex):
    if z.real <= 0.5 and abs(z.imag) < POLE_TOL:
        m = round(z.real)
        if m <= 0 and abs(z - m) < POLE_TOL:
            raise PoleError(m)


def gamma(z, coeffs: CoefficientSet) -> complex:
    """Gamma(z) anywhere off the poles, reflecting for Re(z) < 1/2."""
    z = complex(z)
    _check_pole(z)
    if z.real >= REFLECTION_SPLIT:
        return gamma_zp1(z - 1, coeffs)
    s = cmath.sin(math.pi * z)
    if s == 0:
        raise PoleError(round(z.real), f"sin(pi z) underflows at z = {z}")
    return math.pi / (s * gamma(1 - z, coeffs))


def log_abs_gamma(z, coeffs: CoefficientSet) -> float:
    """log|Gamma(z)| without forming the full product."""
    z = complex(z)
    _check_pole(z)
    if z.real >= REFLECTION_SPLIT:
        return _log_abs_gamma_zp1(z - 1, coeffs)
    s = cmath.sin(math.pi * z)
    if s == 0:
        raise PoleError(round(z.real), f"sin(pi z) underflows at z = {z}")
    return math.log(math.pi) - math.log(abs(s)) - log_abs_gamma(1 - z, coeffs)
