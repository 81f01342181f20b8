"""Lanczos coefficients for a complex free parameter by exact interpolation.

The truncated series is exact at z = 0, 1, 2, ... because every term past
k = n carries a factor (z - n). Solving the terminated series at successive
integers gives each a_n from the previous ones.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import DomainError, ParameterError

MAX_FACTORIAL = 170
MAX_TERMS = 40

SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class FreeParameter:
    """The free parameter r = r_x + i r_y."""

    r_x: float
    r_y: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.r_x) and math.isfinite(self.r_y)):
            raise ParameterError(f"free parameter must be finite, got ({self.r_x}, {self.r_y})")
        if not self.r_x > -0.5:
            raise ParameterError(f"free parameter needs r_x > -1/2, got {self.r_x}")

    @property
    def value(self) -> complex:
        return complex(self.r_x, self.r_y)

    def conjugate(self) -> "FreeParameter":
        return FreeParameter(self.r_x, -self.r_y)

    def polar(self) -> tuple[float, float]:
        """Return (R, theta) with r = R exp(i theta)."""
        return abs(self.value), math.atan2(self.r_y, self.r_x)


ParameterLike = Union[FreeParameter, complex, float, int]


def as_parameter(r: ParameterLike) -> FreeParameter:
    if isinstance(r, FreeParameter):
        return r
    r = complex(r)
    return FreeParameter(r.real, r.imag)


@dataclass(frozen=True)
class CoefficientSet:
    r: FreeParameter
    n_terms: int
    coefficients: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.n_terms:
            raise ParameterError(
                f"n_terms={self.n_terms} but {len(self.coefficients)} coefficients given"
            )

    def __len__(self):
        return self.n_terms

    def __getitem__(self, k):
        return self.coefficients[k]

    @classmethod
    def from_values(cls, r: ParameterLike, values: Sequence[complex]) -> "CoefficientSet":
        values = tuple(complex(v) for v in values)
        return cls(as_parameter(r), len(values), values)


def factorial(n: int) -> float:
    """n! as a float, by iterated product."""
    if n < 0 or n > MAX_FACTORIAL or int(n) != n:
        raise DomainError(f"factorial needs an integer 0 <= n <= {MAX_FACTORIAL}, got {n}")
    result = 1.0
    for i in range(2, int(n) + 1):
        result *= i
    return result


def f_r(n: int, r: ParameterLike) -> complex:
    """Gamma(n+1) divided by the Lanczos prefactor at z = n.

    F_r(n) = n! e^{n+r+1/2} / (sqrt(2 pi) (n+r+1/2)^{n+1/2}), principal branch.
    """
    r = as_parameter(r)
    base = n + r.value + 0.5
    return factorial(n) * cmath.exp(base) / (SQRT_2PI * cmath.exp((n + 0.5) * cmath.log(base)))


def a0(r: ParameterLike) -> complex:
    r = as_parameter(r).value
    return cmath.sqrt(2.0 * math.e / (math.pi * (r + 0.5))) * cmath.exp(r)


def generate(r: ParameterLike, n_terms: int) -> CoefficientSet:
    """Coefficients a_0(r) .. a_{N-1}(r) by the nested interpolation recursion.

    For n >= 1 the bracketing is evaluated innermost first::

        t = F_r(n) - a_0/2
        t = t * (n+1)/n   - a_1
        t = t * (n+2)/(n-1) - a_2
        ...
        a_n = t * (2n)/1
    """
    r = as_parameter(r)
    if int(n_terms) != n_terms or not 1 <= n_terms <= MAX_TERMS:
        raise ParameterError(f"n_terms must be an integer in [1, {MAX_TERMS}], got {n_terms}")
    coeffs = [a0(r)]
    half_a0 = coeffs[0] / 2
    for n in range(1, n_terms):
        t = f_r(n, r) - half_a0
        for j in range(1, n + 1):
            t *= (n + j) / (n - j + 1)
            if j < n:
                t -= coeffs[j]
        coeffs.append(t)
    return CoefficientSet(r, n_terms, tuple(coeffs))
