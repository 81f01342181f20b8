"""Lanczos approximation of the Gamma function with a complex free parameter."""
from .coeffgen import CoefficientSet, FreeParameter, a0, f_r, factorial, generate
from .errors import (
    DomainError,
    InconsistencyError,
    LanczosError,
    OracleError,
    ParameterError,
    PoleError,
    QuadratureConvergenceError,
)
from .evaluator import gamma, gamma_zp1, log_abs_gamma, series_sum

__all__ = [
    "CoefficientSet", "FreeParameter", "a0", "f_r", "factorial", "generate",
    "gamma", "gamma_zp1", "log_abs_gamma", "series_sum",
    "LanczosError", "ParameterError", "DomainError", "PoleError",
    "QuadratureConvergenceError", "InconsistencyError", "OracleError",
]
