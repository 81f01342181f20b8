"""Where a_0(r) is purely real or purely imaginary, and how |a_k| behaves
along vertical lines r = r_x + i y."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coeffgen import CoefficientSet, FreeParameter, a0, generate
from .errors import InconsistencyError, ParameterError

PURELY_REAL = "purely_real"
PURELY_IMAGINARY = "purely_imaginary"

SCAN_STEP = math.pi / 40
CROSS_TOL = 1e-8
AXIS_TOL = 1e-13

QUADRANTS = ("I", "II", "III", "IV")
AXIS = "axis"


@dataclass(frozen=True)
class SpecialPoint:
    r_x: float
    r_y_root: float
    kind: str
    condition_residual: float
    a0_cross_part: float

    @property
    def parameter(self) -> FreeParameter:
        return FreeParameter(self.r_x, self.r_y_root)


def _check_rx(r_x):
    if not (math.isfinite(r_x) and r_x > -0.5):
        raise ParameterError(f"r_x must exceed -1/2, got {r_x}")


def special_condition(r_x: float, r_y: float) -> float:
    """Imaginary part (up to a positive factor) of a_0(r)^2.

    Zero exactly where tan(2 r_y) = r_y / (r_x + 1/2), written without the
    poles of tan.
    """
    _check_rx(r_x)
    return (r_x + 0.5) * math.sin(2 * r_y) - r_y * math.cos(2 * r_y)


def classifier(r_x: float, r_y: float) -> float:
    """Real part (up to a positive factor) of a_0(r)^2; negative means a_0 is imaginary."""
    return (r_x + 0.5) * math.cos(2 * r_y) + r_y * math.sin(2 * r_y)


def sign_changes(r_x: float, y_max: float, step: float) -> list[tuple[float, float]]:
    """Brackets (a, b) on the grid step, 2 step, ..., y_max where the condition changes sign."""
    n = int(math.floor(y_max / step))
    ys = [step * j for j in range(1, n + 1)]
    if not ys or ys[-1] < y_max:
        ys.append(y_max)
    brackets = []
    prev_y, prev_f = ys[0], special_condition(r_x, ys[0])
    if prev_f == 0:
        brackets.append((prev_y, prev_y))
    for y in ys[1:]:
        f = special_condition(r_x, y)
        if f == 0 or (prev_f != 0 and (f > 0) != (prev_f > 0)):
            brackets.append((prev_y, y) if f != 0 else (y, y))
        prev_y, prev_f = y, f
    return brackets


def _bisect(r_x, a, b):
    # halve until the bracket is two adjacent doubles (far below 1e-12);
    # residuals scale with the slope ~2 r_y, so large r_y needs the digits
    fa = special_condition(r_x, a)
    while True:
        m = 0.5 * (a + b)
        if not a < m < b:
            break
        fm = special_condition(r_x, m)
        if fm == 0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return m


def find_special_points(r_x: float, y_max: float, step: float = SCAN_STEP) -> list[SpecialPoint]:
    """Nontrivial roots r_y in (0, y_max] of the condition, classified and checked against a_0."""
    _check_rx(r_x)
    if not y_max > 0:
        raise ParameterError(f"y_max must be positive, got {y_max}")
    points = []
    for a, b in sign_changes(r_x, y_max, step):
        y = a if a == b else _bisect(r_x, a, b)
        c = classifier(r_x, y)
        if c == 0:
            raise InconsistencyError(f"classifier vanishes at r_y = {y}; a_0 cannot be zero")
        kind = PURELY_IMAGINARY if c < 0 else PURELY_REAL
        value = a0(FreeParameter(r_x, y))
        cross = abs(value.real) if kind == PURELY_IMAGINARY else abs(value.imag)
        if cross / abs(value) > CROSS_TOL:
            raise InconsistencyError(
                f"a_0({r_x}+{y}i) = {value} is not {kind.replace('_', ' ')} "
                f"(cross part ratio {cross / abs(value):.3e})"
            )
        points.append(SpecialPoint(r_x, y, kind, abs(special_condition(r_x, y)), cross))
    return points


def a0_decay_profile(r_x: float, y_values) -> list[tuple[float, float]]:
    _check_rx(r_x)
    out = []
    for y in y_values:
        if not y > 0:
            raise ParameterError(f"profile needs y > 0, got {y}")
        out.append((float(y), abs(a0(FreeParameter(r_x, y)))))
    return out


def decay_slope(r_x: float, y_lo: float, y_hi: float, n: int = 20) -> float:
    """Least-squares slope of log|a_0(r_x + i y)| against log y on n points."""
    ys = np.linspace(y_lo, y_hi, n)
    prof = a0_decay_profile(r_x, ys)
    logs = np.log([m for _, m in prof])
    slope, _ = np.polyfit(np.log(ys), logs, 1)
    return float(slope)


def magnitude_trajectories(r_x: float, y_grid, n_terms: int) -> np.ndarray:
    """|a_k(r_x + i y)| with rows indexed by y and columns by k."""
    rows = [np.abs(np.array(generate(FreeParameter(r_x, y), n_terms).coefficients)) for y in y_grid]
    return np.array(rows).reshape(len(rows), n_terms)


def quadrant(value: complex, tol: float = AXIS_TOL) -> str:
    if abs(value.real) <= tol or abs(value.imag) <= tol:
        return AXIS
    if value.real > 0:
        return "I" if value.imag > 0 else "IV"
    return "II" if value.imag > 0 else "III"


def quadrant_sequence(coeffs: CoefficientSet) -> list[str]:
    return [quadrant(c) for c in coeffs.coefficients]
