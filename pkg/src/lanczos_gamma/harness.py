"""Error sweeps over the real and complex grids, plus plot-ready CSV output."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .coeffgen import CoefficientSet, FreeParameter, ParameterLike, as_parameter, generate
from .errors import OracleError
from .evaluator import gamma_zp1
from .reference import (
    HALF_INTEGER_GRID,
    REAL_GRID,
    exact_gamma_zp1,
    reference_set,
    validate_reference,
)

EXACT_INTEGER = "exact_integer"
EXACT_HALF_INTEGER = "exact_half_integer"
HIGH_ORDER_LANCZOS = "high_order_lanczos"

R_FAMILY = tuple(FreeParameter(1.0, n * math.pi / 6) for n in range(13))
COMPLEX_GRID = tuple(complex(6.0, n * math.pi / 12) for n in range(25))
R_1_20PI = FreeParameter(1.0, 20 * math.pi)

PRESETS = ("real-axis", "complex-z", "r1-20pi")

CSV_COLUMNS = (
    "r_re", "r_im", "z_re", "z_im",
    "approx_re", "approx_im", "ref_re", "ref_im",
    "abs_err", "rel_err",
)


@dataclass(frozen=True)
class ErrorRecord:
    z_plus_1: complex
    r: FreeParameter
    approx: complex
    reference: complex
    abs_err: float
    rel_err: float

    @classmethod
    def build(cls, z_plus_1, r, approx, reference) -> "ErrorRecord":
        abs_err = abs(approx - reference)
        return cls(complex(z_plus_1), r, complex(approx), complex(reference),
                   abs_err, abs_err / abs(reference))


@dataclass(frozen=True)
class ReferenceOracle:
    kind: str
    payload: Optional[CoefficientSet] = None

    def __post_init__(self):
        if self.kind == HIGH_ORDER_LANCZOS:
            if self.payload is None:
                raise OracleError("high_order_lanczos oracle needs a coefficient set")
            validate_reference(self.payload)
        elif self.kind not in (EXACT_INTEGER, EXACT_HALF_INTEGER):
            raise OracleError(f"unknown oracle kind {self.kind!r}")

    def __call__(self, z_plus_1) -> complex:
        z_plus_1 = complex(z_plus_1)
        if self.kind == HIGH_ORDER_LANCZOS:
            return gamma_zp1(z_plus_1 - 1, self.payload)
        x = z_plus_1.real
        if z_plus_1.imag != 0:
            raise OracleError(f"{self.kind} oracle is real-only, got {z_plus_1}")
        is_int = x == int(x)
        if is_int != (self.kind == EXACT_INTEGER):
            raise OracleError(f"{self.kind} oracle does not apply at {x}")
        return complex(exact_gamma_zp1(x))


def exact_oracle(z_plus_1: float) -> ReferenceOracle:
    x = float(z_plus_1)
    return ReferenceOracle(EXACT_INTEGER if x == int(x) else EXACT_HALF_INTEGER)


def high_order_oracle() -> ReferenceOracle:
    """The N = 15 real-r reference; validation against the exact values runs on construction."""
    return ReferenceOracle(HIGH_ORDER_LANCZOS, reference_set())


def _sweep(r_family, n_terms, grid, reference) -> list[ErrorRecord]:
    records = []
    for r in r_family:
        r = as_parameter(r)
        coeffs = generate(r, n_terms)
        for x in grid:
            approx = gamma_zp1(complex(x) - 1, coeffs)
            records.append(ErrorRecord.build(x, r, approx, reference(x)))
    return records


def sweep_real_axis(r_family: Sequence[ParameterLike] = R_FAMILY, n_terms: int = 10) -> list[ErrorRecord]:
    """Errors at z+1 = 1.5, 2.0, ..., 12 against exact factorial / half-integer values."""
    return _sweep(r_family, n_terms, REAL_GRID, lambda x: exact_oracle(x)(x))


def sweep_complex_z(r_family: Sequence[ParameterLike] = R_FAMILY, n_terms: int = 10) -> list[ErrorRecord]:
    """Errors at z+1 = 6 + n pi i/12, n = 0..24, against the high-order reference."""
    return _sweep(r_family, n_terms, COMPLEX_GRID, high_order_oracle())


def sweep_r1_20pi(n_terms: int = 10) -> list[ErrorRecord]:
    return sweep_complex_z([R_1_20PI], n_terms)


def run_preset(name: str, n_terms: int = 10) -> list[ErrorRecord]:
    if name == "real-axis":
        return sweep_real_axis(R_FAMILY, n_terms)
    if name == "complex-z":
        return sweep_complex_z(R_FAMILY, n_terms)
    if name == "r1-20pi":
        return sweep_r1_20pi(n_terms)
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")


def _g(x: float) -> str:
    return f"{x:.17g}"


def write_sweep_csv(records: Iterable[ErrorRecord], stream) -> int:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    n = 0
    for rec in records:
        writer.writerow([
            _g(rec.r.r_x), _g(rec.r.r_y), _g(rec.z_plus_1.real), _g(rec.z_plus_1.imag),
            _g(rec.approx.real), _g(rec.approx.imag),
            _g(rec.reference.real), _g(rec.reference.imag),
            _g(rec.abs_err), _g(rec.rel_err),
        ])
        n += 1
    return n


def sweep_csv(records: Iterable[ErrorRecord]) -> str:
    buf = io.StringIO()
    write_sweep_csv(records, buf)
    return buf.getvalue()


def riemann_projection(w) -> tuple[float, float, float]:
    """Stereographic projection of w onto the unit sphere (0 -> south pole)."""
    w = complex(w)
    m2 = w.real * w.real + w.imag * w.imag
    d = 1.0 + m2
    return 2.0 * w.real / d, 2.0 * w.imag / d, (m2 - 1.0) / d


SPHERE_COLUMNS = ("r_x", "r_y", "k", "a_re", "a_im", "X", "Y", "Z")


def write_sphere_csv(r_x: float, y_values: Iterable[float], n_terms: int, stream) -> int:
    """Path of each a_k(r_x + i y) on the Riemann sphere, one row per (y, k)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SPHERE_COLUMNS)
    n = 0
    for y in y_values:
        coeffs = generate(FreeParameter(r_x, y), n_terms)
        for k, a in enumerate(coeffs.coefficients):
            writer.writerow([_g(r_x), _g(y), k, _g(a.real), _g(a.imag),
                             *(_g(c) for c in riemann_projection(a))])
            n += 1
    return n
