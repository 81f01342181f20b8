"""Command-line interface: gen | eval | sweep | special | xcheck | sphere."""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import coeffgen, evaluator, geometry, harness, transform
from .coeffgen import CoefficientSet, FreeParameter
from .errors import LanczosError, ParameterError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_XCHECK = 4

SCHEMA_VERSION = 1
GENERATOR = "lanczos-interpolation-recursion"
XCHECK_TOL = 1e-7


class UsageError(Exception):
    pass


# -- coefficient files --------------------------------------------------------

def coefficient_file_dict(coeffs: CoefficientSet) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "r": {"re": coeffs.r.r_x, "im": coeffs.r.r_y},
        "n_terms": coeffs.n_terms,
        "coefficients": [{"re": c.real, "im": c.imag} for c in coeffs.coefficients],
        "generator": GENERATOR,
    }


def dump_coefficients(coeffs: CoefficientSet, path) -> None:
    # json writes floats with repr(), which round-trips every double exactly
    text = json.dumps(coefficient_file_dict(coeffs), indent=2)
    Path(path).write_text(text + "\n")


def parse_coefficient_dict(data: dict) -> CoefficientSet:
    try:
        if data["schema_version"] != SCHEMA_VERSION:
            raise ParameterError(f"unsupported schema_version {data['schema_version']}")
        if data.get("generator") != GENERATOR:
            raise ParameterError(f"unknown generator {data.get('generator')!r}")
        r = FreeParameter(float(data["r"]["re"]), float(data["r"]["im"]))
        values = tuple(complex(float(c["re"]), float(c["im"])) for c in data["coefficients"])
        return CoefficientSet(r, int(data["n_terms"]), values)
    except (KeyError, TypeError) as exc:
        raise ParameterError(f"malformed coefficient file: {exc}") from exc


def load_coefficients(path) -> CoefficientSet:
    return parse_coefficient_dict(json.loads(Path(path).read_text()))


# -- argument types -----------------------------------------------------------

def _int_in(lo, hi):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"must be in [{lo}, {hi}], got {value}")
        return value
    return parse


def _finite(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _r_x(text):
    value = _finite(text)
    if not value > -0.5:
        raise argparse.ArgumentTypeError(f"real part of r must exceed -1/2, got {value}")
    return value


def _positive(text):
    value = _finite(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _add_r(p, required=True):
    p.add_argument("--r-re", type=_r_x, required=required, help="real part of r")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--r-im", type=_finite, help="imaginary part of r")
    g.add_argument("--r-im-pi", type=_finite, metavar="MULT",
                   help="imaginary part of r as a multiple of pi")


def _r_from(args) -> FreeParameter:
    im = 0.0
    if args.r_im is not None:
        im = args.r_im
    elif args.r_im_pi is not None:
        im = args.r_im_pi * math.pi
    return FreeParameter(args.r_re, im)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _fmt15(z: complex) -> str:
    return f"{z.real:.15g} {z.imag:+.15g}i"


# -- commands -----------------------------------------------------------------

def cmd_gen(args, out):
    coeffs = coeffgen.generate(_r_from(args), args.n)
    print(f"# r = {coeffs.r.r_x:.17g} {coeffs.r.r_y:+.17g}i, N = {coeffs.n_terms}", file=out)
    print(f"{'k':>3}  {'re':>24}  {'im':>24}", file=out)
    for k, c in enumerate(coeffs.coefficients):
        print(f"{k:>3}  {_fmt(c.real):>24}  {_fmt(c.imag):>24}", file=out)
    if args.out:
        dump_coefficients(coeffs, args.out)
    return EXIT_OK


def cmd_eval(args, out):
    if args.coeffs:
        if args.r_re is not None:
            raise UsageError("give either --coeffs or --r-re/--n, not both")
        coeffs = load_coefficients(args.coeffs)
    else:
        if args.r_re is None:
            raise UsageError("give --coeffs FILE or --r-re (with optional --r-im, --n)")
        coeffs = coeffgen.generate(_r_from(args), args.n)
    z = complex(args.z_re, args.z_im)
    g = evaluator.gamma(z, coeffs)
    g1 = evaluator.gamma(z + 1, coeffs)
    print(f"Gamma(z)   = {_fmt15(g)}", file=out)
    print(f"Gamma(z+1) = {_fmt15(g1)}", file=out)
    return EXIT_OK


def cmd_sweep(args, out):
    records = harness.run_preset(args.preset, args.n)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            harness.write_sweep_csv(records, fh)
    else:
        harness.write_sweep_csv(records, out)
    return EXIT_OK


def cmd_special(args, out):
    points = geometry.find_special_points(args.rx, args.ymax)
    print(f"{'r_y':>24}  {'kind':<17} {'condition_residual':>22}  {'a0_cross_part':>22}", file=out)
    for p in points:
        print(f"{_fmt(p.r_y_root):>24}  {p.kind:<17} {p.condition_residual:>22.6e}  "
              f"{p.a0_cross_part:>22.6e}", file=out)
    return EXIT_OK


def cmd_xcheck(args, out):
    r = _r_from(args)
    recursion = coeffgen.generate(r, args.kmax + 1).coefficients
    status = EXIT_OK
    print(f"{'k':>3}  {'recursion':>44}  {'quadrature':>44}  {'abs_diff':>10}", file=out)
    for k, q, exc in transform.iter_quadrature(r, args.kmax):
        if exc is not None:
            print(f"{k:>3}  quadrature failed: {exc}", file=out)
            status = EXIT_XCHECK
            continue
        diff = abs(q - recursion[k])
        print(f"{k:>3}  {_fmt15(recursion[k]):>44}  {_fmt15(q):>44}  {diff:>10.3e}", file=out)
        if diff > XCHECK_TOL:
            status = EXIT_XCHECK
    return status


def cmd_sphere(args, out):
    ys = [args.ymin + (args.ymax - args.ymin) * i / (args.points - 1) for i in range(args.points)]
    if args.out:
        with open(args.out, "w", newline="") as fh:
            harness.write_sphere_csv(args.rx, ys, args.n, fh)
    else:
        harness.write_sphere_csv(args.rx, ys, args.n, out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lanczos-gamma",
                     description="Lanczos Gamma approximation with a complex free parameter.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a coefficient set")
    _add_r(p)
    p.add_argument("--n", type=_int_in(1, coeffgen.MAX_TERMS), required=True)
    p.add_argument("--out", help="write the coefficient JSON file here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eval", help="evaluate Gamma(z) and Gamma(z+1)")
    p.add_argument("--coeffs", help="coefficient JSON file")
    _add_r(p, required=False)
    p.add_argument("--n", type=_int_in(1, coeffgen.MAX_TERMS), default=10)
    p.add_argument("--z-re", type=_finite, required=True)
    p.add_argument("--z-im", type=_finite, default=0.0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="run an error sweep and write CSV")
    p.add_argument("preset", choices=harness.PRESETS)
    p.add_argument("--n", type=_int_in(1, coeffgen.MAX_TERMS), default=10)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("special", help="find r_y where a_0 is purely real or imaginary")
    p.add_argument("--rx", type=_r_x, required=True)
    p.add_argument("--ymax", type=_positive, default=2 * math.pi)
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("xcheck", help="compare recursion and quadrature coefficients")
    _add_r(p)
    p.add_argument("--kmax", type=_int_in(0, transform.MAX_K), default=9)
    p.set_defaults(func=cmd_xcheck)

    p = sub.add_parser("sphere", help="coefficient paths on the Riemann sphere as CSV")
    p.add_argument("--rx", type=_r_x, default=1.0)
    p.add_argument("--ymin", type=_finite, default=-20 * math.pi)
    p.add_argument("--ymax", type=_finite, default=20 * math.pi)
    p.add_argument("--points", type=_int_in(2, 100000), default=401)
    p.add_argument("--n", type=_int_in(1, coeffgen.MAX_TERMS), default=11)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_sphere)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=err)
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (LanczosError, OverflowError, ZeroDivisionError) as exc:
        print(f"numeric error: {exc}", file=err)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
