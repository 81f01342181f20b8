import math

import mpmath
import pytest

# a_k(1 + 20 pi i) as printed in the published table
TABLE_R1_20PI = [
    complex(0.32272800, -0.31511539),
    complex(-0.33566576, 0.30053412),
    complex(0.37045027, -0.25375121),
    complex(-0.41388748, 0.16751781),
    complex(0.44150035, -0.03647994),
    complex(-0.41823596, -0.13196358),
    complex(0.30817352, 0.30446707),
    complex(-0.09837046, -0.41551337),
    complex(-0.16793546, 0.38494230),
    complex(0.37447472, -0.172296311),
]


def mp_gamma(z):
    """Independent Gamma oracle (mpmath, 30 digits)."""
    with mpmath.workdps(30):
        return complex(mpmath.gamma(mpmath.mpc(z)))


def rel(a, b):
    return abs(a - b) / abs(b)


@pytest.fixture(scope="session")
def coeffs_r1():
    from lanczos_gamma import generate

    return generate(1, 10)


@pytest.fixture(scope="session")
def reference():
    from lanczos_gamma.reference import reference_set

    return reference_set()


ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the end-of-run summary."""

    def record(label, ok, detail):
        ACCEPTANCE_RESULTS[label] = (bool(ok), detail)
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: (int(s.split()[0].rstrip("ab")), s)):
        ok, detail = ACCEPTANCE_RESULTS[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
