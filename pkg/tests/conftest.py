"""Shared oracles for the test suite.

The numeric oracle is mpmath at explicit precision, independent of the
exact cyclotomic path it checks.
"""

import mpmath
import pytest


def oracle_tan(k: int, M: int, dps: int = 60):
    """tan(k*pi/M) by direct high-precision evaluation."""
    with mpmath.workdps(dps):
        return mpmath.tan(mpmath.pi * k / M)


def oracle_cos(k: int, M: int, dps: int = 60):
    with mpmath.workdps(dps):
        return mpmath.cos(mpmath.pi * k / M)


def approx_equal(a, b, tol) -> bool:
    return abs(mpmath.mpf(a) - mpmath.mpf(b)) < tol


@pytest.fixture(scope="session")
def tan_oracle():
    return oracle_tan


@pytest.fixture(scope="session")
def cos_oracle():
    return oracle_cos
