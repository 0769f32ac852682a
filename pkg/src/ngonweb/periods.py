"""Closed-form tau-periods of the generation ladders (the 8k+2 family).

The D[k] and M[k] period sequences satisfy the shared second-order
difference equation p_k = n*p_(k-1) + (n+1)*p_(k-2) with n = N/2; the
closed forms below are their solutions for the standard initial
conditions.  All arithmetic is arbitrary-precision integer; the closed
forms are asserted to divide exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "RecurrenceSpec",
    "NonIntegral",
    "d_period",
    "m_period",
    "recurrence_solve",
    "d3_count",
    "ratio",
    "ratio_str",
    "ds_initial_conditions",
]


class NonIntegral(ArithmeticError):
    """A closed form failed integrality; signals misuse (e.g. even n for M)."""


@dataclass(frozen=True)
class RecurrenceSpec:
    """Initial data for p_k = n*p_(k-1) + (n+1)*p_(k-2)."""
    n: int
    p1: int
    p2: int

    def __post_init__(self):
        if self.n < 2 or self.p1 <= 0 or self.p2 <= 0:
            raise ValueError("need n >= 2 and positive initial periods")


def d_period(n: int, k: int) -> int:
    """Period of D[k] for N = 2n: -n*((-1)^k - (1+n)^k)/(2+n)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    num = -n * ((-1) ** k - (1 + n) ** k)
    if num % (2 + n) != 0:
        raise NonIntegral(f"d_period({n},{k}) is not an integer")
    return num // (2 + n)


def m_period(n: int, k: int) -> int:
    """Period of M[k] for N = 2n, n odd:
    n*((-1)^(1+k) + (-1)^k*n + 3*(1+n)^k)/(2*(2+n))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n % 2 == 0:
        raise NonIntegral(f"m_period needs odd n, got {n}")
    num = n * ((-1) ** (1 + k) + (-1) ** k * n + 3 * (1 + n) ** k)
    den = 2 * (2 + n)
    if num % den != 0:
        raise NonIntegral(f"m_period({n},{k}) is not an integer")
    return num // den


def recurrence_solve(spec: RecurrenceSpec, k: int) -> int:
    """p_k from the shared recurrence, exact integers."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return spec.p1
    if k == 2:
        return spec.p2
    a, b = spec.p1, spec.p2
    for _ in range(k - 2):
        a, b = b, spec.n * b + (spec.n + 1) * a
    return b


def d3_count(n: int) -> int:
    """Total number of D[3] tiles: n^3 + n*(n+1)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return n ** 3 + n * (n + 1)


def ds_initial_conditions(n: int, chain: str) -> RecurrenceSpec:
    """Documented initial conditions for the satellite chains of N = 2n:
    'D' (n, n^2), 'M' (n, n*(3*(n-1)/2 + 2)), 'DS7' (4n, n*(5n+1)),
    'DS3' (6n, n*(7n+1)), 'M11' (2n, n*(2 + (3/2)*(n-1)))."""
    if chain == "D":
        return RecurrenceSpec(n, n, n * n)
    if chain == "M":
        q = Fraction(3 * (n - 1), 2) + 2
        if q.denominator != 1:
            raise NonIntegral("M chain needs odd n")
        return RecurrenceSpec(n, n, n * int(q))
    if chain == "DS7":
        return RecurrenceSpec(n, 4 * n, n * (5 * n + 1))
    if chain == "DS3":
        return RecurrenceSpec(n, 6 * n, n * (7 * n + 1))
    if chain == "M11":
        q = 2 + Fraction(3, 2) * (n - 1)
        if q.denominator != 1:
            raise NonIntegral("M11 chain needs odd n")
        return RecurrenceSpec(n, 2 * n, n * int(q))
    raise ValueError(f"unknown chain {chain!r}")


def ratio(n: int, k: int, which: str = "D") -> Fraction:
    """Exact ratio p_k/p_(k-1); approaches n+1 = N/2+1 geometrically."""
    if k < 2:
        raise ValueError("ratio needs k >= 2")
    f = d_period if which == "D" else m_period
    if which not in ("D", "M"):
        raise ValueError("which must be 'D' or 'M'")
    return Fraction(f(n, k), f(n, k - 1))


def ratio_str(n: int, k: int, which: str = "D", places: int = 5) -> str:
    """Ratio printed with `places` decimals, truncated toward zero (the
    convention that prints 14.00008 for the n=13 M-ratio at k=6)."""
    r = ratio(n, k, which)
    scaled = (r.numerator * 10 ** places) // r.denominator
    s = str(scaled)
    return f"{s[:-places]}.{s[-places:]}"
