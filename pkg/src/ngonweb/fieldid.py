"""Recognition of computed lengths as rational polynomials in a generator.

Given a value v and a generator g of the scaling field, find the rational
polynomial p with p(g) = v: build the integer-relation lattice for
(1, g, ..., g^d, v) scaled to the working precision, LLL-reduce it, read
the relation off the shortest vector, and verify exactly in the cyclotomic
field whenever v is exact.  A relation is never guessed: failures raise
NoRelationFound or PrecisionInsufficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import mpmath

from .field import CycloNum, RationalPoly, to_float

__all__ = [
    "IdentifyRequest",
    "IdentifiedPoly",
    "NoRelationFound",
    "PrecisionInsufficient",
    "DegreeExceeded",
    "identify",
    "eval_poly",
    "minimal_poly",
    "lll_reduce",
]


class NoRelationFound(ArithmeticError):
    """No integer relation within the degree/height bounds."""


class PrecisionInsufficient(ArithmeticError):
    """The candidate relation failed the residual or exactness check."""


class DegreeExceeded(ArithmeticError):
    """minimal_poly found no relation up to max_degree."""


@dataclass(frozen=True)
class IdentifyRequest:
    value: Union[CycloNum, "mpmath.mpf", float, str]
    generator: CycloNum
    degree: int
    precision_digits: Optional[int] = None     # default 30*(degree+1)
    height_bound: int = 256                    # max coefficient bits

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if (self.precision_digits is not None
                and self.precision_digits < 16 * (self.degree + 1)):
            raise ValueError("precision_digits must be at least 16*(degree+1)")

    def dps(self) -> int:
        return self.precision_digits or 30 * (self.degree + 1)


@dataclass(frozen=True)
class IdentifiedPoly:
    poly: RationalPoly
    residual: str
    verified_exact: bool


# ---------------------------------------------------------------------------
# exact LLL (delta = 0.99) over integer row vectors

def _round_half(f: Fraction) -> int:
    return (2 * f.numerator + f.denominator) // (2 * f.denominator)


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)):
    """LLL with exact rational Gram-Schmidt bookkeeping (textbook updates),
    returning the reduced integer rows."""
    b = [list(row) for row in basis]
    n = len(b)
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n

    def recompute(i):
        # Gram-Schmidt row i against rows < i using cached mu/B
        gram = [sum(Fraction(x) * y for x, y in zip(b[i], b[j])) for j in range(i + 1)]
        for j in range(i):
            m = gram[j]
            for l in range(j):
                m -= mu[j][l] * mu[i][l] * B[l]
            mu[i][j] = m / B[j] if B[j] else Fraction(0)
        Bi = gram[i]
        for l in range(i):
            Bi -= mu[i][l] ** 2 * B[l]
        B[i] = Bi

    for i in range(n):
        recompute(i)

    def size_reduce(k, j):
        if abs(mu[k][j]) * 2 > 1:
            r = _round_half(mu[k][j])
            b[k] = [x - r * y for x, y in zip(b[k], b[j])]
            for l in range(j):
                mu[k][l] -= r * mu[j][l]
            mu[k][j] -= r

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            for j in range(k - 2, -1, -1):
                size_reduce(k, j)
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            # standard swap update of mu/B for rows k-1, k and below
            m = mu[k][k - 1]
            Bk = B[k] + m * m * B[k - 1]
            if Bk == 0:
                recompute(k - 1)
                recompute(k)
            else:
                mu[k][k - 1] = m * B[k - 1] / Bk
                B[k] = B[k - 1] * B[k] / Bk
                B[k - 1] = Bk
                for i in range(k + 1, n):
                    t = mu[i][k]
                    mu[i][k] = mu[i][k - 1] - m * t
                    mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
                for j in range(k - 1):
                    mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
            k = max(k - 1, 1)
    return b


# ---------------------------------------------------------------------------

def _to_mpf(value, dps: int):
    if isinstance(value, CycloNum):
        return to_float(value.as_real() if not value.real_flag else value, dps)
    return mpmath.mpf(str(value) if not isinstance(value, str) else value)


def identify(req: IdentifyRequest) -> IdentifiedPoly:
    """The unique rational polynomial p of degree <= req.degree with
    p(generator) = value, via lattice reduction plus exact verification."""
    d = req.degree
    if d < 1:
        raise ValueError("degree must be >= 1")
    dps = req.dps()
    with mpmath.workdps(dps + 20):
        g = _to_mpf(req.generator, dps + 20)
        xs = [mpmath.mpf(1)]
        for _ in range(d):
            xs.append(xs[-1] * g)
        v = _to_mpf(req.value, dps + 20)
        xs.append(v)
        scale = mpmath.mpf(10) ** dps
        n = len(xs)                        # d + 2 lattice dimension
        rows = []
        for i, x in enumerate(xs):
            row = [0] * n + [int(mpmath.nint(x * scale))]
            row[i] = 1
            rows.append(row)
        reduced = lll_reduce(rows)
        # pick the shortest row that actually involves the value column
        best = None
        for row in reduced:
            if row[n - 1] == 0:
                continue
            norm = sum(x * x for x in row[:n]) + row[n] * row[n]
            if best is None or norm < best[0]:
                best = (norm, row)
        if best is None:
            raise NoRelationFound("no reduced vector involves the target value")
        row = best[1]
        a_val = row[n - 1]
        coeffs = [Fraction(-row[i], a_val) for i in range(d + 1)]
        for c in coeffs:
            if max(abs(c.numerator), c.denominator).bit_length() > req.height_bound:
                raise NoRelationFound(
                    f"relation coefficients exceed the height bound "
                    f"({req.height_bound} bits)")
        poly = RationalPoly(tuple(coeffs))
        # numeric residual check at half the working precision
        approx = mpmath.mpf(0)
        for c, x in zip(coeffs, xs[: d + 1]):
            approx += mpmath.mpf(c.numerator) / c.denominator * x
        residual = abs(approx - v)
        if residual > mpmath.mpf(10) ** (-dps // 2):
            raise PrecisionInsufficient(
                f"residual {mpmath.nstr(residual, 8)} too large at {dps} digits")
        residual_str = mpmath.nstr(residual, 8)
    verified = False
    if isinstance(req.value, CycloNum):
        exact = eval_poly(poly, req.generator)
        if not (exact - req.value).is_zero():
            raise PrecisionInsufficient(
                "lattice relation failed exact verification")
        verified = True
    return IdentifiedPoly(poly=poly, residual=residual_str, verified_exact=verified)


def eval_poly(p: RationalPoly, g: CycloNum) -> CycloNum:
    """Sum of c_i * g^i, exactly."""
    acc = CycloNum.from_rational(0, g.conductor)
    for c in reversed(p.coeffs):
        acc = acc * g + c
    return acc


def denominators_power_of_two(p: RationalPoly) -> bool:
    """Soft twice-even sanity check: every recovered denominator is a power
    of two (true of all the documented twice-even identifications)."""
    return all(c.denominator & (c.denominator - 1) == 0 for c in p.coeffs)


def minimal_poly(g: CycloNum, max_degree: int) -> RationalPoly:
    """Monic minimal polynomial of a cyclotomic g over Q.

    Built as the product of (x - c) over the distinct Galois conjugates c
    of g (zeta -> zeta^a, a coprime to the conductor), then verified by
    exact evaluation to zero.
    """
    if g.is_zero():
        return RationalPoly((Fraction(0), Fraction(1)))
    if g.is_rational():
        return RationalPoly((-g.as_rational(), Fraction(1)))
    M = g.conductor
    conjugates = []
    for a in range(1, M + 1):
        if math.gcd(a, M) != 1:
            continue
        im = g.galois(a)
        if not any(im == c for c in conjugates):
            conjugates.append(im)
    if len(conjugates) - 1 > max_degree:
        raise DegreeExceeded(
            f"minimal degree {len(conjugates)} exceeds bound {max_degree}")
    # multiply out prod (x - c): coefficients as CycloNums, then cast to Q
    poly = [CycloNum.from_rational(1, 1)]
    for c in conjugates:
        nxt = [CycloNum.zero(1)] * (len(poly) + 1)
        for i, p in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + p
            nxt[i] = nxt[i] - p * c
        poly = nxt
    coeffs = []
    for p in poly:
        if not p.is_rational():
            raise ArithmeticError("conjugate product has irrational coefficient")
        coeffs.append(p.as_rational())
    out = RationalPoly(tuple(coeffs))
    if not eval_poly(out, g).is_zero():
        raise ArithmeticError("minimal polynomial failed verification")
    return out
