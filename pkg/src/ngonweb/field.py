"""Exact arithmetic in cyclotomic fields Q(zeta_M).

An element is a vector of exact rationals on the power basis
{1, z, z^2, ..., z^(phi(M)-1)}, z = exp(2*pi*i/M), reduced modulo the M-th
cyclotomic polynomial.  The all-zero vector is the unique representation of
zero, so equality is coefficient-wise after lifting to a common conductor.

Every length, coordinate and scale in this package ultimately reduces to a
CycloNum; floating point enters only through the explicit evaluation helpers
at the bottom of this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

__all__ = [
    "CycloNum",
    "RationalPoly",
    "SignCertificate",
    "DivisionByZero",
    "TanPole",
    "euler_phi",
    "cyclotomic_poly",
    "root_of_unity",
    "rational",
    "trig",
    "trig_at_conductor",
    "min_trig_conductor",
    "certified_sign",
    "to_float",
    "cos_table_float",
    "cos_table_mpf",
]


class DivisionByZero(ZeroDivisionError):
    """Division by an element that reduces to the zero vector."""


class TanPole(ValueError):
    """tan(k*pi/M) requested at a pole (k/M = 1/2 mod 1)."""


# ---------------------------------------------------------------------------
# conductor-level tables

@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    assert n >= 1
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials, ascending coefficients."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd]
        if c % den[dd] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[dd]
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[: dd]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_M, ascending, computed by exact division
    of x^M - 1 by the Phi_d for proper divisors d of M."""
    if M == 1:
        return (-1, 1)
    num = [0] * (M + 1)
    num[0], num[M] = -1, 1
    for d in _divisors(M):
        if d < M:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_rows(M: int) -> tuple[tuple[int, ...], ...]:
    """Row j is x^(phi+j) reduced mod Phi_M, for j = 0..phi-2 (integer vectors)."""
    phi = euler_phi(M)
    cyc = cyclotomic_poly(M)
    base = [-c for c in cyc[:phi]]  # x^phi = -(lower part), Phi monic
    rows = [tuple(base)]
    cur = base
    for _ in range(phi - 2):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            for i in range(phi):
                nxt[i] += top * base[i]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _power_vectors(M: int) -> tuple[tuple[int, ...], ...]:
    """x^e mod Phi_M for e = 0..M-1 as integer vectors."""
    phi = euler_phi(M)
    cyc = cyclotomic_poly(M)
    base = [-c for c in cyc[:phi]]  # x^phi = -(lower part)
    out: list[tuple[int, ...]] = []
    cur: list[int] = []
    for e in range(M):
        if e < phi:
            v = [0] * phi
            v[e] = 1
            out.append(tuple(v))
            cur = v
        else:
            top = cur[phi - 1]
            nxt = [0] + list(cur[: phi - 1])
            if top:
                for i in range(phi):
                    nxt[i] += top * base[i]
            out.append(tuple(nxt))
            cur = nxt
    return tuple(out)


def _vec_common_den(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    nums = [int(c.numerator * (den // c.denominator)) for c in coeffs]
    return nums, den


def _mul_int_vecs(a: Sequence[int], b: Sequence[int], M: int) -> list[int]:
    phi = euler_phi(M)
    conv = [0] * (2 * phi - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
    if phi == 1:
        return [conv[0]]
    rows = _reduction_rows(M)
    out = conv[:phi]
    for j in range(phi, 2 * phi - 1):
        c = conv[j]
        if c:
            row = rows[j - phi]
            for i in range(phi):
                out[i] += c * row[i]
    return out


# ---------------------------------------------------------------------------
# the element type

_ZERO = Fraction(0)


class CycloNum:
    """Element of Q(zeta_M) on the reduced power basis.

    Immutable.  Mixed-conductor arithmetic lifts both operands to the lcm
    conductor through the canonical embedding zeta_m = zeta_M^(M/m).
    """

    __slots__ = ("conductor", "coeffs", "real_flag")

    def __init__(self, conductor: int, coeffs: Iterable[Fraction | int],
                 real_flag: bool = False):
        phi = euler_phi(conductor)
        cc = tuple(Fraction(c) for c in coeffs)
        if len(cc) != phi:
            raise ValueError(f"need {phi} coefficients for conductor {conductor}, got {len(cc)}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", cc)
        object.__setattr__(self, "real_flag", bool(real_flag))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CycloNum is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero(conductor: int = 1) -> "CycloNum":
        return CycloNum(conductor, [0] * euler_phi(conductor), real_flag=True)

    @staticmethod
    def from_rational(q, conductor: int = 1) -> "CycloNum":
        v = [Fraction(0)] * euler_phi(conductor)
        v[0] = Fraction(q)
        return CycloNum(conductor, v, real_flag=True)

    # -- basics ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coeffs[0]

    def lift(self, conductor: int) -> "CycloNum":
        """Embed into Q(zeta_C) for a multiple C of the current conductor."""
        m, C = self.conductor, conductor
        if C == m:
            return self
        if C % m != 0:
            raise ValueError(f"cannot lift conductor {m} into {C}")
        step = C // m
        powers = _power_vectors(C)
        phi = euler_phi(C)
        acc = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = powers[(i * step) % C]
                for j in range(phi):
                    if row[j]:
                        acc[j] += c * row[j]
        return CycloNum(C, acc, real_flag=self.real_flag)

    def _pair(self, other) -> tuple["CycloNum", "CycloNum"]:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other, 1)
        if not isinstance(other, CycloNum):
            return NotImplemented, NotImplemented  # type: ignore[return-value]
        if self.conductor == other.conductor:
            return self, other
        C = self.conductor * other.conductor // math.gcd(self.conductor, other.conductor)
        return self.lift(C), other.lift(C)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)],
                        real_flag=a.real_flag and b.real_flag)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.conductor, [-x for x in self.coeffs], real_flag=self.real_flag)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloNum(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)],
                        real_flag=a.real_flag and b.real_flag)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloNum(self.conductor, [c * q for c in self.coeffs],
                            real_flag=self.real_flag)
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        an, ad = _vec_common_den(a.coeffs)
        bn, bd = _vec_common_den(b.coeffs)
        prod = _mul_int_vecs(an, bn, a.conductor)
        den = ad * bd
        return CycloNum(a.conductor, [Fraction(p, den) for p in prod],
                        real_flag=a.real_flag and b.real_flag)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        # extended Euclid in Q[x] against Phi_M
        M = self.conductor
        phi = euler_phi(M)
        if phi == 1:
            return CycloNum(M, [1 / self.coeffs[0]], real_flag=self.real_flag)
        r0 = [Fraction(c) for c in cyclotomic_poly(M)]
        r1 = list(self.coeffs)
        s0, s1 = [_ZERO], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                inv += [_ZERO] * (phi - len(inv))
                return CycloNum(M, inv[:phi], real_flag=self.real_flag)
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise DivisionByZero("division by zero")
            return self * Fraction(q.denominator, q.numerator)
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        if b.is_zero():
            raise DivisionByZero("division by zero element")
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycloNum.from_rational(other, 1).__truediv__(self)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloNum.from_rational(1, self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure --------------------------------------------------------------

    def galois(self, a: int) -> "CycloNum":
        """The Galois image under zeta -> zeta^a (a coprime to the conductor)."""
        M = self.conductor
        if math.gcd(a, M) != 1:
            raise ValueError(f"{a} is not coprime to the conductor {M}")
        powers = _power_vectors(M)
        phi = euler_phi(M)
        acc = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = powers[(a * i) % M]
                for j in range(phi):
                    if row[j]:
                        acc[j] += c * row[j]
        return CycloNum(M, acc, real_flag=self.real_flag)

    def conj(self) -> "CycloNum":
        """Complex conjugation, zeta -> zeta^(M-1)."""
        M = self.conductor
        if M <= 2:
            return self
        return self.galois(M - 1)

    def is_real_element(self) -> bool:
        """Exact test: fixed by complex conjugation."""
        return self.conj() == self

    def as_real(self) -> "CycloNum":
        """Return self with real_flag set after verifying conj-invariance."""
        if not self.is_real_element():
            raise ValueError("element is not fixed by conjugation")
        return CycloNum(self.conductor, self.coeffs, real_flag=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other, 1)
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        nz = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if not nz:
            return "CycloNum<0>"
        body = " + ".join(f"{c}*z^{i}" if i else f"{c}" for i, c in nz[:6])
        if len(nz) > 6:
            body += " + ..."
        return f"CycloNum<{body} | M={self.conductor}>"

    # -- serialization ------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
            "real": self.real_flag,
        }

    @staticmethod
    def from_dict(d: dict) -> "CycloNum":
        return CycloNum(d["conductor"], [Fraction(s) for s in d["coeffs"]],
                        real_flag=d.get("real", False))


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = len(b) - 1
    while b and b[-1] == 0:
        b = b[:-1]
        db -= 1
    q = [_ZERO] * max(1, len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] / b[db]
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return q, a[:db]


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    return [a[i] - (b[i] if i < len(b) else _ZERO) for i in range(n)]


# ---------------------------------------------------------------------------
# named constructors

def root_of_unity(M: int, k: int) -> CycloNum:
    """zeta_M^k in canonical reduced form."""
    if M < 1:
        raise ValueError("conductor must be >= 1")
    row = _power_vectors(M)[k % M]
    return CycloNum(M, list(row))


def rational(q, conductor: int = 1) -> CycloNum:
    return CycloNum.from_rational(q, conductor)


def field_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    """Named form of the four field operations (operators do the work)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def min_trig_conductor(M: int) -> int:
    """Smallest conductor C used internally for cos/sin/tan of k*pi/M with
    all of them representable: C = lcm(2M, 4)."""
    return 2 * M if M % 2 == 0 else 4 * M


def trig_at_conductor(M: int, k: int, fn: str, conductor: int) -> CycloNum:
    """cos/sin/tan of k*pi/M as an element of Q(zeta_conductor).

    Requires 2M | conductor*k' arithmetic to work out: conductor must be a
    multiple of lcm(2M, 4) divided evenly, i.e. conductor*k/(2M) integral for
    all k and conductor divisible by 4.
    """
    C = conductor
    if (C * k) % (2 * M) != 0:
        raise ValueError(f"conductor {C} cannot represent exp(i*{k}*pi/{M})")
    if fn in ("sin", "tan") and C % 4 != 0:
        raise ValueError(f"conductor {C} lacks i, cannot take {fn}")
    a = (C * k) // (2 * M)
    zp = root_of_unity(C, a)
    zm = root_of_unity(C, -a)
    cos = (zp + zm) * Fraction(1, 2)
    if fn == "cos":
        return cos.as_real()
    i_unit = root_of_unity(C, C // 4)
    sin = (zp - zm) * i_unit.inverse() * Fraction(1, 2)
    if fn == "sin":
        return sin.as_real()
    if fn == "tan":
        if cos.is_zero():
            raise TanPole(f"tan({k}*pi/{M}) is a pole")
        return (sin / cos).as_real()
    raise ValueError(f"unknown trig fn {fn!r}")


def trig(M: int, k: int, fn: str) -> CycloNum:
    """Exact cos/sin/tan of the angle k*pi/M, at conductor 4M."""
    if M < 1:
        raise ValueError("M must be >= 1")
    return trig_at_conductor(M, k, fn, 4 * M)


# ---------------------------------------------------------------------------
# numeric evaluation and certified sign

@lru_cache(maxsize=None)
def _cos_table(M: int, dps: int) -> tuple:
    """mpf values of cos(2*pi*i/M), i = 0..phi-1, at dps decimal digits."""
    phi = euler_phi(M)
    with mpmath.workdps(dps + 10):
        two_pi_over_M = 2 * mpmath.pi / M
        return tuple(mpmath.cos(two_pi_over_M * i) for i in range(phi))


@lru_cache(maxsize=None)
def _sin_table(M: int, dps: int) -> tuple:
    phi = euler_phi(M)
    with mpmath.workdps(dps + 10):
        two_pi_over_M = 2 * mpmath.pi / M
        return tuple(mpmath.sin(two_pi_over_M * i) for i in range(phi))


def cos_table_mpf(M: int, dps: int) -> tuple:
    return _cos_table(M, dps)


@lru_cache(maxsize=None)
def cos_table_float(M: int) -> tuple:
    return tuple(float(x) for x in _cos_table(M, 30))


def to_float(a: CycloNum, digits: int = 30):
    """Evaluate numerically at `digits` decimal digits.

    Returns mpmath.mpf for real-flagged elements, mpmath.mpc otherwise.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    M = a.conductor
    with mpmath.workdps(digits + 10):
        cos_t = _cos_table(M, digits)
        re = mpmath.mpf(0)
        for i, c in enumerate(a.coeffs):
            if c:
                re += mpmath.mpf(c.numerator) / c.denominator * cos_t[i]
        if a.real_flag:
            return +re
        sin_t = _sin_table(M, digits)
        im = mpmath.mpf(0)
        for i, c in enumerate(a.coeffs):
            if c:
                im += mpmath.mpf(c.numerator) / c.denominator * sin_t[i]
        return mpmath.mpc(re, im)


@dataclass(frozen=True)
class SignCertificate:
    """Certified sign of a real cyclotomic element."""
    sign: int
    digits_used: int
    witness_interval: tuple[str, str]


@lru_cache(maxsize=None)
def _cos_table_iv(M: int, dps: int) -> tuple:
    """Interval enclosures of cos(2*pi*i/M) at dps digits."""
    phi = euler_phi(M)
    iv = mpmath.iv
    old = iv.dps
    try:
        iv.dps = dps + 8
        two_pi = 2 * iv.pi
        return tuple(iv.cos(two_pi * i / M) for i in range(phi))
    finally:
        iv.dps = old


def real_interval(coeffs: Sequence[Fraction], M: int, dps: int):
    """Rigorous interval for sum coeffs[i]*cos(2*pi*i/M)."""
    iv = mpmath.iv
    old = iv.dps
    try:
        iv.dps = dps + 8
        table = _cos_table_iv(M, dps)
        acc = iv.mpf(0)
        for i, c in enumerate(coeffs):
            if c:
                acc += (iv.mpf(c.numerator) / c.denominator) * table[i]
        return acc
    finally:
        iv.dps = old


def certified_sign(a: CycloNum, start_digits: int = 64) -> SignCertificate:
    """Provably correct sign of a real element.

    The symbolic zero test runs first; otherwise interval evaluation digits
    are doubled until the enclosure excludes zero.  Nonzero algebraic numbers
    separate from zero, so this terminates.
    """
    if not a.real_flag:
        a = a.as_real()
    if a.is_zero():
        return SignCertificate(0, 0, ("0", "0"))
    dps = start_digits
    while True:
        box = real_interval(a.coeffs, a.conductor, dps)
        lo_raw, hi_raw = box._mpi_
        lo = mpmath.mp.make_mpf(lo_raw)
        hi = mpmath.mp.make_mpf(hi_raw)
        witness = (mpmath.nstr(lo, 12), mpmath.nstr(hi, 12))
        if lo > 0:
            return SignCertificate(1, dps, witness)
        if hi < 0:
            return SignCertificate(-1, dps, witness)
        dps *= 2


# ---------------------------------------------------------------------------
# rational polynomials (used by the identification layer)

@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, ascending powers."""
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cc = tuple(Fraction(c) for c in self.coeffs)
        while len(cc) > 1 and cc[-1] == 0:
            cc = cc[:-1]
        if not cc:
            cc = (Fraction(0),)
        object.__setattr__(self, "coeffs", cc)

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.degree == -1

    def __call__(self, x):
        if isinstance(x, CycloNum):
            acc = CycloNum.from_rational(0, x.conductor)
        else:
            acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts).replace("+ -", "- ")
