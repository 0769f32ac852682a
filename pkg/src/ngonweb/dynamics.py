"""The outer-billiards map tau, the Df/Dc imaging maps, orbit periods,
and web point-cloud generation.

Exact mode keeps orbit coordinates as integer vectors over a common
denominator in a fixed cyclotomic power basis (tau steps are pure integer
vector arithmetic), guided by an incrementally maintained float shadow.
Every supporting-vertex decision with a float margin below the accumulated
drift bound is re-decided rigorously: interval evaluation with escalating
precision, then symbolically.  Exact first-return tests compare integer
vectors, so reported exact periods are certificates, not approximations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

import mpmath
import numpy as np

from . import _kernels as K
from .field import (
    CycloNum,
    euler_phi,
    min_trig_conductor,
    rational,
    real_interval,
    root_of_unity,
    to_float,
    _mul_int_vecs,
)
from .family import Tile, build_ngon, _tanpi

__all__ = [
    "MapSpec",
    "OrbitResult",
    "PointCloud",
    "SingularPoint",
    "InsidePolygon",
    "tau_step",
    "find_period",
    "web_generate",
    "candle_trace",
    "web_seeds",
    "df_step",
    "dc_step",
    "frame_to_dc",
    "frame_from_dc",
    "rotate_points",
    "ngon_vertex_arrays",
    "tau_benchmark",
]

FLOAT_RETURN_TOL = 1e-12
FLOAT_SINGULAR_TOL = 1e-14


class SingularPoint(ValueError):
    """The point lies on an edge-extension line: two supporting vertices."""


class InsidePolygon(ValueError):
    """tau is undefined inside (or on the boundary of) the polygon."""


@dataclass(frozen=True)
class MapSpec:
    """One of the three maps.  theta is the Df rotation angle (2*pi*rho);
    the Dc rotation is fixed at w = 2*pi/N."""
    kind: str                   # tau | tau_inverse | df | dc
    N: int
    theta: Optional[float] = None
    frame: str = "centered"     # centered | dc_frame

    def __post_init__(self):
        if self.kind not in ("tau", "tau_inverse", "df", "dc"):
            raise ValueError(f"unknown map kind {self.kind!r}")
        if self.kind == "df":
            th = self.theta
            if th is None or not (0.0 < th < math.pi):
                raise ValueError("Df needs theta in (0, pi)")


@dataclass(frozen=True)
class OrbitResult:
    period: Optional[int]
    doubling: bool
    half_period: Optional[int]
    iterations_used: int
    mode: str                            # exact | float
    terminated_by: str                   # return | limit | singular
    exact_confirmed: bool = False


@dataclass
class PointCloud:
    points: np.ndarray                   # float64, shape (n, 2)
    crop: tuple
    source: dict
    iters: int
    recorded: int                        # in-crop hits (incl. beyond capacity)
    total: int                           # iterations actually performed
    mode: str = "float"
    stopped_orbits: int = 0              # seeds that lost their support
    exact_points: Optional[list] = None  # exact-mode canonical points

    @property
    def return_rate(self) -> float:
        return self.recorded / self.total if self.total else 0.0


# ---------------------------------------------------------------------------
# float polygon data

@lru_cache(maxsize=None)
def _ngon_vertices_exact(N: int) -> tuple:
    return tuple(build_ngon(N).vertices())


@lru_cache(maxsize=None)
def ngon_vertex_arrays(N: int) -> tuple[np.ndarray, np.ndarray]:
    """Float64 vertex arrays of the height-1 N-gon, derived from the exact
    vertices at 30 digits."""
    verts = build_ngon(N).vertices_float()
    vx = np.array([v[0] for v in verts], dtype=np.float64)
    vy = np.array([v[1] for v in verts], dtype=np.float64)
    vx.setflags(write=False)
    vy.setflags(write=False)
    return vx, vy


def _as_float_pair(p) -> tuple[float, float]:
    x, y = p
    if isinstance(x, CycloNum):
        return (float(to_float(x.as_real(), 30)), float(to_float(y.as_real(), 30)))
    return (float(x), float(y))


def _is_exact_pair(p) -> bool:
    return isinstance(p[0], CycloNum) and isinstance(p[1], CycloNum)


# ---------------------------------------------------------------------------
# exact engine

def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class _ExactTauEngine:
    """tau iteration with certified supporting-vertex decisions.

    State is a pair of integer coefficient vectors over a shared denominator
    in the power basis of Q(zeta_C); a tau step is p -> 2v - p on those
    vectors.  The float shadow steers the vertex walk; any decision whose
    float margin is below the drift bound is settled by escalating interval
    arithmetic and, for exact ties, symbolic zero tests.
    """

    ESCALATION_DPS = (64, 128, 256, 512, 1024)

    def __init__(self, N: int, seed, extra_points: Sequence = (), orient: int = 1,
                 web_ties: bool = False, polygon_vertices: Optional[tuple] = None):
        self.N = N
        self.orient = orient
        self.web_ties = web_ties
        verts = polygon_vertices if polygon_vertices is not None \
            else _ngon_vertices_exact(N)
        coords = [c for v in verts for c in v] + [seed[0], seed[1]]
        for p in extra_points:
            coords += [p[0], p[1]]
        C = 1
        for c in coords:
            C = _lcm(C, c.conductor)
        self.C = C
        self.phi = euler_phi(C)
        lifted = [c.lift(C) for c in coords]
        D = 1
        for c in lifted:
            for q in c.coeffs:
                D = _lcm(D, q.denominator)
        self.D = D

        def ivec(c: CycloNum) -> tuple:
            return tuple(int(q * D) for q in c.coeffs)

        m = len(verts)
        self.m = m
        self.vnum = [(ivec(lifted[2 * j]), ivec(lifted[2 * j + 1])) for j in range(m)]
        self.snum = (ivec(lifted[2 * m]), ivec(lifted[2 * m + 1]))
        self.extra = [(ivec(lifted[2 * m + 2 + 2 * i]), ivec(lifted[2 * m + 3 + 2 * i]))
                      for i in range(len(extra_points))]
        self.px = list(self.snum[0])
        self.py = list(self.snum[1])
        # float shadows from exact values (30 digits), maintained incrementally
        self.vxf = np.array([float(to_float(lifted[2 * j].as_real(), 30)) for j in range(m)])
        self.vyf = np.array([float(to_float(lifted[2 * j + 1].as_real(), 30)) for j in range(m)])
        self.sxf = float(to_float(lifted[2 * m].as_real(), 30))
        self.syf = float(to_float(lifted[2 * m + 1].as_real(), 30))
        self.pxf = self.sxf
        self.pyf = self.syf
        self.scale = max(2.0, float(np.max(np.abs(self.vxf))), abs(self.sxf),
                         float(np.max(np.abs(self.vyf))), abs(self.syf))
        self.drift = 1e-15 * self.scale
        self.j = 0
        self.steps = 0
        self.tie_events = 0

    # -- certified predicates ---------------------------------------------

    def _vec_sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def _iv(self, vec, dps):
        return real_interval(vec, self.C, dps)

    def _cross_sign_certified(self, j: int, w: int) -> int:
        """Sign of cross(v_j - p, v_w - p), certified; 0 means p is on the
        line through v_j and v_w (a singular direction)."""
        ax = self._vec_sub(self.vnum[j][0], self.px)
        ay = self._vec_sub(self.vnum[j][1], self.py)
        wx = self._vec_sub(self.vnum[w][0], self.px)
        wy = self._vec_sub(self.vnum[w][1], self.py)
        symbolic_done = False
        for dps in self.ESCALATION_DPS:
            box = self._iv(ax, dps) * self._iv(wy, dps) - self._iv(ay, dps) * self._iv(wx, dps)
            lo, hi = box._mpi_
            lo = mpmath.mp.make_mpf(lo)
            hi = mpmath.mp.make_mpf(hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if not symbolic_done:
                cross = [p - q for p, q in
                         zip(_mul_int_vecs(ax, wy, self.C), _mul_int_vecs(ay, wx, self.C))]
                if all(c == 0 for c in cross):
                    return 0
                symbolic_done = True
        raise ArithmeticError("sign escalation failed to certify a nonzero cross")

    def _dist2_cmp(self, j1: int, j2: int) -> int:
        """Certified sign of |v_j1 - p|^2 - |v_j2 - p|^2 (for tie-breaks)."""
        a1x = self._vec_sub(self.vnum[j1][0], self.px)
        a1y = self._vec_sub(self.vnum[j1][1], self.py)
        a2x = self._vec_sub(self.vnum[j2][0], self.px)
        a2y = self._vec_sub(self.vnum[j2][1], self.py)
        d = [p + q - r - s for p, q, r, s in zip(
            _mul_int_vecs(a1x, a1x, self.C), _mul_int_vecs(a1y, a1y, self.C),
            _mul_int_vecs(a2x, a2x, self.C), _mul_int_vecs(a2y, a2y, self.C))]
        if all(c == 0 for c in d):
            return 0
        for dps in self.ESCALATION_DPS:
            box = self._iv(d, dps)
            lo, hi = box._mpi_
            lo = mpmath.mp.make_mpf(lo)
            hi = mpmath.mp.make_mpf(hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
        raise ArithmeticError("distance comparison failed to certify")

    # -- one step -----------------------------------------------------------

    def _cross_f(self, j, w):
        ax = self.vxf[j] - self.pxf
        ay = self.vyf[j] - self.pyf
        return ax * (self.vyf[w] - self.pyf) - ay * (self.vxf[w] - self.pxf)

    def _find_support(self):
        """Returns (j, singular_flag).  Raises InsidePolygon when no vertex
        supports p."""
        m = self.m
        unc = 64.0 * self.scale * (self.drift + 1e-15 * self.scale)
        j = self.j
        orient = self.orient
        for _ in range(m + 1):
            jm = (j - 1) % m
            jp = (j + 1) % m
            c1 = self._cross_f(j, jm) * orient
            c2 = self._cross_f(j, jp) * orient
            if c1 > unc and c2 > unc:
                return j, False
            if c1 < -unc or c2 < -unc:
                j = jp
                continue
            # uncertain: settle rigorously
            s1 = self._cross_sign_certified(j, jm) * orient
            s2 = self._cross_sign_certified(j, jp) * orient
            if s1 > 0 and s2 > 0:
                return j, False
            if (s1 == 0 and s2 > 0) or (s2 == 0 and s1 > 0) or (s1 == 0 and s2 == 0):
                # p on an extension line through v_j and a neighbor
                if not self.web_ties:
                    return j, True
                self.tie_events += 1
                other = jm if s1 == 0 else jp
                cmp = self._dist2_cmp(j, other)
                return (j if cmp <= 0 else other), False
            j = jp
        raise InsidePolygon("no supporting vertex: point inside the polygon")

    REFRESH_EVERY = 1 << 16

    def _refresh_shadow(self):
        """Recompute the float shadow from the exact state (resets drift)."""
        vals = []
        with mpmath.workdps(40):
            for vec in (self.px, self.py):
                box = real_interval(vec, self.C, 40)
                lo, hi = box._mpi_
                mid = (mpmath.mp.make_mpf(lo) + mpmath.mp.make_mpf(hi)) / 2
                vals.append(float(mid / self.D))
        self.pxf, self.pyf = vals
        self.drift = 1e-13 * self.scale

    def step(self) -> bool:
        """Advance one tau step; returns False on a singular stop."""
        j, singular = self._find_support()
        if singular:
            return False
        self.j = j
        vx, vy = self.vnum[j]
        self.px = [2 * a - b for a, b in zip(vx, self.px)]
        self.py = [2 * a - b for a, b in zip(vy, self.py)]
        self.pxf = 2.0 * self.vxf[j] - self.pxf
        self.pyf = 2.0 * self.vyf[j] - self.pyf
        self.drift += 4e-16 * self.scale
        self.steps += 1
        if self.steps % self.REFRESH_EVERY == 0:
            self._refresh_shadow()
        return True

    # -- exact comparisons ----------------------------------------------------

    def at_point(self, target) -> bool:
        tx, ty = target
        return self.px == list(tx) and self.py == list(ty)

    def near_float(self, x: float, y: float, tol: float) -> bool:
        return abs(self.pxf - x) <= tol and abs(self.pyf - y) <= tol

    def point_fractions(self):
        """Canonical exact coordinates of the current point."""
        D = self.D
        return (tuple(Fraction(n, D) for n in self.px),
                tuple(Fraction(n, D) for n in self.py))


# ---------------------------------------------------------------------------
# single exact step (the spec-level tau)

def tau_step(p, ngon: Tile, inverse: bool = False):
    """One exact outer-billiards step: p -> 2v - p with v the supporting
    vertex for which the polygon lies strictly left (right for the inverse)
    of the directed line p -> v.

    Raises SingularPoint on an edge extension, InsidePolygon inside.
    """
    if not _is_exact_pair(p):
        raise TypeError("tau_step needs exact CycloNum coordinates")
    standard = (ngon.kind == "N" and ngon.height == 1
                and ngon.center[0].is_zero() and ngon.center[1].is_zero())
    verts = None if standard else tuple(ngon.vertices())
    eng = _ExactTauEngine(ngon.gon, p, orient=-1 if inverse else 1,
                          polygon_vertices=verts)
    if not eng.step():
        raise SingularPoint("two supporting vertices: point on an extension line")
    fx, fy = eng.point_fractions()
    C = eng.C
    return (CycloNum(C, fx, real_flag=True), CycloNum(C, fy, real_flag=True))


# ---------------------------------------------------------------------------
# period detection

def find_period(seed, map_spec: Union[MapSpec, int], limit: int = 10 ** 6,
                mode: str = "exact", doubling_center=None,
                exact_confirm_limit: int = 200_000) -> OrbitResult:
    """First return of seed to itself under tau.

    Exact mode: integer-vector equality, a certificate.  Float mode: within
    1e-12, then confirmed by an exact replay when the seed is exact and the
    candidate period is at most exact_confirm_limit.
    """
    spec = MapSpec("tau", map_spec) if isinstance(map_spec, int) else map_spec
    if spec.kind not in ("tau", "tau_inverse"):
        raise ValueError("find_period supports the tau maps")
    orient = 1 if spec.kind == "tau" else -1
    exact_seed = _is_exact_pair(seed)
    if mode == "exact":
        if not exact_seed:
            raise TypeError("exact mode requires CycloNum seed coordinates")
        return _find_period_exact(spec.N, seed, limit, doubling_center, orient)
    return _find_period_float(spec.N, seed, limit, doubling_center, orient,
                              exact_seed, exact_confirm_limit)


def _find_period_exact(N, seed, limit, doubling_center, orient) -> OrbitResult:
    extra = []
    refl_num = None
    if doubling_center is not None:
        if not _is_exact_pair(doubling_center):
            raise TypeError("doubling_center must be exact in exact mode")
        cx = (2 * doubling_center[0] - seed[0]).as_real()
        cy = (2 * doubling_center[1] - seed[1]).as_real()
        extra = [(cx, cy)]
    eng = _ExactTauEngine(N, seed, extra_points=extra, orient=orient)
    if extra:
        refl_num = eng.extra[0]
    rxf = ryf = 0.0
    if refl_num is not None:
        rxf = 2.0 * float(to_float(doubling_center[0].as_real(), 30)) - eng.sxf
        ryf = 2.0 * float(to_float(doubling_center[1].as_real(), 30)) - eng.syf
    half = None
    pre = 1e-9 * eng.scale
    for step in range(1, limit + 1):
        if not eng.step():
            return OrbitResult(None, False, half, step, "exact", "singular")
        if refl_num is not None and half is None and eng.near_float(rxf, ryf, pre):
            if eng.at_point(refl_num):
                half = step
        if eng.near_float(eng.sxf, eng.syf, pre) and eng.at_point(eng.snum):
            doubling = half is not None and step == 2 * half
            return OrbitResult(step, doubling, half, step, "exact", "return",
                               exact_confirmed=True)
    return OrbitResult(None, False, half, limit, "exact", "limit")


def _find_period_float(N, seed, limit, doubling_center, orient,
                       exact_seed, confirm_limit) -> OrbitResult:
    vx, vy = ngon_vertex_arrays(N)
    if orient < 0:
        raise ValueError("float mode implements forward tau only")
    px, py = _as_float_pair(seed)
    check = doubling_center is not None
    rx = ry = 0.0
    if check:
        cx, cy = _as_float_pair(doubling_center)
        rx, ry = 2 * cx - px, 2 * cy - py
    code, steps, half, _, _ = K.tau_period_kernel(
        vx, vy, px, py, limit, FLOAT_RETURN_TOL, FLOAT_SINGULAR_TOL, check, rx, ry)
    half_val = half if half >= 0 else None
    if code == K.TAU_RETURN:
        period = steps
        confirmed = False
        if exact_seed and period <= confirm_limit:
            exact = _find_period_exact(N, seed, period, doubling_center, orient)
            confirmed = exact.period == period
            if exact.period is not None:
                period = exact.period
                half_val = exact.half_period
        doubling = half_val is not None and period == 2 * half_val
        return OrbitResult(period, doubling, half_val, steps, "float", "return",
                           exact_confirmed=confirmed)
    term = {K.TAU_LIMIT: "limit", K.TAU_SINGULAR: "singular",
            K.TAU_INSIDE: "singular"}[code]
    return OrbitResult(None, False, half_val, steps, "float", term)


# ---------------------------------------------------------------------------
# web generation

def _star_segment_params(N: int) -> tuple[float, float]:
    """Half-edge t_v and outer truncation T of the base-line star segment."""
    tv = math.tan(math.pi / N)
    if N % 2 == 0:
        T = math.tan((N // 2 - 1) * math.pi / N)
    else:
        T = 1.0 / math.tan(math.pi / (2 * N))
    return tv, T


def web_seeds(N: int, samples_per_edge: int) -> list[tuple[float, float]]:
    """Seeds on the truncated star-polygon edge segments: the base edge line
    carries 2*samples_per_edge points (symmetric about x = 0), rotated to
    all N edge lines."""
    if samples_per_edge < 1:
        raise ValueError("samples_per_edge must be >= 1")
    tv, T = _star_segment_params(N)
    base = []
    for i in range(samples_per_edge):
        x = tv + (T - tv) * (i + 1) / (samples_per_edge + 1)
        base.append((x, -1.0))
        base.append((-x, -1.0))
    out = []
    for jrot in range(N):
        a = 2 * math.pi * jrot / N
        ca, sa = math.cos(a), math.sin(a)
        for (x, y) in base:
            out.append((ca * x - sa * y, sa * x + ca * y))
    return out


def _exact_web_seeds(N: int, samples_per_edge: int):
    CN = min_trig_conductor(N)
    tv = _tanpi(1, N, CN)
    kmax = (N - 1) // 2 if N % 2 else N // 2 - 1
    T = _tanpi(kmax, N, CN)
    seeds = []
    base = []
    for i in range(samples_per_edge):
        t = Fraction(i + 1, samples_per_edge + 1)
        x = (tv + (T - tv) * t).as_real()
        base.append((x, rational(-1)))
        base.append(((-x).as_real(), rational(-1)))
    CC = _lcm(CN, 4)
    for jrot in range(N):
        z = root_of_unity(CC, (CC // N) * jrot)
        cos = ((z + z.conj()) * Fraction(1, 2)).as_real()
        i_unit = root_of_unity(CC, CC // 4)
        sin = ((z - z.conj()) / (2 * i_unit)).as_real()
        for (x, y) in base:
            seeds.append(((x * cos - y * sin).as_real(), (x * sin + y * cos).as_real()))
    return seeds


def web_generate(N: int, map_spec: Union[MapSpec, str] = "tau",
                 samples_per_edge: int = 4, iters: int = 10_000,
                 crop: tuple = (-10.0, -10.0, 10.0, 10.0), mode: str = "float",
                 both_directions: bool = True, max_points: int = 2_000_000,
                 theta: Optional[float] = None) -> PointCloud:
    """Iterate star-polygon edge seeds under the chosen map, recording the
    points that land inside crop.  Deterministic for fixed arguments."""
    if isinstance(map_spec, str):
        map_spec = MapSpec(map_spec, N, theta=theta,
                           frame="dc_frame" if map_spec == "dc" else "centered")
    crop = tuple(float(c) for c in crop)
    source = {
        "kind": "web", "N": N, "map": map_spec.kind, "theta": map_spec.theta,
        "samples_per_edge": samples_per_edge, "iters": iters,
        "both_directions": both_directions, "mode": mode,
    }
    if map_spec.kind in ("tau", "tau_inverse"):
        if mode == "exact":
            return _web_exact(N, samples_per_edge, iters, crop, both_directions,
                              max_points, source)
        return _web_float_tau(N, samples_per_edge, iters, crop, both_directions,
                              max_points, source)
    if mode == "exact":
        raise ValueError("exact mode is implemented for the tau web only")
    return _web_float_aux(map_spec, samples_per_edge, iters, crop, max_points, source)


def _web_float_tau(N, samples, iters, crop, both, cap, source) -> PointCloud:
    vx, vy = ngon_vertex_arrays(N)
    seeds = web_seeds(N, samples)
    out = np.empty((cap, 2), dtype=np.float64)
    croparr = np.array(crop, dtype=np.float64)
    stored = 0
    recorded = 0
    total = 0
    stopped = 0
    for (sx, sy) in seeds:
        for orient in ((1.0, -1.0) if both else (1.0,)):
            rec, steps, code = K.tau_record_kernel(
                vx, vy, sx, sy, iters, croparr, out, stored, orient)
            recorded += rec
            stored = min(cap, stored + rec)
            total += steps
            if code == K.TAU_INSIDE:
                stopped += 1
    return PointCloud(points=out[:stored].copy(), crop=crop, source=source,
                      iters=iters, recorded=recorded, total=total,
                      stopped_orbits=stopped)


def _web_exact(N, samples, iters, crop, both, cap, source) -> PointCloud:
    seeds = _exact_web_seeds(N, samples)
    pts = []
    exact_pts = []
    recorded = 0
    total = 0
    stopped = 0
    for seed in seeds:
        for orient in ((1, -1) if both else (1,)):
            eng = _ExactTauEngine(N, seed, orient=orient, web_ties=True)
            for _ in range(iters):
                try:
                    ok = eng.step()
                except InsidePolygon:
                    stopped += 1
                    break
                total += 1
                if not ok:
                    stopped += 1
                    break
                x, y = eng.pxf, eng.pyf
                if crop[0] <= x <= crop[2] and crop[1] <= y <= crop[3]:
                    recorded += 1
                    if len(pts) < cap:
                        pts.append((x, y))
                        exact_pts.append(eng.point_fractions() + (eng.C,))
    arr = np.array(pts, dtype=np.float64) if pts else np.empty((0, 2))
    return PointCloud(points=arr, crop=crop, source=source, iters=iters,
                      recorded=recorded, total=total, mode="exact",
                      stopped_orbits=stopped, exact_points=exact_pts)


def _web_float_aux(spec: MapSpec, samples, iters, crop, cap, source) -> PointCloud:
    out = np.empty((cap, 2), dtype=np.float64)
    croparr = np.array(crop, dtype=np.float64)
    stored = 0
    recorded = 0
    total = 0
    N = spec.N
    if spec.kind == "df":
        two_cos = 2.0 * math.cos(spec.theta)
        seeds = []
        for i in range(2 * samples * N):
            y = -1.0 + 2.0 * (i + 0.5) / (2 * samples * N)
            for s in (1.0, -1.0):
                x = two_cos * y - s
                if -1.0 <= x < 1.0:
                    seeds.append((x, y))
        for (sx, sy) in seeds:
            rec, _, _ = K.df_record_kernel(sx, sy, two_cos, iters, croparr, out, stored)
            recorded += rec
            stored = min(cap, stored + rec)
            total += iters
    else:
        w = 2.0 * math.pi / N
        cw, sw = math.cos(w), math.sin(w)
        seeds = [frame_to_dc(p, N) for p in web_seeds(N, samples)]
        for (sx, sy) in seeds:
            rec, _, _ = K.dc_record_kernel(sx, sy, cw, sw, iters, croparr, out, stored)
            recorded += rec
            stored = min(cap, stored + rec)
            total += iters
    return PointCloud(points=out[:stored].copy(), crop=crop, source=source,
                      iters=iters, recorded=recorded, total=total)


def candle_trace(seed, map_spec: Union[MapSpec, int], iters: int,
                 crop: tuple = (-10.0, -10.0, 10.0, 10.0),
                 max_points: int = 2_000_000) -> PointCloud:
    """Long single-seed orbit recorder ('candles in the dark')."""
    spec = MapSpec("tau", map_spec) if isinstance(map_spec, int) else map_spec
    crop = tuple(float(c) for c in crop)
    vx, vy = ngon_vertex_arrays(spec.N)
    sx, sy = _as_float_pair(seed)
    out = np.empty((max_points, 2), dtype=np.float64)
    croparr = np.array(crop, dtype=np.float64)
    if spec.kind == "df":
        rec, _, _ = K.df_record_kernel(sx, sy, 2.0 * math.cos(spec.theta),
                                       iters, croparr, out, 0)
        total = iters
        code = K.TAU_LIMIT
    elif spec.kind == "dc":
        w = 2.0 * math.pi / spec.N
        rec, _, _ = K.dc_record_kernel(sx, sy, math.cos(w), math.sin(w),
                                       iters, croparr, out, 0)
        total = iters
        code = K.TAU_LIMIT
    else:
        orient = 1.0 if spec.kind == "tau" else -1.0
        rec, total, code = K.tau_record_kernel(vx, vy, sx, sy, iters, croparr,
                                               out, 0, orient)
    stored = min(rec, max_points)
    return PointCloud(points=out[:stored].copy(), crop=crop,
                      source={"kind": "candle", "N": spec.N, "map": spec.kind,
                              "seed": [sx, sy], "iters": iters},
                      iters=iters, recorded=rec, total=total,
                      stopped_orbits=1 if code == K.TAU_INSIDE else 0)


# ---------------------------------------------------------------------------
# Df / Dc maps

def df_step(state: tuple[float, float], theta: float) -> tuple[float, float]:
    """Second-order digital-filter step (x, y) -> (y, wrap(2cos(theta)y - x))
    with wrap folding into [-1, 1) by adding multiples of 2."""
    x, y = state
    z = 2.0 * math.cos(theta) * y - x
    z = z - 2.0 * math.floor((z + 1.0) / 2.0)
    return (y, z)


def dc_step(z: tuple[float, float], N: int) -> tuple[float, float]:
    """Dual-center step in the Dc frame: rotation by the fixed angle
    w = 2*pi/N about (0,0) on Re(z) >= -1/2 and about (-1,0) otherwise."""
    w = 2.0 * math.pi / N
    cw, sw = math.cos(w), math.sin(w)
    x, y = z
    if x >= -0.5:
        return (cw * x - sw * y, sw * x + cw * y)
    tx = x + 1.0
    return (cw * tx - sw * y - 1.0, sw * tx + cw * y)


def frame_to_dc(p: tuple[float, float], N: int) -> tuple[float, float]:
    """Centered frame -> Dc frame (star[1] of N goes to the origin)."""
    return (p[0] + math.tan(math.pi / N), p[1] + 1.0)


def frame_from_dc(z: tuple[float, float], N: int) -> tuple[float, float]:
    return (z[0] - math.tan(math.pi / N), z[1] - 1.0)


def rotate_points(points: np.ndarray, angle: float) -> np.ndarray:
    """Rotate an (n, 2) array about the origin (the below-axis Dc crop
    workaround: record a large crop, rotate back, crop again)."""
    c, s = math.cos(angle), math.sin(angle)
    out = np.empty_like(points)
    out[:, 0] = c * points[:, 0] - s * points[:, 1]
    out[:, 1] = s * points[:, 0] + c * points[:, 1]
    return out


# ---------------------------------------------------------------------------
# benchmark

def tau_benchmark(N: int = 26, iters: int = 10 ** 9,
                  seed: tuple[float, float] = (2.345678, 0.1234567)) -> dict:
    """Single-core float tau throughput over a long orbit."""
    import time
    vx, vy = ngon_vertex_arrays(N)
    K.tau_bench_kernel(vx, vy, seed[0], seed[1], 10)   # compile
    t0 = time.perf_counter()
    x, y = K.tau_bench_kernel(vx, vy, seed[0], seed[1], iters)
    dt = time.perf_counter() - t0
    return {"N": N, "iters": iters, "seconds": dt,
            "steps_per_second": iters / dt, "final": (x, y)}
