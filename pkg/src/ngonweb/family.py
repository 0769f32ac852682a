"""First Families of regular N-gons and their derived constructions.

Conventions (fixed throughout the package):

* The N-gon has apothem exactly 1, center at the origin, and an edge at the
  bottom, so the family base line is y = -1.  Twice-even N then has an edge
  midpoint at 3:00, twice-odd N a vertex at 3:00, odd N a vertex at 12:00.
* The left-side family is the default.  Tile S[k] of N sits on the base
  line with center x = -(tan(pi/N) + tan(k*pi/N)) and height
  tan(pi/N)*tan(k*pi/N); for N odd these tiles are 2N-gons, for N twice-odd
  the odd-k tiles are N/2-gons, otherwise they are N-gons.
* Star points of a height-h m-gon tile lie on its base line at horizontal
  offsets h*tan(k*pi/m) from the midpoint below the center.
* Generation ladders converge to star[1] of S[2]; satellites of generation
  k sit on the side of cD[k] that faces the convergence point (right side
  for the first generation, left for the later ones).

All tile data is exact (CycloNum); floats enter only via field.to_float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .field import (
    CycloNum,
    certified_sign,
    euler_phi,
    min_trig_conductor,
    rational,
    root_of_unity,
    to_float,
    trig_at_conductor,
)

__all__ = [
    "NGonSpec",
    "Tile",
    "StarPointTable",
    "MutationSpec",
    "LadderPoint",
    "FamilyScales",
    "FamilyContext",
    "NotTwiceOdd",
    "EqualStarIndices",
    "DegenerateWeave",
    "ngon_spec",
    "build_ngon",
    "heights_and_scales",
    "family_tiles",
    "star_points",
    "s2_family",
    "volunteer_ds2",
    "predicted_ds",
    "web_step",
    "mutation_spec",
    "weave",
    "dk_ladder",
    "satellite_center",
    "two_star_solve",
    "two_star_midpoint",
    "sk_period",
]


class NotTwiceOdd(ValueError):
    """dk_ladder needs N = 2 mod 4."""


class EqualStarIndices(ValueError):
    """Two-Star solve with j_low == j_high."""


class DegenerateWeave(ValueError):
    """Weave components coincide or the weave gon is below 3."""


def parity_tag(N: int) -> str:
    if N % 2 == 1:
        return "odd"
    return "twice_odd" if N % 4 == 2 else "twice_even"


def ambient_order(N: int) -> int:
    """Cyclic order of the S[2]-family context: N for N even, 2N for N odd."""
    return N if N % 2 == 0 else 2 * N


@dataclass(frozen=True)
class NGonSpec:
    N: int
    parity_class: tuple[int, str]   # (N mod 8, odd/twice_odd/twice_even)
    complexity: int                 # phi(N)/2, rank of the scaling field
    ambient_M: int

    @property
    def mod8(self) -> int:
        return self.parity_class[0]


def ngon_spec(N: int) -> NGonSpec:
    if N < 3:
        raise ValueError("need N >= 3")
    return NGonSpec(N, (N % 8, parity_tag(N)), euler_phi(N) // 2, ambient_order(N))


# ---------------------------------------------------------------------------
# scales

@dataclass(frozen=True)
class FamilyScales:
    """Exact heights and scales for a height-1 parent of ambient order M."""
    N: int
    M: int
    conductor: int
    tan: dict            # k -> tan(k*pi/M)
    hS: dict             # k -> hS[k] = tan(pi/M)*tan(k*pi/M)
    scale: dict          # k -> scale[k] = tan(pi/M)/tan(k*pi/M)
    GenScale: CycloNum

    def sec(self, k: int) -> CycloNum:
        return _cospi(k, self.M, self.conductor).inverse().as_real()


@lru_cache(maxsize=None)
def _tanpi(k: int, M: int, C: int) -> CycloNum:
    return trig_at_conductor(M, k, "tan", C)


@lru_cache(maxsize=None)
def _cospi(k: int, M: int, C: int) -> CycloNum:
    return trig_at_conductor(M, k, "cos", C)


def _genscale(N: int) -> CycloNum:
    """tan^2(pi/N) for N twice-even; tan(pi/N)*tan(pi/2N) for N odd;
    GenerationScale[N/2] = tan(2pi/N)*tan(pi/N) for N twice-odd."""
    tag = parity_tag(N)
    if tag == "twice_even":
        C = min_trig_conductor(N)
        t1 = _tanpi(1, N, C)
        return (t1 * t1).as_real()
    if tag == "odd":
        C = min_trig_conductor(2 * N)
        return (_tanpi(2, 2 * N, C) * _tanpi(1, 2 * N, C)).as_real()
    C = min_trig_conductor(N)
    return (_tanpi(2, N, C) * _tanpi(1, N, C)).as_real()


@lru_cache(maxsize=None)
def heights_and_scales(N: int) -> FamilyScales:
    """hS[k], scale[k] and GenScale with M the ambient context order
    (N for N even, 2N for the S[2]-relative family of N odd)."""
    if N < 5:
        raise ValueError("family scales need N >= 5")
    M = ambient_order(N)
    C = min_trig_conductor(M)
    tan = {k: _tanpi(k, M, C) for k in range(0, (M + 1) // 2)}
    t1 = tan[1]
    hS = {k: (t1 * tan[k]).as_real() for k in range(1, (M + 1) // 2)}
    scale = {k: (t1 / tan[k]).as_real() for k in range(1, (M + 1) // 2)}
    return FamilyScales(N, M, C, tan, hS, scale, _genscale(N))


# ---------------------------------------------------------------------------
# tiles

@dataclass(frozen=True)
class MutationSpec:
    """Weave replacement data for a mutated S[k]/DS[k]."""
    weave_gon: int               # m^ = M'/gcd(M', k')
    base_span: int               # gcd(M', k') star points under the base edge
    k_prime: int
    min_star_index: int
    rule_variant: str            # 'nonneg_min' (N even) or 'abs_min' (N odd)
    ambient: int                 # M'
    components: Optional[tuple] = None


@dataclass(frozen=True)
class Tile:
    """A regular m-gon of the edge geometry, possibly carrying a mutation.

    rotation r is exact and means a rotation by r*pi/gon away from the
    edge-down orientation (bottom edge parallel to the base line).
    """
    gon: int
    center: tuple[CycloNum, CycloNum]
    height: CycloNum
    rotation: Fraction = Fraction(0)
    kind: str = "tile"
    index: Optional[int] = None
    mutation: Optional[MutationSpec] = None

    def _vertex_conductor(self) -> int:
        m = self.gon
        C = _lcm(2 * m if m % 2 == 0 else 4 * m, 4)
        if self.rotation.denominator != 1:
            C = _lcm(C, 4 * m * self.rotation.denominator)
        return C

    def vertex_radius(self) -> CycloNum:
        m = self.gon
        Cm = min_trig_conductor(m)
        return (self.height / _cospi(1, m, Cm)).as_real()

    def vertices(self) -> list[tuple[CycloNum, CycloNum]]:
        """Exact ccw vertices; vertex j at angle -pi/2 + (2j+1+rot)*pi/gon."""
        m = self.gon
        C = self._vertex_conductor()
        r = self.vertex_radius()
        cx, cy = self.center
        out = []
        for j in range(m):
            steps = Fraction(2 * j + 1) + self.rotation    # units of pi/m
            e = Fraction(-C, 4) + steps * Fraction(C, 2 * m)
            if e.denominator != 1:
                raise ValueError("rotation not representable at this conductor")
            z = root_of_unity(C, int(e) % C)
            cos = ((z + z.conj()) * Fraction(1, 2)).as_real()
            i_unit = root_of_unity(C, C // 4)
            sin = ((z - z.conj()) / (2 * i_unit)).as_real()
            out.append(((cx + r * cos).as_real(), (cy + r * sin).as_real()))
        return out

    def vertices_float(self) -> list[tuple[float, float]]:
        return [(float(to_float(x, 30)), float(to_float(y, 30)))
                for x, y in self.vertices()]

    def center_float(self) -> tuple[float, float]:
        return (float(to_float(self.center[0].as_real(), 30)),
                float(to_float(self.center[1].as_real(), 30)))

    def midpoint(self) -> tuple[CycloNum, CycloNum]:
        """Bottom-edge midpoint (meaningful for edge-down orientation)."""
        return (self.center[0], (self.center[1] - self.height).as_real())

    def validate(self) -> None:
        if certified_sign(self.height.as_real()).sign <= 0:
            raise ValueError("tile height must be positive")


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def build_ngon(N: int) -> Tile:
    """The regular N-gon: apothem exactly 1, centered at the origin, edge at
    the bottom (base line y = -1)."""
    if N < 3:
        raise ValueError("need N >= 3")
    one = rational(1, 1)
    zero = CycloNum.zero(1)
    return Tile(gon=N, center=(zero, zero), height=one, kind="N", index=0)


# ---------------------------------------------------------------------------
# family construction

def _child_gon(N: int, k: int) -> int:
    """Observed gon count of S[k] in the family of N."""
    tag = parity_tag(N)
    if tag == "twice_even":
        return N
    if tag == "twice_odd":
        return N if k % 2 == 0 else N // 2    # gender change of the odd S[k]
    return 2 * N                               # odd N: 2N-gon family tiles


def family_k_max(N: int) -> int:
    return (N - 1) // 2 if N % 2 else N // 2 - 1


@lru_cache(maxsize=None)
def family_tiles(N: int) -> tuple[Tile, ...]:
    """FirstFamily list of N: index 0 is N itself, then S[1], S[2], ...

    S[k] has height tan(pi/N)*tan(k*pi/N) and center directly above the
    base line at x = -(tan(pi/N) + tan(k*pi/N)).
    """
    if N < 5:
        raise ValueError("need N >= 5")
    C = min_trig_conductor(N)
    u = {k: _tanpi(k, N, C) for k in range(0, family_k_max(N) + 1)}
    tiles = [build_ngon(N)]
    for k in range(1, family_k_max(N) + 1):
        cx = (-(u[1] + u[k])).as_real()
        h = (u[1] * u[k]).as_real()
        tiles.append(Tile(gon=_child_gon(N, k), center=(cx, (h - 1).as_real()),
                          height=h, kind="S", index=k))
    return tuple(tiles)


@dataclass(frozen=True)
class StarPointTable:
    owner: Tile
    side: int                    # +1: offsets toward +x, -1: toward -x
    points: tuple                # points[k-1] = star[k], k = 1..ceil(m/2)-1

    def star(self, k: int) -> tuple[CycloNum, CycloNum]:
        return self.points[k - 1]

    def __len__(self):
        return len(self.points)


def star_points(t: Tile, side: int = 1) -> StarPointTable:
    """Star points of an axis-aligned tile: on the base line through the
    bottom-edge midpoint, star[k] at horizontal offset height*tan(k*pi/m)."""
    if t.rotation != 0:
        raise ValueError("star table needs an axis-aligned (edge-down) tile")
    m = t.gon
    C = min_trig_conductor(m)
    mx, my = t.midpoint()
    pts = []
    for k in range(1, (m + 1) // 2):
        off = t.height * _tanpi(k, m, C)
        pts.append(((mx + side * off).as_real(), my))
    return StarPointTable(owner=t, side=side, points=tuple(pts))


@dataclass(frozen=True)
class FamilyContext:
    """A parent tile with its scaled First Family on both sides."""
    N: int
    parent: Tile
    scales: FamilyScales
    left: tuple[Tile, ...]       # FFS2: FirstFamily*h(S[2]) translated to cS[2]
    right: tuple[Tile, ...]      # FFS2R: reflection about the vertical through cS[2]

    def ds(self, k: int, side: str = "left") -> Tile:
        return (self.left if side == "left" else self.right)[k]

    def d2(self) -> Tile:
        """D[2] = the S[2]-of-S[2] tile (right-side family, the ladder side)."""
        return self.right[2]


def _translate_scale(t: Tile, factor: CycloNum, to: tuple[CycloNum, CycloNum],
                     kind: str, reflect_about: Optional[CycloNum] = None) -> Tile:
    """TranslationTransform[to] of the unit-frame tile scaled by factor."""
    cx = (to[0] + factor * t.center[0]).as_real()
    cy = (to[1] + factor * t.center[1]).as_real()
    if reflect_about is not None:
        cx = (2 * reflect_about - cx).as_real()
    return Tile(gon=t.gon, center=(cx, cy), height=(factor * t.height).as_real(),
                kind=kind, index=t.index)


def _ambient_unit_tiles(N: int) -> tuple[Tile, ...]:
    """Height-1 family on the ambient order M = ambient_order(N): the unit
    tiles whose hS[2]-scaled translates form the DS[k] of S[2].

    For even N this is family_tiles(N).  For odd N the ambient is 2N, the
    table runs to k = N-1, and the gender rule of the twice-odd order 2N
    makes the odd-k members N-gons (the 'normal' S[k] of S[2]; the web
    survivors at odd k are their 2N-gon D companions).
    """
    if N % 2 == 0:
        return family_tiles(N)
    M = 2 * N
    C = min_trig_conductor(M)
    t = {k: _tanpi(k, M, C) for k in range(0, N)}
    tiles = [build_ngon(N)]
    for k in range(1, N):
        cx = (-(t[1] + t[k])).as_real()
        h = (t[1] * t[k]).as_real()
        gon = 2 * N if k % 2 == 0 else N
        tiles.append(Tile(gon=gon, center=(cx, (h - 1).as_real()), height=h,
                          kind="S", index=k))
    return tuple(tiles)


@lru_cache(maxsize=None)
def s2_family(N: int) -> FamilyContext:
    """The First Family of S[2]: the ambient-order unit family scaled by the
    height of S[2] and translated to cS[2]; the right side is its
    reflection about the vertical through cS[2]."""
    if N < 5:
        raise ValueError("need N >= 5")
    s2 = family_tiles(N)[2]
    h2 = s2.height
    cs2x = s2.center[0]
    left, right = [], []
    for t in _ambient_unit_tiles(N):
        kind = "D1" if t.index == 0 else "DS"
        left.append(_translate_scale(t, h2, s2.center, kind))
        right.append(_translate_scale(t, h2, s2.center, kind, reflect_about=cs2x))
    sc = heights_and_scales(N)
    return FamilyContext(N=N, parent=s2, scales=sc, left=tuple(left), right=tuple(right))


def volunteer_ds2(N: int) -> Tile:
    """The odd-N 'volunteer DS[2]': the S[1] member of the modified
    (own-order) family of S[2], right side.  A 2N-gon with period doubling:
    center period 861 = 21*41 for N = 41 and 1225 = 25*49 for N = 49."""
    if N % 2 == 0:
        raise ValueError("the volunteer DS[2] construction is for N odd")
    fam = family_tiles(N)
    s2 = fam[2]
    t = _translate_scale(fam[1], s2.height, s2.center, "DS",
                         reflect_about=s2.center[0])
    return Tile(gon=2 * N, center=t.center, height=t.height, kind="DS", index=1)


def ds2_satellite(N: int, k: int, side: str = "left") -> tuple[CycloNum, CycloNum]:
    """Center of the virtual S[k] child of the volunteer DS[2], in the
    2N-gon frame of DS[2]: the candle seeds of the odd families (e.g. the
    cS[3] orbits of periods 18,149,406 for N = 33 and 5,536,968 for N = 41)."""
    vol = volunteer_ds2(N)
    M = 2 * N
    C = min_trig_conductor(M)
    t1, tk = _tanpi(1, M, C), _tanpi(k, M, C)
    sgn = 1 if side == "left" else -1
    cx = (vol.center[0] - sgn * vol.height * (t1 + tk)).as_real()
    cy = (vol.center[1] + vol.height * (t1 * tk - 1)).as_real()
    return (cx, cy)


# ---------------------------------------------------------------------------
# combinatorial predictions

def predicted_ds(N: int) -> list[int]:
    """Edge Conjecture survivors: step-4 countdown from S[1] at DS[N/2-2]
    for N even, step-8 from DS[N-4] for N odd.  The countdown runs to
    DS[1]: twice-odd N reaches DS[1] (so does every odd N), twice-even N
    bottoms out at DS[2]."""
    if N < 10:
        raise ValueError("need N >= 10")
    if N % 2 == 0:
        start, step = N // 2 - 2, 4
    else:
        start, step = N - 4, 8
    out = []
    v = start
    while v >= 1:
        out.append(v)
        v -= step
    return out


_TILE_CLASSES = ("S_of_even_N", "DS_of_even_N", "S_of_odd_N", "DS_of_odd_N")


def web_step(N: int, k: int, tile_class: str) -> tuple[int, Optional[int]]:
    """Web step k' of an S[k]/DS[k] and the reduced step ambient_M mod k'."""
    if tile_class not in _TILE_CLASSES:
        raise ValueError(f"tile_class must be one of {_TILE_CLASSES}")
    if tile_class.endswith("even_N"):
        if N % 2:
            raise ValueError("even-N tile class with odd N")
        kp = N // 2 - k
    elif tile_class == "DS_of_odd_N":
        kp = N - k
    else:
        kp = N - 2 * k
    reduced = ambient_order(N) % kp if kp > 0 else None
    return kp, reduced


def _mutation_ambient(N: int, k: int) -> int:
    """M': N for twice-even contexts, N/2 for the N/2-gon tiles of
    twice-odd N, 2N for odd-N S[2] families."""
    tag = parity_tag(N)
    if tag == "twice_even":
        return N
    if tag == "twice_odd":
        return N // 2 if k % 2 == 1 else N
    return 2 * N


def mutation_spec(N: int, k: int, tile_class: str) -> Optional[MutationSpec]:
    """Mutation data for S[k]/DS[k], or None when the gcd threshold fails.

    Mutated iff gcd(M', k') > 2 for even ambient M' and > 1 for the odd
    (N/2-gon) contexts; weave_gon = M'/gcd, base_span = gcd.
    """
    kp, _ = web_step(N, k, tile_class)
    Mp = _mutation_ambient(N, k)
    g = math.gcd(Mp, kp)
    threshold = 2 if Mp % 2 == 0 else 1
    if g <= threshold:
        return None
    if N % 2 == 0:
        best, j = N // 2 - 1, 0
        while N // 2 - 1 - j * kp >= 0:
            best = N // 2 - 1 - j * kp
            j += 1
        variant = "nonneg_min"
    else:
        best = min(abs(N - 2 - j * kp) for j in range(0, 2 * N // max(kp, 1) + 2))
        variant = "abs_min"
    return MutationSpec(weave_gon=Mp // g, base_span=g, k_prime=kp,
                        min_star_index=best, rule_variant=variant, ambient=Mp)


# ---------------------------------------------------------------------------
# weave construction

def weave(spec: MutationSpec, underlying: Tile) -> list[tuple[CycloNum, CycloNum]]:
    """Boundary of the mutation: the alternating union of two regular
    weave_gon-gons, both centered on the underlying tile's center.

    Component A has a vertex pinned at the right-side star[a] point of the
    underlying tile (a = min_star_index), component B at the left-side
    star[span - a].  The pinned vertices subtend exactly pi/weave_gon at
    the center, so the merged 2*m^ boundary is exactly equilateral.
    """
    mh = spec.weave_gon
    if mh < 3:
        raise DegenerateWeave(f"weave gon {mh} < 3")
    a = spec.min_star_index
    b = spec.base_span - a
    Mp = spec.ambient
    compA = _pinned_polygon(underlying, Mp, a, +1, mh)
    compB = _pinned_polygon(underlying, Mp, b, -1, mh)
    if all(px == qx and py == qy for (px, py), (qx, qy) in zip(compA, compB)):
        raise DegenerateWeave("weave components coincide")
    out = []
    for j in range(mh):
        out.append(compB[j])
        out.append(compA[j])
    return out


def _pinned_polygon(underlying: Tile, Mp: int, a: int, side: int, mh: int):
    """Regular mh-gon centered at the underlying center with one vertex at
    its star[a] point (star offsets in the order-M' table)."""
    cx, cy = underlying.center
    h = underlying.height
    CM = min_trig_conductor(Mp)
    radius = (h / _cospi(a, Mp, CM)).as_real()
    C = _lcm(_lcm(CM, 4 * mh), 4)
    # polar angle of the pinned vertex from the center: -pi/2 + side*a*pi/M'
    base_e = Fraction(-C, 4) + Fraction(side * a) * Fraction(C, 2 * Mp)
    if base_e.denominator != 1:
        raise ValueError("conductor does not resolve the star angle")
    verts = []
    for j in range(mh):
        e = (int(base_e) + j * (C // mh)) % C
        z = root_of_unity(C, e)
        cos = ((z + z.conj()) * Fraction(1, 2)).as_real()
        i_unit = root_of_unity(C, C // 4)
        sin = ((z - z.conj()) / (2 * i_unit)).as_real()
        verts.append(((cx + radius * cos).as_real(), (cy + radius * sin).as_real()))
    return verts


# ---------------------------------------------------------------------------
# D[k]/M[k] center ladder (twice-odd N)

@dataclass(frozen=True)
class LadderPoint:
    k: int
    cD: tuple[CycloNum, CycloNum]
    cM: tuple[CycloNum, CycloNum]
    genscale_power: int


def _ladder_data(N: int):
    fam = family_tiles(N)
    s1, s2 = fam[1], fam[2]
    h2 = s2.height
    G = _genscale(N)
    x0 = (s2.center[0] + h2 * heights_and_scales(N).tan[1]).as_real()
    cslope = ((s1.center[1] + 1) / (s1.center[0] - x0)).as_real()
    return fam, s1, s2, h2, G, x0, cslope


def dk_ladder(N: int, k_max: int) -> list[LadderPoint]:
    """Centers cD[k], cM[k] of the generation ladder converging to star[1]
    of S[2], for N = 2 mod 4.

    cD[1] = cS[2]; for k >= 2, cD[k] = (x0 + hS2*G^(k-1)/cslope,
    hS2*G^(k-1) - 1) where {x0, -1} is the right-side star[1] of S[2] and
    cslope the slope from cS[1] to that point.  cM[k] is the matching
    M-tile center with the table periods n, n(3(n-1)/2+2), ...: the M tile
    of N for k = 1, and cD[k-1] + cS[1]*G^(k-1) (on the side facing the
    convergence point) for k >= 2.
    """
    if N % 4 != 2:
        raise NotTwiceOdd(f"N = {N} is not 2 mod 4")
    fam, s1, s2, h2, G, x0, cslope = _ladder_data(N)
    out = []
    cD_prev = None
    for k in range(1, k_max + 1):
        gk1 = G ** (k - 1)
        if k == 1:
            cD = (s2.center[0], s2.center[1])
            cM = fam[N // 2 - 1].center
        else:
            xk = (x0 + h2 * gk1 / cslope).as_real()
            yk = (h2 * gk1 - 1).as_real()
            cD = (xk, yk)
            cM = _satellite(cD_prev, s1.center, gk1, k - 1)
        out.append(LadderPoint(k=k, cD=cD, cM=cM, genscale_power=k - 1))
        cD_prev = cD
    return out


def _satellite(cD, vec, gpow, generation: int):
    """Place a family member around cD on the side facing the ladder limit:
    generation 1 reflects (right side), generation >= 2 keeps the left side."""
    sx = -1 if generation == 1 else 1
    return ((cD[0] + sx * vec[0] * gpow).as_real(), (cD[1] + vec[1] * gpow).as_real())


def satellite_center(N: int, k: int, j: int) -> tuple[CycloNum, CycloNum]:
    """cDSj[k]: the S[j] satellite of generation k, e.g. the DS7 chain of
    N = 26 at periods 52, 858, 11882, ..."""
    fam, s1, s2, h2, G, x0, cslope = _ladder_data(N)
    if N % 4 != 2:
        raise NotTwiceOdd(f"N = {N} is not 2 mod 4")
    pt = dk_ladder(N, k)[k - 1]
    return _satellite(pt.cD, fam[j].center, G ** k, k)


# ---------------------------------------------------------------------------
# Two-Star solve and misc

def two_star_solve(M: int, j_low: int, j_high: int, d) -> CycloNum:
    """Height of a conforming tile pinned at star[j_low] and star[j_high]:
    h = d/(tan(j_high*pi/M) - tan(j_low*pi/M))."""
    if j_low == j_high:
        raise EqualStarIndices("two-star solve needs distinct star indices")
    if not (1 <= j_low < j_high) or 2 * j_high >= M:
        raise ValueError("star indices must satisfy 1 <= j_low < j_high < M/2")
    C = min_trig_conductor(M)
    denom = (_tanpi(j_high, M, C) - _tanpi(j_low, M, C)).as_real()
    if isinstance(d, (int, Fraction)):
        d = rational(d)
    return (d / denom).as_real()


def two_star_midpoint(star_x: CycloNum, h: CycloNum, j: int, M: int) -> CycloNum:
    """Midpoint x from a right-side star point: mid = star_x - h*tan(j*pi/M)."""
    C = min_trig_conductor(M)
    return (star_x - h * _tanpi(j, M, C)).as_real()


def sk_period(N: int, k: int) -> int:
    """tau-period of any S[k]: N/gcd(k, N)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return N // math.gcd(k, N)
