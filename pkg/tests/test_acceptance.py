"""Acceptance criteria, one pass/fail line per criterion item.

Every tolerance is pinned here exactly as stated.  Items whose stated
target conflicts with the computed truth are asserted as stated anyway and
fail with the computed value in the message; the analysis lives in the
reviewer notes, not in this module.
"""

import math
import time
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from ngonweb import cloudio, dynamics as D, family as F, fieldid as FI, periods as P
from ngonweb.cli import px_height
from ngonweb.field import to_float


def report(item: str, ok: bool, detail: str = "") -> bool:
    print(f"[criterion {item}] {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    return ok


def fl(v, digits=30):
    return to_float(v.as_real() if hasattr(v, "as_real") and not v.real_flag else v,
                    digits)


# ---------------------------------------------------------------------------
# 1. period tables, exact, < 1 s

def test_criterion_1_period_tables():
    t0 = time.perf_counter()
    ok = ([P.d_period(13, k) for k in range(1, 9)] ==
          [13, 169, 2379, 33293, 466115, 6525597, 91358371, 1279017181])
    ok &= [P.m_period(13, k) for k in range(1, 6)] == [13, 260, 3562, 49946, 699166]
    ok &= ([P.d_period(17, k) for k in range(1, 9)] ==
           [17, 289, 5219, 93925, 1690667, 30431989, 547775819, 9859964725])
    ok &= ([P.m_period(17, k) for k in range(1, 9)] ==
           [17, 442, 7820, 140896, 2535992, 45647992, 821663720, 14789947096])
    ok &= [P.d_period(25, k) for k in range(1, 6)] == [25, 625, 16275, 423125, 11001275]
    dt = time.perf_counter() - t0
    assert report("1", ok and dt < 1.0, f"five tables exact ({dt:.3f}s)")


# ---------------------------------------------------------------------------
# 2. recurrence vs closed forms, < 1 s

def test_criterion_2_recurrence_equivalence():
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 101):
        spec = P.RecurrenceSpec(n, n, n * n)
        for k in range(1, 26):
            ok &= P.recurrence_solve(spec, k) == P.d_period(n, k)
        if n % 2 == 1:
            mspec = P.ds_initial_conditions(n, "M")
            for k in range(1, 26):
                ok &= P.recurrence_solve(mspec, k) == P.m_period(n, k)
        ok &= P.d3_count(n) == P.d_period(n, 3)
    dt = time.perf_counter() - t0
    assert report("2", ok and dt < 1.0,
                  f"n in 2..100, k <= 25 agree exactly ({dt:.3f}s)")


# ---------------------------------------------------------------------------
# 3. dynamic verification of analytic periods, exact mode, < 10 min

def test_criterion_3_sk_period_sweep():
    t0 = time.perf_counter()
    bad = []
    for N in range(26, 51):
        fam = F.family_tiles(N)
        for k in range(1, F.family_k_max(N) + 1):
            want = F.sk_period(N, k)
            res = D.find_period(fam[k].center, N, limit=3 * N + 10, mode="exact")
            if res.period != want:
                bad.append((N, k, res.period, want))
    dt = time.perf_counter() - t0
    assert report("3", not bad and dt < 600,
                  f"cS[k] sweep N=26..50 all exact ({dt:.1f}s)"), bad


def test_criterion_3_ladders_exact():
    t0 = time.perf_counter()
    checks = []
    lad26 = F.dk_ladder(26, 4)
    for k, want in ((2, 169), (3, 2379), (4, 33293)):
        checks.append((D.find_period(lad26[k - 1].cD, 26, limit=40000,
                                     mode="exact").period, want, f"26 cD[{k}]"))
    lad34 = F.dk_ladder(34, 3)
    for k, want in ((2, 289), (3, 5219)):
        checks.append((D.find_period(lad34[k - 1].cD, 34, limit=10000,
                                     mode="exact").period, want, f"34 cD[{k}]"))
    lad50 = F.dk_ladder(50, 3)
    for k, want in ((2, 625), (3, 16275)):
        checks.append((D.find_period(lad50[k - 1].cD, 50, limit=20000,
                                     mode="exact").period, want, f"50 cD[{k}]"))
    checks.append((D.find_period(lad26[1].cM, 26, limit=1000,
                                 mode="exact").period, 260, "26 cM[2]"))
    bad = [c for c in checks if c[0] != c[1]]
    dt = time.perf_counter() - t0
    assert report("3", not bad and dt < 600,
                  f"D/M ladder periods exact ({dt:.1f}s)"), bad


# ---------------------------------------------------------------------------
# 4. DS-chain periods, < 1 min

def test_criterion_4_ds7_chain():
    t0 = time.perf_counter()
    spec = P.ds_initial_conditions(13, "DS7")
    ok = [P.recurrence_solve(spec, k) for k in range(1, 5)] == [52, 858, 11882, 166478]
    res = D.find_period(F.satellite_center(26, 1, 7), 26, limit=200, mode="exact")
    ok &= res.period == 52
    dt = time.perf_counter() - t0
    assert report("4", ok and dt < 60,
                  f"DS7 chain 52/858/11882/166478, satellite center 52 exact ({dt:.1f}s)")


# ---------------------------------------------------------------------------
# 5. period doubling, < 5 min (three items)

def test_criterion_5_n41_center_period_as_stated():
    res = D.find_period(F.volunteer_ds2(41).center, 41, limit=2000, mode="exact")
    ok = res.period == 461
    report("5", ok, f"N=41 cDS[2] stated 461, computed {res.period}")
    assert ok, (
        f"N=41 cDS[2] exact period is {res.period}, not the stated 461: the "
        f"source's own factorization 21*41 = 861 and the off-center period "
        f"1722 = 2*861 both give {res.period}; see the decisions ledger")


def test_criterion_5_n41_off_center_1722():
    c = F.volunteer_ds2(41).center
    seed = ((c[0] + Fraction(1, 10 ** 6)).as_real(), c[1])
    res = D.find_period(seed, 41, limit=4000, mode="exact", doubling_center=c)
    ok = res.period == 1722 and res.doubling
    assert report("5", ok, f"N=41 off-center period {res.period}, "
                           f"half {res.half_period}, doubling {res.doubling}")


def test_criterion_5_n49_center_1225():
    res = D.find_period(F.volunteer_ds2(49).center, 49, limit=3000, mode="exact")
    assert report("5", res.period == 1225, f"N=49 cDS[2] period {res.period} exact")


@pytest.mark.slow
def test_criterion_5_extended_n33_doubling():
    c = F.volunteer_ds2(33).center
    res = D.find_period(c, 33, limit=2000, mode="exact")
    ok = res.period == 561
    seed = ((c[0] + Fraction(1, 10 ** 7)).as_real(), c[1])
    off = D.find_period(seed, 33, limit=4000, mode="exact", doubling_center=c)
    ok &= off.half_period == 561 and off.doubling
    assert report("5x", ok, f"N=33 DS[2] center {res.period}, off-center "
                            f"{off.period} half {off.half_period}")


@pytest.mark.slow
def test_criterion_5_extended_n33_cs3_orbit_as_stated():
    seed = F.ds2_satellite(33, 3, side="left")
    res = D.find_period(seed, 33, limit=20_000_000, mode="exact")
    ok = res.period == 18_149_106
    report("5x", ok, f"N=33 cS[3] candle stated 18,149,106, computed {res.period}")
    assert ok, (
        f"the N=33 cS[3] orbit closes at {res.period}, not the stated "
        f"18,149,106; the source's own factorization 33*549982 = 18,149,406 "
        f"matches the computed value; see the decisions ledger")


@pytest.mark.slow
def test_criterion_5_extended_n41_candle():
    seed = F.ds2_satellite(41, 3, side="left")
    res = D.find_period(seed, 41, limit=6_000_000, mode="exact")
    assert report("5x", res.period == 5_536_968,
                  f"N=41 candle period {res.period} exact")


# ---------------------------------------------------------------------------
# 6. mutation ledger, < 1 s

def test_criterion_6_mutation_ledger():
    t0 = time.perf_counter()
    named = [(33, 21, "DS_of_odd_N", 11), (40, 4, "S_of_even_N", 5),
             (48, 18, "DS_of_even_N", 8), (49, 21, "DS_of_odd_N", 7)]
    full = [(28, 2, "S_of_even_N", 7), (30, 5, "DS_of_even_N", 3),
            (30, 9, "DS_of_even_N", 5), (32, 4, "S_of_even_N", 8),
            (32, 8, "S_of_even_N", 4), (35, 7, "DS_of_odd_N", 5),
            (35, 15, "DS_of_odd_N", 7), (36, 12, "DS_of_even_N", 6),
            (36, 3, "S_of_even_N", 12), (39, 3, "DS_of_odd_N", 13),
            (39, 27, "DS_of_odd_N", 13), (40, 12, "S_of_even_N", 5),
            (40, 10, "DS_of_even_N", 4), (42, 3, "S_of_even_N", 7),
            (42, 7, "S_of_even_N", 3), (42, 3, "DS_of_even_N", 7),
            (42, 7, "DS_of_even_N", 3), (42, 15, "DS_of_even_N", 7),
            (48, 3, "S_of_even_N", 16), (48, 4, "S_of_even_N", 12),
            (50, 15, "DS_of_even_N", 5)]
    bad = []
    for N, k, cls, want in named + full:
        spec = F.mutation_spec(N, k, cls)
        if spec is None or spec.weave_gon != want:
            bad.append((N, k, cls, want, spec))
    dt = time.perf_counter() - t0
    assert report("6", not bad and dt < 1.0,
                  f"{len(named) + len(full)} weave gons exact ({dt:.3f}s)"), bad


# ---------------------------------------------------------------------------
# 7. algebraic identification, < 2 min

PRINTED_28 = ["-433/512", "41903/512", "-39573/256", "16255/256",
              "-3157/512", "35/512"]
PRINTED_40 = ["-1/128", "439/128", "-3301/128", "12835/128", "-12579/128",
              "3557/128", "-183/128", "1/128"]
PRINTED_44 = ["57731/131072", "-12997321/131072", "87263363/32768",
              "-552905261/32768", "2194226605/65536", "-1542371279/65536",
              "215163863/32768", "-22993969/32768", "3007163/131072",
              "-13089/131072"]
PRINTED_36_HQ = ["-63/256", "8515/256", "-14541/128", "8781/128",
                 "-2615/256", "19/256"]
PRINTED_36_HQ_S2 = ["-29/128", "5957/128", "-555/4", "1289/16",
                    "-1515/128", "11/128"]
PRINTED_39_S1_S0 = ["1871/26624", "-545859/26624", "7923081/26624",
                    "-1868429/26624", "-6409373/13312", "-2266215/13312",
                    "1182769/13312", "660331/13312", "4411/26624",
                    "-70847/26624", "-6459/26624", "391/26624"]
PRINTED_39_S2_S1 = ["11/2048", "2567/2048", "20053/2048", "-168639/2048",
                    "-3273/1024", "124931/1024", "86949/1024", "14353/1024",
                    "-8041/2048", "-2941/2048", "-175/2048", "13/2048"]


def _ident(value, N, degree):
    g = F.heights_and_scales(N).GenScale
    return FI.identify(FI.IdentifyRequest(value=value, generator=g, degree=degree))


def test_criterion_7_hard_pair():
    t0 = time.perf_counter()
    # N=28: the Two-Star Px from the DS[4] star gap, in second-generation units
    sc = F.heights_and_scales(28)
    res28 = _ident((px_height(28) / sc.hS[2]).as_real(), 28, 5)
    ok = [str(c) for c in res28.poly.coeffs] == PRINTED_28 and res28.verified_exact
    # N=40: Sx is the S[2] of S[3], so hSx/hS[3] = hS[2]
    res40 = _ident(F.heights_and_scales(40).hS[2], 40, 7)
    ok &= [str(c) for c in res40.poly.coeffs] == PRINTED_40 and res40.verified_exact
    dt = time.perf_counter() - t0
    assert report("7", ok and dt < 120,
                  f"N=28 and N=40 printed polynomials bit-exact ({dt:.1f}s)")


def test_criterion_7_conditional_constructions():
    t0 = time.perf_counter()
    outcomes = []
    # N=44: documented two-star indices (1, 19), ratio to the N-gon height
    res = _ident(px_height(44), 44, 9)
    outcomes.append(("44 hPx/hN",
                     [str(c) for c in res.poly.coeffs] == PRINTED_44
                     and res.verified_exact, res))
    # N=36: Q from star[9] of S[2] and star[9] of the rotated S[4]
    sc = F.heights_and_scales(36)
    t = sc.tan
    cs2x = F.family_tiles(36)[2].center[0]
    star9_rot_s4 = (-t[3] - sc.hS[4] * t[3] + sc.hS[4] * t[9]).as_real()
    star9_s2 = (cs2x + sc.hS[2] * t[9]).as_real()
    hQ = ((star9_rot_s4 - star9_s2) / 2).as_real()
    res = _ident(hQ, 36, 5)
    outcomes.append(("36 hQ", [str(c) for c in res.poly.coeffs] == PRINTED_36_HQ
                     and res.verified_exact, res))
    res = _ident((hQ / sc.hS[2]).as_real(), 36, 5)
    outcomes.append(("36 hQ/hS[2]",
                     [str(c) for c in res.poly.coeffs] == PRINTED_36_HQ_S2
                     and res.verified_exact, res))
    # N=39: s1 = star[5]-star[3] offset of S[2], s2 = side of DS[3], s0 = side of N
    sc = F.heights_and_scales(39)
    t = sc.tan
    h2 = F.family_tiles(39)[2].height
    s0 = (2 * t[2]).as_real()
    s1 = (h2 * (t[5] - t[3])).as_real()
    s2 = (2 * h2 * t[1] * t[2] * t[3]).as_real()
    res = _ident((s1 / s0).as_real(), 39, 11)
    outcomes.append(("39 s1/s0",
                     [str(c) for c in res.poly.coeffs] == PRINTED_39_S1_S0
                     and res.verified_exact, res))
    res = _ident((s2 / s1).as_real(), 39, 11)
    outcomes.append(("39 s2/s1",
                     [str(c) for c in res.poly.coeffs] == PRINTED_39_S2_S1
                     and res.verified_exact, res))
    dt = time.perf_counter() - t0
    mismatches = [(name, r.poly.coeffs) for name, ok, r in outcomes if not ok]
    for name, ok, r in outcomes:
        report("7", ok, f"{name}: printed coefficients "
                        f"{'reproduced exactly' if ok else f'MISMATCH {r.poly}'}")
    assert not mismatches and dt < 120, mismatches


# ---------------------------------------------------------------------------
# 8. numeric spot values, < 1 s each

def test_criterion_8_genscale_11():
    sc = F.heights_and_scales(11)
    v = fl(sc.GenScale, 20)
    assert report("8", abs(v - mpmath.mpf("0.042217")) < 5e-7,
                  f"GenScale[11] = {mpmath.nstr(v, 8)}")


def test_criterion_8_scale_ratio_36():
    sc = F.heights_and_scales(36)
    v = fl((sc.scale[4] / sc.scale[2]).as_real(), 20)
    assert report("8", abs(v - mpmath.mpf("0.484")) < 5e-4,
                  f"N=36 scale[4]/scale[2] = {mpmath.nstr(v, 6)}")


def test_criterion_8_scale2_98_as_stated():
    v = fl(F.heights_and_scales(49).scale[2], 20)
    ok = abs(v - mpmath.mpf("0.49968")) < 5e-6
    report("8", ok, f"N=98-context scale[2] stated 0.49968, computed {mpmath.nstr(v, 8)}")
    assert ok, (
        f"tan(pi/98)/tan(2pi/98) = {mpmath.nstr(v, 10)} = (1 - tan^2(pi/98))/2; "
        f"the stated 0.49968 is not that quantity; see the decisions ledger")


def test_criterion_8_hd2_48_as_stated():
    sc = F.heights_and_scales(48)
    v = fl(((sc.GenScale / sc.scale[2]) ** 2).as_real(), 20)
    ok = abs(v - mpmath.mpf("7.5e-6")) < 5e-7
    report("8", ok, f"N=48 (GenScale/scale[2])^2 stated 7.5e-6, computed {mpmath.nstr(v, 8)}")
    assert ok, (
        f"(GenScale[48]/scale[2])^2 = hS[2]^2 = {mpmath.nstr(v, 8)}, an order "
        f"of magnitude above the stated 7.5e-6 (which matches the N=36 "
        f"fourth-generation scale instead); see the decisions ledger")


def test_criterion_8_m_ratio_print_as_stated():
    s = P.ratio_str(13, 6, "M")
    ok = s == "14.00008"
    report("8", ok, f"n=13 M-ratio at k=6 prints {s}")
    assert ok, (
        f"M_6/M_5 = 9788402/699166 prints {s}; the stated 14.00008 is "
        f"inconsistent with the table the same source prints; see the "
        f"decisions ledger")


# ---------------------------------------------------------------------------
# 9. web property suite, < 15 min

def test_criterion_9a_web_exterior():
    pc = D.web_generate(26, "tau", samples_per_edge=2, iters=2000, crop=(-9, -9, 9, 9))
    vx, vy = D.ngon_vertex_arrays(26)
    ex = np.roll(vx, -1) - vx
    ey = np.roll(vy, -1) - vy
    inside = 0
    for x, y in pc.points:
        if np.all(ex * (y - vy) - ey * (x - vx) > 0):
            inside += 1
    assert report("9a", inside == 0,
                  f"{len(pc.points)} recorded tau-web points, none inside N")


def test_criterion_9b_web_exact_symmetry():
    pc = D.web_generate(26, "tau", samples_per_edge=1, iters=40,
                        crop=(-9, -9, 9, 9), mode="exact")
    pts = {(xf, yf) for xf, yf, _ in pc.exact_points}
    mirrored = {(tuple(-q for q in xf), yf) for xf, yf in pts}
    assert report("9b", mirrored == pts,
                  f"exact cloud of {len(pts)} points equals its mirror exactly")


def test_criterion_9c_manifest_reproducibility(tmp_path):
    pc = D.web_generate(30, "tau", samples_per_edge=2, iters=1500, crop=(-6, -6, 6, 6))
    p1 = tmp_path / "a.pgw"
    cloudio.save_cloud(pc, p1)
    m = cloudio.write_manifest(tmp_path / "a.json", p1, 30, "tau", 2, 1500,
                               (-6, -6, 6, 6), "float")
    p2 = tmp_path / "b.pgw"
    cloudio.run_from_manifest(m, p2)
    same = p1.read_bytes() == p2.read_bytes()
    assert report("9c", same, "regenerated cloud is byte-identical to the manifest's")


def test_criterion_9d_n26_second_generation_crop():
    t0 = time.perf_counter()
    sc = F.heights_and_scales(26)
    fam = F.family_tiles(26)
    x0 = float(fl((fam[2].center[0] + fam[2].height * sc.tan[1]).as_real()))
    s = float(fl((fam[2].height * sc.GenScale).as_real()))
    crop = (x0 - s, -1 - s, x0 + s, -1 + s)
    # 26 edges * 100 seeds * 2 directions * 19200 iterations = 99,840,000
    pc = D.web_generate(26, "tau", samples_per_edge=50, iters=19_200, crop=crop)
    dt = time.perf_counter() - t0
    ok = pc.recorded > 0 and pc.total <= 10 ** 8 and dt < 900
    assert report("9d", ok,
                  f"{pc.recorded} hits in the star[1]-of-S[2] crop within "
                  f"{pc.total} iterations (rate {pc.return_rate:.2e}, {dt:.1f}s)")


@pytest.mark.slow
def test_criterion_9_extended_n48_return_rate_bound():
    # the D[2]-scale detail at N=48 needs ~5e10 iterations to resolve; at a
    # desk budget the observed rate must sit at or below the stated order
    d2 = F.s2_family(48).d2()
    cx, cy = d2.center_float()
    h = float(fl(d2.height))
    pc = D.web_generate(48, "tau", samples_per_edge=50, iters=8000,
                        crop=(cx - 3 * h, cy - 3 * h, cx + 3 * h, cy + 3 * h))
    assert report("9x", pc.return_rate <= 1e-5,
                  f"N=48 D[2]-scale crop rate {pc.return_rate:.2e} over {pc.total} iters")


# ---------------------------------------------------------------------------
# 10. performance, < 3 min

def test_criterion_10_throughput():
    r = D.tau_benchmark(N=26, iters=10 ** 9)
    rate = r["steps_per_second"]
    ok = rate >= 1e7 and r["seconds"] < 180
    assert report("10", ok,
                  f"1e9 float tau steps in {r['seconds']:.1f}s = {rate:.3g} steps/s")
