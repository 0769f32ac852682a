"""Algebraic identification: lattice-reduction recognition with exact
verification, and minimal polynomials."""

import random
from fractions import Fraction

import mpmath
import pytest

from ngonweb import family as F
from ngonweb.field import CycloNum, RationalPoly, root_of_unity, euler_phi
from ngonweb.fieldid import (
    DegreeExceeded,
    IdentifyRequest,
    NoRelationFound,
    eval_poly,
    identify,
    lll_reduce,
    minimal_poly,
)


def lam(N):
    z = root_of_unity(N, 1)
    return (z + z.inverse()).as_real()


# ---------------------------------------------------------------------------
# identify

def test_identity_value():
    g = F.heights_and_scales(26).GenScale
    res = identify(IdentifyRequest(value=g, generator=g, degree=5))
    assert res.poly.coeffs == (Fraction(0), Fraction(1))
    assert res.verified_exact


def test_round_trip_random_polys():
    rng = random.Random(17)
    for N in (26, 28, 36):
        g = F.heights_and_scales(N).GenScale
        deg = F.ngon_spec(N).complexity - 1
        for _ in range(4):
            coeffs = tuple(Fraction(rng.randint(-40, 40), rng.choice((1, 2, 4, 8)))
                           for _ in range(deg + 1))
            p = RationalPoly(coeffs)
            value = eval_poly(p, g)
            res = identify(IdentifyRequest(value=value, generator=g, degree=deg))
            assert res.poly.coeffs == p.coeffs
            assert res.verified_exact


def test_identify_request_validation():
    g = F.heights_and_scales(26).GenScale
    with pytest.raises(ValueError):
        IdentifyRequest(value=g, generator=g, degree=0)
    with pytest.raises(ValueError):
        IdentifyRequest(value=g, generator=g, degree=5, precision_digits=40)


def test_identify_is_deterministic():
    sc = F.heights_and_scales(40)
    a = identify(IdentifyRequest(value=sc.hS[2], generator=sc.GenScale, degree=7))
    b = identify(IdentifyRequest(value=sc.hS[2], generator=sc.GenScale, degree=7))
    assert a.poly.coeffs == b.poly.coeffs


def test_identify_rejects_out_of_field_value():
    g = F.heights_and_scales(26).GenScale
    with mpmath.workdps(260):
        pi_like = mpmath.pi / 7
    with pytest.raises((NoRelationFound, Exception)):
        res = identify(IdentifyRequest(value=pi_like, generator=g, degree=5,
                                       height_bound=48))
        # a hit here would be a false relation; the residual gate must fire
        raise AssertionError(f"unexpected relation {res.poly}")


def test_identify_degree_too_small():
    # lambda_26 has degree 6; degree-2 search must not fabricate a relation
    g = F.heights_and_scales(26).GenScale
    with pytest.raises((NoRelationFound, Exception)):
        res = identify(IdentifyRequest(value=lam(26), generator=g, degree=2,
                                       height_bound=32))
        if not res.verified_exact:
            raise NoRelationFound("not exact")


def test_printed_poly_28():
    sc = F.heights_and_scales(28)
    ctx = F.s2_family(28)
    stars = F.star_points(ctx.ds(4, "left"), side=1)
    d = (stars.star(13)[0] - stars.star(3)[0]).as_real()
    hPx = F.two_star_solve(28, 1, 11, d)
    value = (hPx / sc.hS[2]).as_real()
    res = identify(IdentifyRequest(value=value, generator=sc.GenScale, degree=5))
    assert [str(c) for c in res.poly.coeffs] == [
        "-433/512", "41903/512", "-39573/256", "16255/256", "-3157/512", "35/512"]
    assert res.verified_exact


def test_printed_poly_40():
    sc = F.heights_and_scales(40)
    res = identify(IdentifyRequest(value=sc.hS[2], generator=sc.GenScale, degree=7))
    assert [str(c) for c in res.poly.coeffs] == [
        "-1/128", "439/128", "-3301/128", "12835/128", "-12579/128",
        "3557/128", "-183/128", "1/128"]
    assert res.verified_exact


def test_printed_poly_39_round_trip():
    # s2/s1 identifies and evaluates back to itself exactly
    sc = F.heights_and_scales(39)
    t = sc.tan
    h2 = F.family_tiles(39)[2].height
    s1 = (h2 * (t[5] - t[3])).as_real()
    s2 = (2 * h2 * t[1] * t[2] * t[3]).as_real()
    value = (s2 / s1).as_real()
    res = identify(IdentifyRequest(value=value, generator=sc.GenScale, degree=11))
    assert res.verified_exact
    assert (eval_poly(res.poly, sc.GenScale) - value).is_zero()
    assert str(res.poly.coeffs[0]) == "11/2048"


def test_power_of_two_denominators_soft_check():
    # the documented twice-even identifications all clear the soft check
    from ngonweb.fieldid import denominators_power_of_two
    from ngonweb.cli import px_height
    sc28 = F.heights_and_scales(28)
    r28 = identify(IdentifyRequest(value=(px_height(28) / sc28.hS[2]).as_real(),
                                   generator=sc28.GenScale, degree=5))
    assert denominators_power_of_two(r28.poly)
    sc40 = F.heights_and_scales(40)
    r40 = identify(IdentifyRequest(value=sc40.hS[2], generator=sc40.GenScale,
                                   degree=7))
    assert denominators_power_of_two(r40.poly)
    # the check is advisory: arbitrary field values may fail it
    g = F.heights_and_scales(28).GenScale
    arbitrary = identify(IdentifyRequest(value=(g / 3 + Fraction(1, 5)).as_real(),
                                         generator=g, degree=5))
    assert not denominators_power_of_two(arbitrary.poly)


def test_zero_poly_eval():
    g = F.heights_and_scales(26).GenScale
    assert eval_poly(RationalPoly((Fraction(0),)), g).is_zero()


# ---------------------------------------------------------------------------
# minimal polynomials

def test_minimal_poly_lambda5():
    p = minimal_poly(lam(5), 10)
    assert [str(c) for c in p.coeffs] == ["-1", "1", "1"]


def test_minimal_poly_zero():
    p = minimal_poly(CycloNum.zero(4).as_real(), 3)
    assert p.coeffs == (Fraction(0), Fraction(1))


def test_minimal_poly_degree_bound():
    with pytest.raises(DegreeExceeded):
        minimal_poly(lam(47), 10)


COMPLEXITY = {26: 6, 29: 14, 31: 15, 37: 18, 41: 20, 43: 21, 47: 23, 49: 21}


@pytest.mark.parametrize("N,deg", sorted(COMPLEXITY.items()))
def test_minimal_poly_degree_spot(N, deg):
    assert euler_phi(N) // 2 == deg
    p = minimal_poly(lam(N), 25)
    assert p.degree == deg
    assert eval_poly(p, lam(N)).is_zero()


@pytest.mark.slow
def test_minimal_poly_degrees_all_26_to_50():
    for N in range(26, 51):
        p = minimal_poly(lam(N), 25)
        assert p.degree == euler_phi(N) // 2


# ---------------------------------------------------------------------------
# LLL sanity

def test_lll_finds_short_vector():
    # a planted relation: 3*1 + 2*x - y = 0 with x = 5, y = 13
    rows = [[1, 0, 0, 10 ** 8], [0, 1, 0, 5 * 10 ** 8], [0, 0, 1, 13 * 10 ** 8 // 1]]
    red = lll_reduce(rows)
    norms = [sum(v * v for v in r) for r in red]
    assert min(norms) < 10 ** 8     # the relation row (3, 2, -1, 0)-ish
