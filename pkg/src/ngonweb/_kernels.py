"""Numba kernels for float-mode orbit iteration.

The supporting-vertex search walks counterclockwise from the previous
step's vertex; tau orbits advance the tangent vertex monotonically, so the
walk is O(1) amortized.  No fastmath: results must be deterministic.

Return codes: 0 = returned to seed, 1 = iteration limit, 2 = singular hit,
3 = no supporting vertex (point inside the polygon).
"""

import numpy as np
from numba import njit

TAU_RETURN = 0
TAU_LIMIT = 1
TAU_SINGULAR = 2
TAU_INSIDE = 3


@njit(cache=True)
def _support(vx, vy, px, py, j, orient, sing_tol):
    """Find the supporting vertex with the polygon on the left (orient=+1)
    or right (orient=-1) of p -> v.  Returns (j, status) with status 0 ok,
    2 singular (decision within sing_tol of an extension line), 3 none."""
    m = vx.shape[0]
    for _ in range(m + 1):
        jp = j + 1 if j + 1 < m else 0
        jm = j - 1 if j > 0 else m - 1
        ax = vx[j] - px
        ay = vy[j] - py
        w1x = vx[jm] - px
        w1y = vy[jm] - py
        w2x = vx[jp] - px
        w2y = vy[jp] - py
        c1 = (ax * w1y - ay * w1x) * orient
        c2 = (ax * w2y - ay * w2x) * orient
        if c1 > 0.0 and c2 > 0.0:
            na = ax * ax + ay * ay
            n1 = w1x * w1x + w1y * w1y
            n2 = w2x * w2x + w2y * w2y
            t2 = sing_tol * sing_tol
            if c1 * c1 <= t2 * na * n1 or c2 * c2 <= t2 * na * n2:
                return j, TAU_SINGULAR
            return j, 0
        j = jp
    # exhausted: either truly inside, or on a line (zero cross rejected above)
    for j0 in range(m):
        jp = j0 + 1 if j0 + 1 < m else 0
        jm = j0 - 1 if j0 > 0 else m - 1
        ax = vx[j0] - px
        ay = vy[j0] - py
        c1 = (ax * (vy[jm] - py) - ay * (vx[jm] - px)) * orient
        c2 = (ax * (vy[jp] - py) - ay * (vx[jp] - px)) * orient
        if c1 >= 0.0 and c2 >= 0.0:
            return j0, TAU_SINGULAR
    return j, TAU_INSIDE


@njit(cache=True)
def _support_tiebreak(vx, vy, px, py, j, orient):
    """Supporting vertex for web sampling: exact/degenerate ties resolve to
    the candidate vertex nearer to p, and never terminate the orbit.
    Returns (j, ok) with ok False when p has no support (inside)."""
    m = vx.shape[0]
    for _ in range(m + 1):
        jp = j + 1 if j + 1 < m else 0
        jm = j - 1 if j > 0 else m - 1
        ax = vx[j] - px
        ay = vy[j] - py
        c1 = (ax * (vy[jm] - py) - ay * (vx[jm] - px)) * orient
        c2 = (ax * (vy[jp] - py) - ay * (vx[jp] - px)) * orient
        if c1 > 0.0 and c2 > 0.0:
            return j, True
        j = jp
    best = -1
    bestd = 1e300
    for j0 in range(m):
        jp = j0 + 1 if j0 + 1 < m else 0
        jm = j0 - 1 if j0 > 0 else m - 1
        ax = vx[j0] - px
        ay = vy[j0] - py
        c1 = (ax * (vy[jm] - py) - ay * (vx[jm] - px)) * orient
        c2 = (ax * (vy[jp] - py) - ay * (vx[jp] - px)) * orient
        if c1 >= 0.0 and c2 >= 0.0:
            d = ax * ax + ay * ay
            if d < bestd:
                bestd = d
                best = j0
    if best >= 0:
        return best, True
    return j, False


@njit(cache=True)
def tau_period_kernel(vx, vy, px, py, limit, tol, sing_tol,
                      check_refl, rx, ry):
    """Iterate tau from (px, py) until first return within tol.

    Returns (code, steps, half, x, y): half is the first step landing
    within tol of the reflected target (rx, ry) when check_refl.
    """
    sx = px
    sy = py
    j = 0
    half = -1
    for step in range(1, limit + 1):
        j, status = _support(vx, vy, px, py, j, 1.0, sing_tol)
        if status != 0:
            return status, step, half, px, py
        px = 2.0 * vx[j] - px
        py = 2.0 * vy[j] - py
        if check_refl and half < 0:
            if abs(px - rx) <= tol and abs(py - ry) <= tol:
                half = step
        if abs(px - sx) <= tol and abs(py - sy) <= tol:
            return TAU_RETURN, step, half, px, py
    return TAU_LIMIT, limit, half, px, py


@njit(cache=True)
def tau_record_kernel(vx, vy, px, py, iters, crop, out, start, orient):
    """Iterate tau (orient=+1) or its inverse (-1), recording every visited
    point inside crop = (x0, y0, x1, y1) into out[start:].

    Returns (recorded, steps_done, code); code 3 means the orbit reached a
    point with no supporting vertex and stopped there.
    """
    j = 0
    rec = start
    cap = out.shape[0]
    for step in range(1, iters + 1):
        j, ok = _support_tiebreak(vx, vy, px, py, j, orient)
        if not ok:
            return rec - start, step - 1, TAU_INSIDE
        px = 2.0 * vx[j] - px
        py = 2.0 * vy[j] - py
        if crop[0] <= px <= crop[2] and crop[1] <= py <= crop[3]:
            if rec < cap:
                out[rec, 0] = px
                out[rec, 1] = py
            rec += 1
    return rec - start, iters, TAU_LIMIT


@njit(cache=True)
def tau_bench_kernel(vx, vy, px, py, iters):
    """Tight tau iteration loop for throughput measurement."""
    j = 0
    m = vx.shape[0]
    for _ in range(iters):
        for _ in range(m + 1):
            jp = j + 1 if j + 1 < m else 0
            jm = j - 1 if j > 0 else m - 1
            ax = vx[j] - px
            ay = vy[j] - py
            c1 = ax * (vy[jm] - py) - ay * (vx[jm] - px)
            c2 = ax * (vy[jp] - py) - ay * (vx[jp] - px)
            if c1 > 0.0 and c2 > 0.0:
                break
            j = jp
        px = 2.0 * vx[j] - px
        py = 2.0 * vy[j] - py
    return px, py


@njit(cache=True)
def df_record_kernel(x, y, two_cos, iters, crop, out, start):
    """Digital-filter map (x, y) -> (y, wrap(two_cos*y - x)) on [-1, 1)^2."""
    rec = start
    cap = out.shape[0]
    for _ in range(iters):
        z = two_cos * y - x
        # fold into [-1, 1) by adding multiples of 2 (overflow nonlinearity)
        z = z - 2.0 * np.floor((z + 1.0) / 2.0)
        x = y
        y = z
        if crop[0] <= x <= crop[2] and crop[1] <= y <= crop[3]:
            if rec < cap:
                out[rec, 0] = x
                out[rec, 1] = y
            rec += 1
    return rec - start, x, y


@njit(cache=True)
def dc_record_kernel(x, y, cw, sw, iters, crop, out, start):
    """Dual-center map: rotation by w about (0,0) for Re(z) >= -1/2, about
    (-1,0) otherwise."""
    rec = start
    cap = out.shape[0]
    for _ in range(iters):
        if x >= -0.5:
            nx = cw * x - sw * y
            ny = sw * x + cw * y
        else:
            tx = x + 1.0
            nx = cw * tx - sw * y - 1.0
            ny = sw * tx + cw * y
        x = nx
        y = ny
        if crop[0] <= x <= crop[2] and crop[1] <= y <= crop[3]:
            if rec < cap:
                out[rec, 0] = x
                out[rec, 1] = y
            rec += 1
    return rec - start, x, y
