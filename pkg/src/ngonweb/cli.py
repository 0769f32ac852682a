"""Command-line surface.

Subcommands: family, web, orbit, periods, identify, render, bench.
Exit codes: 0 success, 2 domain error, 3 iteration limit exceeded.
"""

from __future__ import annotations

import argparse
import ast
import json
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import cloudio, dynamics, fieldid, periods, svg
from . import family as fam
from .field import CycloNum, root_of_unity, to_float

__all__ = ["main", "cli_dispatch"]


class DomainError(ValueError):
    pass


class LimitExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# helpers

def _tile_json(t: fam.Tile) -> dict:
    fx, fy = t.center_float()
    return {
        "kind": t.kind, "index": t.index, "gon": t.gon,
        "center_exact": [t.center[0].to_dict(), t.center[1].to_dict()],
        "height_exact": t.height.to_dict(),
        "center": [fx, fy],
        "height": float(to_float(t.height.as_real(), 30)),
    }


def _parse_crop(s: str):
    parts = [float(x) for x in s.split(",")]
    if len(parts) != 4:
        raise DomainError("crop must be x0,y0,x1,y1")
    return tuple(parts)


_SEED_RE = re.compile(r"^c(D|M|S|DS)\[(\d+)\]$")


def _parse_seed(N: int, text: str):
    """cD[k]/cM[k] (twice-odd ladder), cS[k], cDS[k], vDS2, or x,y floats."""
    m = _SEED_RE.match(text)
    if m:
        name, k = m.group(1), int(m.group(2))
        if name in ("D", "M"):
            lad = fam.dk_ladder(N, k)
            return lad[k - 1].cD if name == "D" else lad[k - 1].cM
        if name == "S":
            return fam.family_tiles(N)[k].center
        return fam.s2_family(N).ds(k, "left").center
    if text == "vDS2":
        return fam.volunteer_ds2(N).center
    try:
        x, y = text.split(",")
        return (float(x), float(y))
    except ValueError:
        raise DomainError(f"cannot parse seed {text!r}")


_BRACKET = re.compile(r"\b(hS|scale|tan)\[(\d+)\]")


def _identify_names(N: int) -> dict:
    sc = fam.heights_and_scales(N)
    names = {"GenScale": sc.GenScale}
    for k in sc.hS:
        names[f"hS_{k}"] = sc.hS[k]
        names[f"scale_{k}"] = sc.scale[k]
        names[f"tan_{k}"] = sc.tan[k]
    z = root_of_unity(N, 1)
    names["lam"] = (z + z.inverse()).as_real()
    if N in (28, 44):
        names["hPx"] = px_height(N)
    return names


def px_height(N: int) -> CycloNum:
    """The Two-Star volunteer Px of the 8k+4 mod-16 branch (N = 28, 44):
    hPx = d/(tan((N/2-3)pi/N) - tan(pi/N)) with d the star[3]-to-GenStar
    gap of DS[4]."""
    ctx = fam.s2_family(N)
    ds4 = ctx.ds(4, "left")
    stars = fam.star_points(ds4, side=1)
    d = (stars.star(N // 2 - 1)[0] - stars.star(3)[0]).as_real()
    return fam.two_star_solve(N, 1, N // 2 - 3, d)


_ALLOWED_NODES = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.USub, ast.UAdd,
                  ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.Constant,
                  ast.Name, ast.Load)


def eval_value_expr(N: int, expr: str):
    """Tiny arithmetic evaluator over exact family quantities: names
    hS[k], scale[k], tan[k], GenScale, lam, hPx; operators + - * / ** ()."""
    text = _BRACKET.sub(lambda m: f"{m.group(1)}_{m.group(2)}", expr)
    tree = ast.parse(text, mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise DomainError(f"disallowed token in expression: {type(node).__name__}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, int):
            raise DomainError("only integer literals are allowed")
    names = _identify_names(N)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise DomainError(f"unknown name {node.id!r}")
            return names[node.id]
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
            if isinstance(node.op, ast.Pow):
                if not isinstance(b, Fraction) or b.denominator != 1:
                    raise DomainError("only integer exponents")
                return a ** int(b)
        raise DomainError("unsupported expression")

    out = ev(tree)
    if isinstance(out, Fraction):
        out = CycloNum.from_rational(out)
    return out.as_real()


# ---------------------------------------------------------------------------
# subcommands

def _cmd_family(args) -> int:
    # below N = 5 there is no First Family; emit the polygon itself
    tiles = fam.family_tiles(args.N) if args.N >= 5 else (fam.build_ngon(args.N),)
    doc = {"N": args.N, "complexity": fam.ngon_spec(args.N).complexity,
           "ambient_M": fam.ngon_spec(args.N).ambient_M,
           "tiles": [_tile_json(t) for t in tiles]}
    if args.json is not None:
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text)
    else:
        for t in tiles:
            fx, fy = t.center_float()
            print(f"{t.kind}[{t.index}] gon={t.gon} center=({fx:.9f}, {fy:.9f}) "
                  f"height={float(to_float(t.height.as_real(), 30)):.9f}")
    return 0


def _cmd_web(args) -> int:
    t0 = time.perf_counter()
    pc = dynamics.web_generate(args.N, args.map, samples_per_edge=args.samples,
                               iters=args.iters, crop=_parse_crop(args.crop),
                               mode=args.mode, theta=args.theta,
                               both_directions=not args.forward_only)
    wall = time.perf_counter() - t0
    cloudio.save_cloud(pc, args.out)
    print(f"web N={args.N} map={args.map}: recorded {pc.recorded} of "
          f"{pc.total} iterations (rate {pc.return_rate:.3g}) -> {args.out}")
    if args.manifest:
        cloudio.write_manifest(args.manifest, args.out, args.N, args.map,
                               args.samples, args.iters, _parse_crop(args.crop),
                               args.mode, not args.forward_only, args.theta,
                               command=" ".join(sys.argv), wall_time=wall)
        print(f"manifest -> {args.manifest}")
    return 0


def _cmd_orbit(args) -> int:
    seed = _parse_seed(args.N, args.seed)
    center = None
    if args.doubling_center == "auto":
        center = seed if isinstance(seed[0], CycloNum) else None
    elif args.doubling_center:
        center = _parse_seed(args.N, args.doubling_center)
    mode = args.mode
    if mode == "exact" and not isinstance(seed[0], CycloNum):
        raise DomainError("exact mode needs a symbolic seed")
    res = dynamics.find_period(seed, args.N, limit=args.limit, mode=mode,
                               doubling_center=center)
    if res.period is None:
        print(f"no return within {args.limit} iterations "
              f"(terminated by {res.terminated_by})")
        raise LimitExceeded(args.limit)
    extra = ""
    if res.half_period:
        extra = f" half={res.half_period} doubling={res.doubling}"
    print(f"period {res.period} ({res.mode}"
          f"{', exact-confirmed' if res.exact_confirmed else ''}){extra}")
    return 0


def _cmd_periods(args) -> int:
    lo, hi = (int(x) for x in args.k.split(".."))
    n = args.n
    if args.family in ("D", "M"):
        f = periods.d_period if args.family == "D" else periods.m_period
        vals = [f(n, k) for k in range(lo, hi + 1)]
        label = args.family
    else:
        if args.family == "custom":
            if args.p1 is None or args.p2 is None:
                raise DomainError("custom family needs --p1 and --p2")
            spec = periods.RecurrenceSpec(n, args.p1, args.p2)
        else:
            spec = periods.ds_initial_conditions(n, args.family)
        vals = [periods.recurrence_solve(spec, k) for k in range(lo, hi + 1)]
        label = args.family
    body = ", ".join(str(v) for v in vals)
    print(f"Table[{label}[{n},k], {{k,{lo},{hi}}}] = {{{body}}}")
    return 0


def _cmd_identify(args) -> int:
    value = eval_value_expr(args.n, args.value)
    names = _identify_names(args.n)
    gen = names["GenScale"] if args.generator == "genscale" else names["lam"]
    degree = args.degree or fam.ngon_spec(args.n).complexity - 1
    res = fieldid.identify(fieldid.IdentifyRequest(value=value, generator=gen,
                                                   degree=degree))
    print(res.poly)
    print(f"residual {res.residual}, exact={res.verified_exact}")
    return 0


def _cmd_render(args) -> int:
    doc = json.loads(Path(args.scene).read_text())
    scene = svg.SceneSpec(viewport=tuple(doc["viewport"]),
                          layers=doc["layers"],
                          max_points_render=doc.get("max_points_render", 100_000),
                          background=doc.get("background", "white"))
    clouds = {}
    base = Path(args.scene).parent
    for layer in scene.layers:
        if layer.get("type") == "points":
            name = layer["cloud"]
            clouds[name] = cloudio.load_cloud(base / name)
    text = svg.render_svg(scene, clouds=clouds)
    Path(args.svg).write_text(text)
    print(f"rendered {len(scene.layers)} layers -> {args.svg}")
    return 0


def _cmd_bench(args) -> int:
    r = dynamics.tau_benchmark(N=args.N, iters=args.iters)
    print(f"N={r['N']}: {r['iters']} steps in {r['seconds']:.2f}s "
          f"= {r['steps_per_second']:.3g} steps/s")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ngonweb",
                                description="Edge geometry of regular N-gons "
                                            "under the outer-billiards map")
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("family", help="First Family tiles of N")
    q.add_argument("N", type=int)
    q.add_argument("--json", nargs="?", const="-", default=None,
                   help="emit JSON (to a path, or stdout with no argument)")
    q.set_defaults(func=_cmd_family)

    q = sub.add_parser("web", help="generate a web point cloud")
    q.add_argument("N", type=int)
    q.add_argument("--map", choices=["tau", "dc", "df"], default="tau")
    q.add_argument("--samples", type=int, default=4)
    q.add_argument("--iters", type=int, default=100_000)
    q.add_argument("--crop", default="-10,-10,10,10")
    q.add_argument("--mode", choices=["float", "exact"], default="float")
    q.add_argument("--theta", type=float, default=None, help="Df rotation angle")
    q.add_argument("--forward-only", action="store_true")
    q.add_argument("--out", required=True)
    q.add_argument("--manifest", default=None)
    q.set_defaults(func=_cmd_web)

    q = sub.add_parser("orbit", help="tau period of a seed")
    q.add_argument("N", type=int)
    q.add_argument("--seed", required=True,
                   help="cD[k]|cM[k]|cS[k]|cDS[k]|vDS2|x,y")
    q.add_argument("--limit", type=int, default=10 ** 6)
    q.add_argument("--mode", choices=["exact", "float"], default="exact")
    q.add_argument("--doubling-center", default=None,
                   help="'auto' (the seed) or a seed expression")
    q.set_defaults(func=_cmd_orbit)

    q = sub.add_parser("periods", help="closed-form period tables")
    q.add_argument("--family", default="D",
                   choices=["D", "M", "DS7", "DS3", "M11", "custom"])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", default="1..8", help="range lo..hi")
    q.add_argument("--p1", type=int, default=None)
    q.add_argument("--p2", type=int, default=None)
    q.set_defaults(func=_cmd_periods)

    q = sub.add_parser("identify", help="recognize a value in the scaling field")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--value", required=True,
                   help="expression in hS[k], scale[k], tan[k], GenScale, lam, hPx")
    q.add_argument("--generator", choices=["genscale", "lambda"], default="genscale")
    q.add_argument("--degree", type=int, default=None)
    q.set_defaults(func=_cmd_identify)

    q = sub.add_parser("render", help="render a scene JSON to SVG")
    q.add_argument("scene")
    q.add_argument("--svg", required=True)
    q.set_defaults(func=_cmd_render)

    q = sub.add_parser("bench", help="float tau throughput")
    q.add_argument("--N", type=int, default=26)
    q.add_argument("--iters", type=int, default=10 ** 9)
    q.set_defaults(func=_cmd_bench)
    return p


def cli_dispatch(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded:
        return 3
    except (DomainError, fam.NotTwiceOdd, fam.EqualStarIndices,
            fam.DegenerateWeave, fieldid.NoRelationFound,
            fieldid.PrecisionInsufficient, fieldid.DegreeExceeded,
            cloudio.BadMagic, cloudio.TruncatedFile, cloudio.VersionMismatch,
            ValueError, TypeError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch())
