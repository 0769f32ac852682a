"""Bit-exact point-cloud persistence (PGW1) and reproducibility manifests.

PGW1 layout, little-endian, 32-byte header:

    offset  size  field
    0       4     magic "PGW1"
    4       2     u16 version = 1
    6       2     u16 flags
    8       4     u32 N
    12      1     u8 map id (0 tau, 1 tau_inverse, 2 df, 3 dc)
    13      1     u8 mode (0 float, 1 exact)
    14      10    reserved (zero)
    24      8     u64 count
    32      16*count  f64 x, f64 y pairs

A manifest is JSON carrying everything needed to regenerate the cloud
byte-for-byte; exact numbers are serialized as rational strings.
"""

from __future__ import annotations

import hashlib
import json
import struct
import time
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .dynamics import PointCloud, web_generate

__all__ = [
    "BadMagic",
    "TruncatedFile",
    "VersionMismatch",
    "save_cloud",
    "load_cloud",
    "content_hash",
    "write_manifest",
    "run_from_manifest",
]

MAGIC = b"PGW1"
VERSION = 1
HEADER = struct.Struct("<4sHHIBB10xQ")
assert HEADER.size == 32

MAP_IDS = {"tau": 0, "tau_inverse": 1, "df": 2, "dc": 3}
MAP_NAMES = {v: k for k, v in MAP_IDS.items()}
MODE_IDS = {"float": 0, "exact": 1}
MODE_NAMES = {v: k for k, v in MODE_IDS.items()}


class BadMagic(IOError):
    pass


class TruncatedFile(IOError):
    pass


class VersionMismatch(IOError):
    pass


def save_cloud(pc: PointCloud, path: Union[str, Path]) -> None:
    """Write the cloud; file size is exactly 32 + 16*count bytes."""
    path = Path(path)
    n = pc.points.shape[0]
    src = pc.source or {}
    header = HEADER.pack(MAGIC, VERSION, 0, int(src.get("N", 0)),
                         MAP_IDS.get(src.get("map", "tau"), 0),
                         MODE_IDS.get(pc.mode, 0), n)
    body = np.ascontiguousarray(pc.points, dtype="<f8").tobytes()
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(body)


def load_cloud(path: Union[str, Path]) -> PointCloud:
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < HEADER.size:
        raise TruncatedFile(f"{path}: shorter than the 32-byte header")
    magic, version, flags, N, map_id, mode_id, count = HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise BadMagic(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise VersionMismatch(f"{path}: version {version}, expected {VERSION}")
    need = HEADER.size + 16 * count
    if len(raw) != need:
        raise TruncatedFile(f"{path}: {len(raw)} bytes, expected {need}")
    pts = np.frombuffer(raw, dtype="<f8", offset=HEADER.size).reshape(count, 2).copy()
    return PointCloud(points=pts, crop=(), source={"N": N, "map": MAP_NAMES[map_id],
                                                   "kind": "loaded"},
                      iters=0, recorded=count, total=0, mode=MODE_NAMES[mode_id])


def content_hash(path: Union[str, Path]) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_manifest(path: Union[str, Path], cloud_path: Union[str, Path],
                   N: int, map_kind: str, samples_per_edge: int, iters: int,
                   crop: tuple, mode: str, both_directions: bool = True,
                   theta: Optional[float] = None, command: str = "",
                   wall_time: float = 0.0, rng_seed: Optional[int] = None) -> dict:
    """Write the reproducibility manifest next to a saved cloud."""
    manifest = {
        "format": "ngonweb-manifest-1",
        "command": command,
        "config": {
            "N": N,
            "map": map_kind,
            "theta": theta,
            "samples_per_edge": samples_per_edge,
            "iters": iters,
            "crop": [repr(float(c)) for c in crop],
            "mode": mode,
            "both_directions": both_directions,
        },
        "rng_seed": rng_seed,      # generation is deterministic; kept for record
        "cloud_file": str(Path(cloud_path).name),
        "content_hash": content_hash(cloud_path),
        "wall_time_seconds": wall_time,
        "created_unix": int(time.time()),
    }
    Path(path).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest


def run_from_manifest(manifest: Union[dict, str, Path],
                      out_path: Union[str, Path]) -> PointCloud:
    """Regenerate the cloud a manifest describes and save it to out_path;
    re-running with the same manifest produces byte-identical files."""
    if not isinstance(manifest, dict):
        manifest = json.loads(Path(manifest).read_text())
    cfg = manifest["config"]
    t0 = time.perf_counter()
    pc = web_generate(
        cfg["N"], cfg["map"], samples_per_edge=cfg["samples_per_edge"],
        iters=cfg["iters"], crop=tuple(float(c) for c in cfg["crop"]),
        mode=cfg["mode"], both_directions=cfg["both_directions"],
        theta=cfg.get("theta"))
    pc.source["wall"] = time.perf_counter() - t0
    save_cloud(pc, out_path)
    return pc
