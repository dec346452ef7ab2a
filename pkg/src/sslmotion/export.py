"""CSV / PGM / JSON writers for heatmaps, dribbler traces and reports.

All numbers are written with 6 significant digits; infinite times are
written as ``inf`` so files stay byte-identical for identical inputs.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from .dribbler import DribblerTrace
from .pursuit import HeatmapGrid, PursuitResult

PathLike = Union[str, Path]


def fmt(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return f"{x:.6g}"


def round6(x: float):
    """JSON-ready number at 6 significant digits (``"inf"`` for infinities)."""
    if not math.isfinite(x):
        return fmt(x)
    return float(f"{x:.6g}")


def pursuit_result_dict(res: PursuitResult) -> dict:
    return {
        "point": [round6(res.point.x), round6(res.point.y)],
        "time_s": round6(res.time),
        "termination": res.termination.value,
    }


def heatmap_csv(grid: HeatmapGrid) -> str:
    xs, ys = grid.cell_centers()
    lines = ["x,y,time_s"]
    for x, y, t in zip(xs.ravel(), ys.ravel(), grid.values.ravel()):
        lines.append(f"{fmt(x)},{fmt(y)},{fmt(t)}")
    return "\n".join(lines) + "\n"


def heatmap_pgm(grid: HeatmapGrid) -> tuple[bytes, str]:
    """Binary P5 image plus the text describing its gray-level mapping.

    Finite times map affinely onto levels 0..254 (shortest time black);
    infinite times get 255. The top image row is the largest y.
    """
    vals = grid.values
    finite = np.isfinite(vals)
    if finite.any():
        lo, hi = float(vals[finite].min()), float(vals[finite].max())
    else:
        lo = hi = 0.0
    span = hi - lo
    levels = np.full(vals.shape, 255, dtype=np.uint8)
    if span > 0:
        levels[finite] = np.rint((vals[finite] - lo) / span * 254.0).astype(np.uint8)
    else:
        levels[finite] = 0
    image = levels[::-1]
    header = f"P5\n{grid.nx} {grid.ny}\n255\n".encode("ascii")
    mapping = (
        f"t_min_s {fmt(lo)}\n"
        f"t_max_s {fmt(hi)}\n"
        "level = round((t - t_min_s) / (t_max_s - t_min_s) * 254)\n"
        "level 255 = inf\n"
        f"origin {fmt(grid.origin.x)} {fmt(grid.origin.y)}\n"
        f"cell_size {fmt(grid.cell_size)}\n"
        "top row = largest y\n"
    )
    return header + image.tobytes(), mapping


def write_heatmap(grid: HeatmapGrid, path: PathLike) -> list[Path]:
    """Write CSV or PGM depending on the suffix; returns the files written."""
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        data, mapping = heatmap_pgm(grid)
        sidecar = path.with_name(path.name + ".txt")
        path.write_bytes(data)
        sidecar.write_text(mapping, encoding="utf-8")
        return [path, sidecar]
    path.write_text(heatmap_csv(grid), encoding="utf-8")
    return [path]


def trace_csv(trace: DribblerTrace) -> str:
    lines = ["t,x1,x2,v1,v2,contact"]
    for row in zip(trace.times, trace.x1, trace.x2, trace.v1, trace.v2, trace.in_contact):
        lines.append(",".join(fmt(v) for v in row[:5]) + f",{int(row[5])}")
    return "\n".join(lines) + "\n"


def sweep_csv(rows: Iterable[tuple[float, float, float, int]]) -> str:
    lines = ["M,peak_m,settling_s,separations"]
    for M, peak, settle, seps in rows:
        lines.append(f"{fmt(M)},{fmt(peak)},{fmt(settle)},{int(seps)}")
    return "\n".join(lines) + "\n"
