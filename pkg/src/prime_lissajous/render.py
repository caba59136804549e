"""SVG and CSV writers for sampled curves."""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass

import numpy as np

from .sampling import Polyline

SVG_HEADER = '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'


@dataclass(frozen=True)
class RenderStyle:
    width_px: int = 1000
    height_px: int = 1000
    stroke_width: float = 1.0
    margin_fraction: float = 0.05
    # perpendicular-distance tolerance in pixels; 0 keeps every vertex
    simplify_px: float = 0.0

    def __post_init__(self):
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("image size must be positive")
        if not self.stroke_width > 0:
            raise ValueError("stroke width must be positive")
        if not 0.0 <= self.margin_fraction <= 0.45:
            raise ValueError("margin_fraction must lie in [0, 0.45]")
        if self.simplify_px < 0:
            raise ValueError("simplify_px must be non-negative")


def to_pixels(line: Polyline, style: RenderStyle) -> np.ndarray:
    """Map curve coordinates into the viewport, y flipped, equal scale on both axes.

    The bounding box is fitted into the viewport inset by ``margin_fraction`` on
    each side and centred along the slack axis.
    """
    if len(line) == 0:
        raise ValueError("cannot map an empty polyline")
    w, h = style.width_px, style.height_px
    m = style.margin_fraction
    inner_w, inner_h = w * (1 - 2 * m), h * (1 - 2 * m)
    xmin, xmax = float(line.x.min()), float(line.x.max())
    ymin, ymax = float(line.y.min()), float(line.y.max())
    scale = min(inner_w / (xmax - xmin) if xmax > xmin else math.inf,
                inner_h / (ymax - ymin) if ymax > ymin else math.inf)
    if math.isinf(scale):  # a single repeated point
        scale = 0.0
    cx, cy = (xmin + xmax) / 2, (ymin + ymax) / 2
    px = w / 2 + (line.x - cx) * scale
    py = h / 2 - (line.y - cy) * scale
    return np.column_stack((np.clip(px, 0, w), np.clip(py, 0, h)))


def simplify(points: np.ndarray, tolerance: float) -> np.ndarray:
    """Ramer-Douglas-Peucker decimation; returns indices of kept vertices."""
    n = points.shape[0]
    if n < 3 or tolerance <= 0:
        return np.arange(n)
    keep = np.zeros(n, dtype=bool)
    keep[0] = keep[-1] = True
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        seg = points[j] - points[i]
        rel = points[i + 1 : j] - points[i]
        norm = math.hypot(seg[0], seg[1])
        if norm > 0:
            d = np.abs(seg[0] * rel[:, 1] - seg[1] * rel[:, 0]) / norm
        else:
            d = np.hypot(rel[:, 0], rel[:, 1])
        k = int(np.argmax(d))
        if d[k] > tolerance:
            k += i + 1
            keep[k] = True
            stack.append((k, j))
            stack.append((i, k))
    return np.flatnonzero(keep)


def _num(v: float) -> str:
    # millipixel resolution, then the shortest repr that round-trips
    r = round(float(v), 3)
    if r == int(r):
        return str(int(r))
    return repr(r)


def svg_document(line: Polyline, style: RenderStyle) -> str:
    px = to_pixels(line, style)
    if style.simplify_px > 0:
        px = px[simplify(px, style.simplify_px)]
    coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in px.tolist())
    w, h = style.width_px, style.height_px
    return (
        SVG_HEADER
        + f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
        + f'<polyline fill="none" stroke="black" stroke-width="{_num(style.stroke_width)}" '
        f'stroke-linejoin="round" points="{coords}"/>\n'
        + "</svg>\n"
    )


def emit_svg(line: Polyline, style: RenderStyle, path: str | os.PathLike) -> None:
    """Write ``line`` as a standalone SVG 1.1 document holding one polyline."""
    if len(line) == 0:
        raise ValueError("cannot render an empty polyline")
    doc = svg_document(line, style)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(doc)
    except OSError as exc:
        raise OSError(f"writing SVG to {os.fspath(path)!r} failed: {exc}") from exc


def emit_csv(line: Polyline, path: str | os.PathLike) -> None:
    """Header ``t,x,y`` then one row per sample, repr precision, LF endings."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(("t", "x", "y"))
            writer.writerows(zip(line.t.tolist(), line.x.tolist(), line.y.tolist()))
    except OSError as exc:
        raise OSError(f"writing CSV to {os.fspath(path)!r} failed: {exc}") from exc


def read_csv(path: str | os.PathLike, closed: bool = False) -> Polyline:
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != ["t", "x", "y"]:
        raise ValueError(f"{os.fspath(path)!r} is not a t,x,y curve file")
    data = np.array(rows[1:], dtype=float).reshape(-1, 3)
    return Polyline(data[:, 0], data[:, 1], data[:, 2], closed=closed)
