"""Uniform parameter sampling of curves into polylines."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import CurvePoint, CurveSpec, eval_grid, max_frequency, spans_period

MIN_DEFAULT_SAMPLES = 4096
SAMPLES_PER_OSCILLATION = 16


@dataclass(frozen=True, eq=False)
class Polyline:
    """Ordered samples ``(t, x, y)`` stored column-wise."""

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    closed: bool = False

    def __post_init__(self):
        cols = [np.ascontiguousarray(c, dtype=float) for c in (self.t, self.x, self.y)]
        if not (cols[0].shape == cols[1].shape == cols[2].shape) or cols[0].ndim != 1:
            raise ValueError("t, x, y must be 1-d arrays of equal length")
        for name, col in zip(("t", "x", "y"), cols):
            col.flags.writeable = False
            object.__setattr__(self, name, col)

    @classmethod
    def from_points(cls, points, closed: bool = False) -> "Polyline":
        pts = list(points)
        if not pts:
            return cls(np.empty(0), np.empty(0), np.empty(0), closed)
        t, x, y = zip(*pts)
        return cls(np.array(t), np.array(x), np.array(y), closed)

    def __len__(self) -> int:
        return self.t.shape[0]

    def __getitem__(self, i: int) -> CurvePoint:
        return CurvePoint(float(self.t[i]), float(self.x[i]), float(self.y[i]))

    @property
    def points(self) -> list[CurvePoint]:
        return [CurvePoint(*row) for row in zip(self.t.tolist(), self.x.tolist(), self.y.tolist())]

    def xy(self) -> np.ndarray:
        """(N, 2) array of coordinates."""
        return np.column_stack((self.x, self.y))


def default_sample_count(spec: CurveSpec) -> int:
    """max(4096, 16 * fastest frequency), bumped to an odd count.

    Odd counts over [0, 2 pi] put pi on the grid, so t and 2 pi - t are both sampled.
    """
    m = max(MIN_DEFAULT_SAMPLES, math.ceil(SAMPLES_PER_OSCILLATION * max_frequency(spec)))
    if m % 2:
        m += 1
    return m + 1


def sample_curve(spec: CurveSpec, t0: float, t1: float, count: int) -> Polyline:
    """Sample at ``t_i = t0 + i (t1 - t0) / (count - 1)``, endpoints exact."""
    t0, t1 = float(t0), float(t1)
    if not (math.isfinite(t0) and math.isfinite(t1)) or not t0 < t1:
        raise ValueError(f"need finite t0 < t1, got [{t0}, {t1}]")
    if int(count) != count or count < 2:
        raise ValueError(f"count must be an integer >= 2, got {count}")
    count = int(count)
    t, x, y = eval_grid(spec, t0, t1, count)
    t[0], t[-1] = t0, t1
    return Polyline(t, x, y, closed=spans_period(spec, t0, t1))
