"""Arc length, curvature, bounding boxes and trace-comparison metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree

from .curves import (
    TWO_PI,
    CurveSpec,
    eval_acceleration,
    eval_grid,
    eval_lattice,
    eval_velocity,
    evaluate,
    lattice_cost,
    max_frequency,
    point_cost,
    spans_period,
)
from .sampling import Polyline, default_sample_count, sample_curve

SPEED_FLOOR = 1e-9
# point count above which Hausdorff queries go through a k-d tree
KDTREE_THRESHOLD = 2_000
# lattice denominators must stay exactly representable as int64 indices
_MAX_LATTICE = 1 << 60
_QUAD_FFT_LIMIT = 1 << 23


class QuadratureError(ArithmeticError):
    """Adaptive quadrature ran out of subdivisions; ``estimate`` holds the best value."""

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate


class SingularPointError(ValueError):
    pass


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_subdivisions: int = 1 << 24

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be positive")


DEFAULT_QUADRATURE = QuadratureConfig()


@dataclass(frozen=True)
class GeometrySummary:
    length: float
    bbox: tuple[float, float, float, float]
    max_abs_curvature: float  # inf when the sampled trace passes through a stationary point
    asymmetry: float

    @property
    def curvature_bounded(self) -> bool:
        return math.isfinite(self.max_abs_curvature)


# -- arc length --------------------------------------------------------------


class _LatticeSpeed:
    """Speed at lattice points t0 + (t1 - t0) * k / denom.

    For whole-period integer-frequency specs, a lattice finer than the FFT cap
    is split into cosets (k mod 2^r), each a shifted lattice of capped size. A
    coset goes through one FFT when enough of its points are requested;
    everything else is summed directly.
    """

    def __init__(self, spec: CurveSpec, t0: float, t1: float):
        self.spec = spec
        self.t0, self.span = t0, t1 - t0
        self.periodic = spans_period(spec, t0, t1)
        self.cost = point_cost(spec)

    def __call__(self, denom: int, idx: np.ndarray) -> np.ndarray:
        out = np.empty(idx.shape[0])
        direct = np.ones(idx.shape[0], dtype=bool)
        if self.periodic and denom & (denom - 1) == 0:
            size = min(denom, _QUAD_FFT_LIMIT)
            bits = (denom // size).bit_length() - 1
            coset = idx & ((1 << bits) - 1)
            j = (idx >> bits) % size
            labels, inverse, counts = np.unique(coset, return_inverse=True, return_counts=True)
            for c in np.flatnonzero(counts * self.cost > lattice_cost(size)):
                sel = inverse == c
                shift = self.t0 + self.span * (int(labels[c]) / denom)
                dx, dy = eval_lattice(self.spec, shift, size, order=1)
                out[sel] = np.hypot(dx[j[sel]], dy[j[sel]])
                direct[sel] = False
        if direct.any():
            t = self.t0 + self.span * (idx[direct] / denom)
            dx, dy = evaluate(self.spec, t, order=1)
            out[direct] = np.hypot(dx, dy)
        return out


def arc_length(
    spec: CurveSpec,
    t0: float = 0.0,
    t1: float = TWO_PI,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Integral of sqrt(x'^2 + y'^2) over [t0, t1] by adaptive Simpson.

    The interval is first cut into at least 8 panels per period of the fastest
    harmonic (rounded up to a power of two). Each pass then compares Simpson on every open interval against its
    two halves, all intervals at once, and bisects the ones that miss their share
    of the tolerance. Sample points live on a dyadic lattice, so a whole pass can
    be served by one FFT for large prime sums.
    """
    t0, t1 = float(t0), float(t1)
    if not (math.isfinite(t0) and math.isfinite(t1)) or not t0 < t1:
        raise ValueError(f"need finite t0 < t1, got [{t0}, {t1}]")
    span = t1 - t0
    # power of two keeps every lattice size FFT-friendly
    panels = 1 << max(3, math.ceil(math.log2(8 * max_frequency(spec) * span / TWO_PI)))
    speed = _LatticeSpeed(spec, t0, t1)

    level = 0
    idx = np.arange(panels, dtype=np.int64)
    base = speed(2 * panels, np.arange(2 * panels + 1, dtype=np.int64))
    fa, fm, fb = base[0:-1:2], base[1::2], base[2::2]
    width = span / panels
    whole = width / 6 * (fa + 4 * fm + fb)

    accepted: list[float] = []
    processed = panels
    while idx.shape[0]:
        denom = panels << (level + 2)
        if denom >= _MAX_LATTICE:
            raise QuadratureError("arc length did not converge: lattice depth exhausted",
                                  math.fsum(accepted) + float(whole.sum()))
        quarter = speed(denom, np.concatenate((4 * idx + 1, 4 * idx + 3)))
        flm, frm = quarter[: idx.shape[0]], quarter[idx.shape[0]:]
        left = width / 12 * (fa + 4 * flm + fm)
        right = width / 12 * (fm + 4 * frm + fb)
        err = left + right - whole

        estimate = math.fsum(accepted) + float(whole.sum())
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(estimate)) * (width / span)
        ok = np.abs(err) <= 15 * tol
        accepted.extend((left[ok] + right[ok] + err[ok] / 15).tolist())

        bad = ~ok
        nbad = int(bad.sum())
        processed += 2 * nbad
        if processed > cfg.max_subdivisions:
            best = math.fsum(accepted) + float((left[bad] + right[bad]).sum())
            raise QuadratureError(
                f"arc length did not converge within {cfg.max_subdivisions} subdivisions", best
            )
        i = idx[bad]
        idx = np.concatenate((2 * i, 2 * i + 1))
        fa, fm, fb = (
            np.concatenate((fa[bad], fm[bad])),
            np.concatenate((flm[bad], frm[bad])),
            np.concatenate((fm[bad], fb[bad])),
        )
        whole = np.concatenate((left[bad], right[bad]))
        width /= 2
        level += 1
    # fsum is exactly rounded, so the result does not depend on accumulation order
    return math.fsum(accepted)


# -- curvature ---------------------------------------------------------------


def signed_curvature(spec: CurveSpec, t: float, speed_floor: float = SPEED_FLOOR) -> float:
    """(x' y'' - y' x'') / (x'^2 + y'^2)^(3/2); negative on clockwise stretches."""
    v = eval_velocity(spec, t)
    speed = math.hypot(v.dx, v.dy)
    if speed < speed_floor:
        raise SingularPointError(f"curvature undefined at t={t}: speed {speed:.3g} below {speed_floor:g}")
    a = eval_acceleration(spec, t)
    return (v.dx * a.ddy - v.dy * a.ddx) / speed**3


def curvature(spec: CurveSpec, t: float, speed_floor: float = SPEED_FLOOR) -> float:
    """Unsigned curvature, i.e. one over the osculating radius.

    The curves here mostly run clockwise (x = sin, y = cos), so the signed
    value is negative for circles; use ``signed_curvature`` to keep the sign.
    Raises ``SingularPointError`` where the speed drops below ``speed_floor``.
    """
    return abs(signed_curvature(spec, t, speed_floor))


def max_abs_curvature(spec: CurveSpec, t0: float, t1: float, count: int,
                      speed_floor: float = SPEED_FLOOR) -> float:
    """Largest |curvature| over a uniform grid; inf if any grid point is below the speed floor."""
    _, dx, dy = eval_grid(spec, t0, t1, count, order=1)
    _, ddx, ddy = eval_grid(spec, t0, t1, count, order=2)
    speed = np.hypot(dx, dy)
    if speed.min() < speed_floor:
        return math.inf
    return float(np.max(np.abs(dx * ddy - dy * ddx) / speed**3))


# -- point-set metrics -------------------------------------------------------


def bounding_box(samples: Polyline) -> tuple[float, float, float, float]:
    if len(samples) == 0:
        raise ValueError("bounding box of an empty polyline")
    return (float(samples.x.min()), float(samples.x.max()),
            float(samples.y.min()), float(samples.y.max()))


def _brute_directed(a: np.ndarray, b: np.ndarray) -> float:
    worst = 0.0
    rows = max(1, (1 << 22) // b.shape[0])
    for s in range(0, a.shape[0], rows):
        block = a[s : s + rows]
        d2 = ((block[:, None, :] - b[None, :, :]) ** 2).sum(axis=2)
        worst = max(worst, float(d2.min(axis=1).max()))
    return math.sqrt(worst)


def directed_hausdorff(a: np.ndarray, b: np.ndarray) -> float:
    """max over p in a of the distance to the nearest q in b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[0] == 0 or b.shape[0] == 0:
        raise ValueError("Hausdorff distance of an empty point set")
    if max(a.shape[0], b.shape[0]) <= KDTREE_THRESHOLD:
        return _brute_directed(a, b)
    dist, _ = cKDTree(b).query(a, k=1)
    return float(dist.max())


def mirror_asymmetry(samples: Polyline) -> float:
    """One-sided Hausdorff distance from the x-mirrored trace to the trace itself."""
    if len(samples) == 0:
        raise ValueError("mirror asymmetry of an empty polyline")
    pts = samples.xy()
    mirrored = pts * np.array([-1.0, 1.0])
    return directed_hausdorff(mirrored, pts)


def trace_distance(a: Polyline, b: Polyline) -> float:
    """Symmetric Hausdorff distance between two sampled traces."""
    pa, pb = a.xy(), b.xy()
    return max(directed_hausdorff(pa, pb), directed_hausdorff(pb, pa))


def summarize(
    spec: CurveSpec,
    samples: Optional[Polyline] = None,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> GeometrySummary:
    """Length over [0, 2 pi] plus sample-based bbox, curvature peak and asymmetry."""
    if samples is None:
        samples = sample_curve(spec, 0.0, TWO_PI, default_sample_count(spec))
    t0, t1 = float(samples.t[0]), float(samples.t[-1])
    return GeometrySummary(
        length=arc_length(spec, 0.0, TWO_PI, cfg),
        bbox=bounding_box(samples),
        max_abs_curvature=max_abs_curvature(spec, t0, t1, len(samples)),
        asymmetry=mirror_asymmetry(samples),
    )
