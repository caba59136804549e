"""Parametric curve families and their exact derivatives.

Three families are supported:

* ``Classic``: x = sin(a t + delta), y = cos(b t)
* ``PrimeSum``: x = sum sin(w(p) t) / p, y = sum cos(w(p) t) / p over the first n primes
* ``AlternatingPrimeSum``: same form, x over primes 2, 5, 11, ... and y over 3, 7, 13, ...

Every family reduces to a pair of harmonic series (sine series for x, cosine
series for y), which is what the evaluators below work with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Optional, Union

import numpy as np

from .primes import first_n_primes, split_alternating

TWO_PI = 2.0 * math.pi

# direct evaluation builds (points x terms) blocks of at most this many entries
_BLOCK = 1 << 21
# largest lattice handed to the FFT evaluator
MAX_FFT_SIZE = 1 << 25


# -- frequency warps ---------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    label = "identity"

    def __call__(self, p: np.ndarray) -> np.ndarray:
        return np.asarray(p, dtype=float)


@dataclass(frozen=True)
class Logarithmic:
    label = "log"

    def __call__(self, p: np.ndarray) -> np.ndarray:
        return np.log(np.asarray(p, dtype=float))


@dataclass(frozen=True)
class SquareRoot:
    label = "sqrt"

    def __call__(self, p: np.ndarray) -> np.ndarray:
        return np.sqrt(np.asarray(p, dtype=float))


@dataclass(frozen=True)
class PowerLaw:
    exponent: float
    label = "power"

    def __post_init__(self):
        if not (math.isfinite(self.exponent) and self.exponent > 0):
            raise ValueError(f"power-law exponent must be finite and positive, got {self.exponent}")

    def __call__(self, p: np.ndarray) -> np.ndarray:
        return np.power(np.asarray(p, dtype=float), self.exponent)


FrequencyWarp = Union[Identity, Logarithmic, SquareRoot, PowerLaw]
IDENTITY = Identity()


# -- curve specs -------------------------------------------------------------


@dataclass(frozen=True)
class Classic:
    a: float
    b: float
    delta: float = 0.0

    def __post_init__(self):
        for name in ("a", "b"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be finite and positive, got {v}")
        if not math.isfinite(self.delta):
            raise ValueError(f"delta must be finite, got {self.delta}")


def _check_count(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class PrimeSum:
    n: int
    warp: FrequencyWarp = field(default=IDENTITY)

    def __post_init__(self):
        _check_count(self.n)


@dataclass(frozen=True)
class AlternatingPrimeSum:
    """``n`` terms per axis, so ``2 n`` consecutive primes are consumed."""

    n: int
    warp: FrequencyWarp = field(default=IDENTITY)

    def __post_init__(self):
        _check_count(self.n)


CurveSpec = Union[Classic, PrimeSum, AlternatingPrimeSum]


class CurvePoint(NamedTuple):
    t: float
    x: float
    y: float


class CurveVelocity(NamedTuple):
    t: float
    dx: float
    dy: float


class CurveAcceleration(NamedTuple):
    t: float
    ddx: float
    ddy: float


# -- harmonic decomposition --------------------------------------------------


@dataclass(frozen=True, eq=False)
class Harmonics:
    """x(t) = sum xa sin(xf t + xphase), y(t) = sum ya cos(yf t).

    Terms are stored smallest prime first.
    """

    xf: np.ndarray
    xa: np.ndarray
    xphase: np.ndarray
    yf: np.ndarray
    ya: np.ndarray
    integer: bool

    def __post_init__(self):
        for arr in (self.xf, self.xa, self.xphase, self.yf, self.ya):
            arr.flags.writeable = False


def _prime_terms(primes: np.ndarray, warp) -> tuple[np.ndarray, np.ndarray]:
    p = primes.astype(float)
    return warp(p), 1.0 / p


@lru_cache(maxsize=64)
def harmonics(spec: CurveSpec) -> Harmonics:
    if isinstance(spec, Classic):
        return Harmonics(
            xf=np.array([float(spec.a)]),
            xa=np.ones(1),
            xphase=np.array([float(spec.delta)]),
            yf=np.array([float(spec.b)]),
            ya=np.ones(1),
            integer=float(spec.a).is_integer() and float(spec.b).is_integer(),
        )
    if isinstance(spec, PrimeSum):
        primes = first_n_primes(spec.n).as_array()
        f, a = _prime_terms(primes, spec.warp)
        return Harmonics(f, a, np.zeros_like(f), f.copy(), a.copy(), integer=isinstance(spec.warp, Identity))
    if isinstance(spec, AlternatingPrimeSum):
        split = split_alternating(first_n_primes(2 * spec.n))
        xf, xa = _prime_terms(split.odd_indexed.as_array(), spec.warp)
        yf, ya = _prime_terms(split.even_indexed.as_array(), spec.warp)
        return Harmonics(xf, xa, np.zeros_like(xf), yf, ya, integer=isinstance(spec.warp, Identity))
    raise TypeError(f"not a curve spec: {spec!r}")


def max_frequency(spec: CurveSpec) -> float:
    h = harmonics(spec)
    return float(max(h.xf.max(), h.yf.max()))


def amplitude_bound(spec: CurveSpec) -> tuple[float, float]:
    """Triangle-inequality bounds on |x| and |y|."""
    h = harmonics(spec)
    return math.fsum(h.xa), math.fsum(h.ya)


def period(spec: CurveSpec) -> Optional[float]:
    """2 pi when every frequency is an integer, otherwise None."""
    if isinstance(spec, Classic):
        return TWO_PI if harmonics(spec).integer else None
    if isinstance(spec.warp, Identity):
        return TWO_PI
    return None


# -- direct evaluation -------------------------------------------------------


def _series(t: np.ndarray, f, a, phase, kind: str, order: int) -> np.ndarray:
    """Sum of the ``order``-th derivative of a sin/cos series at each t."""
    coef = a * f**order if order else a
    # derivative cycles: sin -> cos -> -sin, cos -> -sin -> -cos
    if kind == "sin":
        trig, sign = ((np.sin, 1.0), (np.cos, 1.0), (np.sin, -1.0))[order]
    else:
        trig, sign = ((np.cos, 1.0), (np.sin, -1.0), (np.cos, -1.0))[order]
    out = np.empty(t.shape[0])
    rows = max(1, _BLOCK // max(1, f.shape[0]))
    for s in range(0, t.shape[0], rows):
        arg = np.multiply.outer(t[s : s + rows], f)
        if phase is not None:
            arg += phase
        out[s : s + rows] = (trig(arg) * coef).sum(axis=1)
    return sign * out if sign < 0 else out


def _factored_sum(t: np.ndarray, f: np.ndarray, c: np.ndarray) -> np.ndarray:
    """sum_k c_k exp(i f_k t) for non-negative integer f_k.

    Writing f = Q q + r turns the sum into sum_q exp(i Q q t) sum_r C[r, q] exp(i r t),
    a dense complex matrix product costing about max(f) multiply-adds per point
    instead of one complex exponential per term.
    """
    fi = f.astype(np.int64)
    width = 1 << math.ceil(math.log2(math.sqrt(int(fi.max()) + 1)))
    hi, lo = np.divmod(fi, width)
    table = np.zeros((width, int(hi.max()) + 1), dtype=complex)
    np.add.at(table, (lo, hi), c)
    low_f = np.arange(width, dtype=float)
    high_f = width * np.arange(table.shape[1], dtype=float)
    out = np.empty(t.shape[0], dtype=complex)
    rows = max(1, (1 << 20) // max(table.shape))
    for s in range(0, t.shape[0], rows):
        tt = t[s : s + rows]
        low = np.exp(1j * np.multiply.outer(tt, low_f))
        high = np.exp(1j * np.multiply.outer(tt, high_f))
        out[s : s + rows] = ((low @ table) * high).sum(axis=1)
    return out


def _use_factored(h: Harmonics) -> bool:
    terms = h.xf.shape[0]
    return h.integer and terms >= 32 and max(h.xf.max(), h.yf.max()) <= 40 * terms


def evaluate(spec: CurveSpec, t, order: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """x and y (or their ``order``-th t-derivatives, order <= 2) at parameters ``t``.

    Small specs are summed term by term; large integer-frequency specs use the
    factored complex sum, which agrees to rounding.
    """
    if order not in (0, 1, 2):
        raise ValueError(f"derivative order must be 0, 1 or 2, got {order}")
    h = harmonics(spec)
    tt = np.atleast_1d(np.asarray(t, dtype=float)).ravel()
    if _use_factored(h):
        sx = _factored_sum(tt, h.xf, h.xa * h.xf**order * np.exp(1j * h.xphase))
        sy = _factored_sum(tt, h.yf, h.ya * h.yf**order)
        return _to_xy(sx, sy, order)
    phase = h.xphase if np.any(h.xphase) else None
    x = _series(tt, h.xf, h.xa, phase, "sin", order)
    y = _series(tt, h.yf, h.ya, None, "cos", order)
    return x, y


def _to_xy(sx: np.ndarray, sy: np.ndarray, order: int) -> tuple[np.ndarray, np.ndarray]:
    # sx = sum of x-terms as exp(i .), sy likewise for y; pick the part each derivative needs
    if order == 0:
        return sx.imag, sy.real
    if order == 1:
        return sx.real, -sy.imag
    return -sx.imag, -sy.real


def _scalar(spec, t, order):
    t = float(t)
    if not math.isfinite(t):
        raise ValueError(f"t must be finite, got {t}")
    x, y = evaluate(spec, t, order)
    return t, float(x[0]), float(y[0])


def eval_point(spec: CurveSpec, t: float) -> CurvePoint:
    return CurvePoint(*_scalar(spec, t, 0))


def eval_velocity(spec: CurveSpec, t: float) -> CurveVelocity:
    return CurveVelocity(*_scalar(spec, t, 1))


def eval_acceleration(spec: CurveSpec, t: float) -> CurveAcceleration:
    return CurveAcceleration(*_scalar(spec, t, 2))


# -- lattice evaluation via FFT ----------------------------------------------


# x^(k) = Re(gx * sum exp(i f t)) and y^(k) = Re(gy * ...) with these unit factors
_REAL_PART = {0: (-1j, 1.0), 1: (1.0, 1j), 2: (1j, -1.0)}


def eval_lattice(spec: CurveSpec, t0: float, size: int, order: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate on ``t0 + 2 pi j / size`` for ``j = 0 .. size-1``.

    Only valid for integer frequencies, where the trace is 2 pi periodic and the
    whole lattice costs one inverse FFT, independent of the number of terms.
    Both coordinates are real trigonometric polynomials, so x + i y is packed
    into a single spectrum (each term at +f and -f).
    """
    h = harmonics(spec)
    if not h.integer:
        raise ValueError("lattice evaluation needs integer frequencies")
    gx, gy = _REAL_PART[order]
    cx = gx * h.xa * h.xf**order * np.exp(1j * (h.xf * t0 + h.xphase))
    cy = gy * h.ya * h.yf**order * np.exp(1j * (h.yf * t0))
    fx, fy = h.xf.astype(np.int64), h.yf.astype(np.int64)
    bins = np.zeros(size, dtype=complex)
    np.add.at(bins, np.mod(fx, size), cx / 2)
    np.add.at(bins, np.mod(-fx, size), np.conj(cx) / 2)
    np.add.at(bins, np.mod(fy, size), 1j * cy / 2)
    np.add.at(bins, np.mod(-fy, size), 1j * np.conj(cy) / 2)
    z = size * np.fft.ifft(bins)
    return z.real, z.imag


def point_cost(spec: CurveSpec) -> float:
    """Rough cost of one direct evaluation, in units of one sin/cos call."""
    h = harmonics(spec)
    if _use_factored(h):
        return 0.05 * float(max(h.xf.max(), h.yf.max()))
    return float(h.xf.shape[0] + h.yf.shape[0])


def lattice_cost(size: int) -> float:
    return 0.3 * size * max(1, size.bit_length())


def _lattice_is_cheaper(spec: CurveSpec, points: int, size: int) -> bool:
    if not harmonics(spec).integer or size > MAX_FFT_SIZE:
        return False
    return points * point_cost(spec) > lattice_cost(size)


def spans_period(spec: CurveSpec, t0: float, t1: float) -> bool:
    per = period(spec)
    return per is not None and abs((t1 - t0) - per) <= 1e-12 * per


def eval_grid(spec: CurveSpec, t0: float, t1: float, count: int, order: int = 0):
    """Parameters and values on the uniform grid of ``count`` points over [t0, t1].

    Full-period grids of integer-frequency specs go through the FFT lattice when
    that is cheaper than direct summation.
    """
    t = np.linspace(t0, t1, count)
    if count >= 2 and spans_period(spec, t0, t1) and _lattice_is_cheaper(spec, count, count - 1):
        x, y = eval_lattice(spec, t0, count - 1, order)
        return t, np.append(x, x[0]), np.append(y, y[0])
    x, y = evaluate(spec, t, order)
    return t, x, y
