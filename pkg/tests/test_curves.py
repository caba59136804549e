import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import prime_sum_xy, reference_primes
from prime_lissajous.curves import (
    TWO_PI,
    AlternatingPrimeSum,
    Classic,
    Logarithmic,
    PowerLaw,
    PrimeSum,
    SquareRoot,
    amplitude_bound,
    eval_acceleration,
    eval_grid,
    eval_lattice,
    eval_point,
    eval_velocity,
    evaluate,
    max_frequency,
    period,
)
from prime_lissajous.primes import first_n_primes, split_alternating

finite_t = st.floats(-50, 50, allow_nan=False, allow_infinity=False)

SPECS = [
    Classic(1, 2, math.pi / 2),
    Classic(3, 4, math.pi / 4),
    Classic(1.5, 2.25, 0.3),
    PrimeSum(1),
    PrimeSum(2),
    PrimeSum(10),
    PrimeSum(100),
    AlternatingPrimeSum(3),
    AlternatingPrimeSum(60),
    PrimeSum(10, Logarithmic()),
    PrimeSum(10, SquareRoot()),
    PrimeSum(10, PowerLaw(1.5)),
    AlternatingPrimeSum(5, SquareRoot()),
]


def test_classic_at_zero():
    p = eval_point(Classic(1, 2, math.pi / 2), 0.0)
    assert p.t == 0.0
    assert p.x == pytest.approx(1.0, abs=1e-15)
    assert p.y == 1.0


def test_prime_sum_at_zero():
    p = eval_point(PrimeSum(3), 0.0)
    assert p.x == 0.0
    assert p.y == pytest.approx(31 / 30, abs=1e-15)


def test_alternating_at_zero_uses_even_class_for_y():
    p = eval_point(AlternatingPrimeSum(3), 0.0)
    assert p.x == 0.0
    assert p.y == pytest.approx(1 / 3 + 1 / 7 + 1 / 13, abs=1e-15)


def test_prime_sum_at_pi():
    p = eval_point(PrimeSum(2), math.pi)
    assert p.x == pytest.approx(0.0, abs=1e-15)
    assert p.y == pytest.approx(1 / 6, abs=1e-15)


def test_velocity_examples():
    v = eval_velocity(PrimeSum(4), 0.0)
    assert (v.dx, v.dy) == (pytest.approx(4.0, abs=1e-14), 0.0)
    v = eval_velocity(Classic(1, 1, 0), 0.0)
    assert (v.dx, v.dy) == (1.0, 0.0)


def test_matches_reference_formula():
    t = np.linspace(-3, 9, 301)
    primes = reference_primes(100)
    x_ref, y_ref = prime_sum_xy(primes, primes, t)
    x, y = evaluate(PrimeSum(100), t)
    assert np.allclose(x, x_ref, atol=1e-13)
    assert np.allclose(y, y_ref, atol=1e-13)
    p = reference_primes(120)
    x_ref, y_ref = prime_sum_xy(p[0::2], p[1::2], t)
    x, y = evaluate(AlternatingPrimeSum(60), t)
    assert np.allclose(x, x_ref, atol=1e-13)
    assert np.allclose(y, y_ref, atol=1e-13)


def _central(spec, t, order, h):
    lo = evaluate(spec, t - h, order - 1)
    hi = evaluate(spec, t + h, order - 1)
    return (hi[0] - lo[0]) / (2 * h), (hi[1] - lo[1]) / (2 * h)


@pytest.mark.parametrize("spec", SPECS, ids=repr)
@pytest.mark.parametrize("order", [1, 2])
def test_derivatives_match_finite_differences(spec, order):
    rng = np.random.default_rng(7)
    t = rng.uniform(0, TWO_PI, 25)
    # step 1e-5, shrunk for fast harmonics so truncation (f h)^2 / 6 stays below 1e-7
    h = min(1e-5, 1e-3 / max_frequency(spec))
    exact = evaluate(spec, t, order)
    fd = _central(spec, t, order, h)
    for e, f in zip(exact, fd):
        assert np.max(np.abs(e - f)) <= 1e-6 * np.max(np.abs(e))


@settings(max_examples=50, deadline=None)
@given(finite_t)
def test_velocity_two_primes_matches_fd(t):
    spec = PrimeSum(2)
    v = eval_velocity(spec, t)
    h = 1e-5
    lo, hi = eval_point(spec, t - h), eval_point(spec, t + h)
    fd = ((hi.x - lo.x) / (2 * h), (hi.y - lo.y) / (2 * h))
    speed = math.hypot(v.dx, v.dy)
    assert math.hypot(v.dx - fd[0], v.dy - fd[1]) <= 1e-6 * max(speed, 1.0)


def test_scalar_helpers_agree_with_array_path():
    spec = PrimeSum(7, SquareRoot())
    t = 1.234
    x, y = evaluate(spec, [t], 2)
    a = eval_acceleration(spec, t)
    assert (a.ddx, a.ddy) == (x[0], y[0])


def test_rejects_non_finite_t():
    with pytest.raises(ValueError):
        eval_point(PrimeSum(3), math.nan)
    with pytest.raises(ValueError):
        evaluate(PrimeSum(3), [0.0], order=3)


@pytest.mark.parametrize(
    "spec, expected",
    [
        (PrimeSum(100), TWO_PI),
        (Classic(3, 2, math.pi / 2), TWO_PI),
        (PrimeSum(10, SquareRoot()), None),
        (AlternatingPrimeSum(4), TWO_PI),
        (Classic(1.5, 2, 0), None),
        (PrimeSum(3, PowerLaw(2.0)), None),
    ],
)
def test_period(spec, expected):
    assert period(spec) == expected


@pytest.mark.parametrize("spec", [PrimeSum(5), PrimeSum(100), AlternatingPrimeSum(30), Classic(3, 4, 0.7)], ids=repr)
def test_periodicity(spec):
    t = np.random.default_rng(1).uniform(-20, 20, 1000)
    x0, y0 = evaluate(spec, t)
    x1, y1 = evaluate(spec, t + TWO_PI)
    assert np.max(np.abs(x1 - x0)) <= 1e-12
    assert np.max(np.abs(y1 - y0)) <= 1e-12


@pytest.mark.parametrize("n", [1, 3, 10, 100])
def test_mirror_symmetry_pointwise(n):
    t = np.random.default_rng(n).uniform(-10, 10, 1000)
    x, y = evaluate(PrimeSum(n), t)
    xm, ym = evaluate(PrimeSum(n), -t)
    assert np.max(np.abs(xm + x)) <= 1e-12
    assert np.max(np.abs(ym - y)) <= 1e-12


@pytest.mark.parametrize("spec", [PrimeSum(1), PrimeSum(3), PrimeSum(10), PrimeSum(100), AlternatingPrimeSum(50)], ids=repr)
def test_amplitude_bound(spec):
    bx, by = amplitude_bound(spec)
    _, x, y = eval_grid(spec, 0.0, TWO_PI, 20001)
    assert np.abs(x).max() <= bx + 1e-12
    assert np.abs(y).max() <= by + 1e-12


def test_amplitude_bound_value():
    assert amplitude_bound(PrimeSum(3)) == (pytest.approx(31 / 30), pytest.approx(31 / 30))


def test_alternating_consistency():
    t = np.linspace(0, 7, 200)
    odd = split_alternating(first_n_primes(80)).odd_indexed
    x_ref = sum(np.sin(p * t) / p for p in odd)
    x, _ = evaluate(AlternatingPrimeSum(40), t)
    assert np.allclose(x, x_ref, atol=1e-14)


def test_warp_keeps_prime_normalisation():
    t = 0.9
    p = np.array(first_n_primes(6).values, dtype=float)
    x_ref = float(np.sum(np.sin(np.log(p) * t) / p))
    y_ref = float(np.sum(np.cos(np.log(p) * t) / p))
    pt = eval_point(PrimeSum(6, Logarithmic()), t)
    assert pt.x == pytest.approx(x_ref, abs=1e-15)
    assert pt.y == pytest.approx(y_ref, abs=1e-15)


@pytest.mark.parametrize(
    "make",
    [
        lambda: Classic(0, 1),
        lambda: Classic(1, math.inf),
        lambda: Classic(1, 1, math.nan),
        lambda: PrimeSum(0),
        lambda: PrimeSum(2.5),
        lambda: AlternatingPrimeSum(-1),
        lambda: PowerLaw(0.0),
        lambda: PowerLaw(math.nan),
    ],
)
def test_invalid_specs(make):
    with pytest.raises(ValueError):
        make()


@pytest.mark.parametrize("spec", [Classic(3, 4, math.pi / 4), PrimeSum(150), AlternatingPrimeSum(80)], ids=repr)
@pytest.mark.parametrize("order", [0, 1, 2])
def test_lattice_matches_direct(spec, order):
    t0 = 0.37
    size = 2048
    t = t0 + TWO_PI * np.arange(size) / size
    lx, ly = eval_lattice(spec, t0, size, order)
    dx, dy = evaluate(spec, t, order)
    scale = max_frequency(spec) ** order
    assert np.max(np.abs(lx - dx)) <= 1e-12 * scale * 10
    assert np.max(np.abs(ly - dy)) <= 1e-12 * scale * 10


def test_lattice_requires_integer_frequencies():
    with pytest.raises(ValueError):
        eval_lattice(PrimeSum(3, SquareRoot()), 0.0, 64)


def test_factored_path_matches_termwise_sum():
    # 400 terms crosses the threshold for the factored complex sum
    spec = PrimeSum(400)
    t = np.random.default_rng(3).uniform(0, TWO_PI, 50)
    primes = reference_primes(400)
    x_ref, y_ref = prime_sum_xy(primes, primes, t)
    x, y = evaluate(spec, t)
    assert np.max(np.abs(x - x_ref)) <= 1e-12
    assert np.max(np.abs(y - y_ref)) <= 1e-12


def test_specs_are_hashable_and_immutable():
    spec = PrimeSum(5)
    assert hash(spec) == hash(PrimeSum(5))
    with pytest.raises(AttributeError):
        spec.n = 6
