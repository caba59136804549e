"""Independent reference computations used by the tests.

Nothing here imports the package: primes come from sympy or trial division,
curve positions from a plain per-term loop, the spiral from an explicit walk.
"""

import math

import numpy as np
import sympy


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def trial_division_mask(limit):
    """Vectorised trial division by every d <= sqrt(limit)."""
    n = np.arange(limit + 1)
    composite = n < 2
    for d in range(2, math.isqrt(limit) + 1):
        composite |= (n % d == 0) & (n != d)
    return ~composite


def reference_primes(n):
    return [int(sympy.prime(i)) for i in range(1, n + 1)] if n <= 200 else list(
        sympy.primerange(2, int(sympy.prime(n)) + 1)
    )


def prime_sum_xy(primes_x, primes_y, t):
    """x = sum sin(p t)/p, y = sum cos(p t)/p, one term at a time."""
    t = np.asarray(t, dtype=float)
    x = np.zeros_like(t)
    y = np.zeros_like(t)
    for p in primes_x:
        x += np.sin(p * t) / p
    for p in primes_y:
        y += np.cos(p * t) / p
    return x, y


def classic_xy(a, b, delta, t):
    t = np.asarray(t, dtype=float)
    return np.sin(a * t + delta), np.cos(b * t)


def chord_length(xy_fn, t0, t1, start=1025, rel=1e-7, max_points=1 << 23):
    """Polyline length on k uniform points, k doubling until the change is below ``rel``."""

    def length(k):
        total = 0.0
        # stream in blocks to bound memory
        edges = np.linspace(t0, t1, k)
        for s in range(0, k, 1 << 18):
            block = edges[s : s + (1 << 18) + 1]
            x, y = xy_fn(block)
            total += float(np.hypot(np.diff(x), np.diff(y)).sum())
        return total

    k = start
    last = length(k)
    while k < max_points:
        k = 2 * (k - 1) + 1  # keep previous points, insert midpoints
        cur = length(k)
        if abs(cur - last) <= rel * abs(cur):
            return cur
        last = cur
    raise RuntimeError("chord oracle did not converge")


def spiral_walk(count):
    """Positions of 1..count by literally walking right, up, left, down with runs 1,1,2,2,..."""
    out = [(0, 0)]
    x = y = 0
    dirs = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    run, d = 1, 0
    while len(out) < count:
        for _ in range(2):
            dx, dy = dirs[d % 4]
            for _ in range(run):
                x += dx
                y += dy
                out.append((x, y))
                if len(out) == count:
                    return out
            d += 1
        run += 1
    return out


def brute_hausdorff(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = np.sqrt(((a[:, None, :] - b[None, :, :]) ** 2).sum(axis=2))
    return max(d.min(axis=1).max(), d.min(axis=0).max())
