"""Ulam square spiral: integer placement, prime mask and PGM output.

Convention: 1 sits at the origin, 2 one step right, then the walk turns
counterclockwise with run lengths 1, 1, 2, 2, 3, 3, ... Odd squares (2k+1)^2
land on the lower-right diagonal at (k, -k).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .primes import sieve


class SpiralCell(NamedTuple):
    n: int
    gx: int
    gy: int
    prime: bool


def spiral_coord(n: int) -> tuple[int, int]:
    """Grid position of ``n`` in O(1) from its ring and offset along the ring."""
    n = int(n)
    if n < 1:
        raise ValueError(f"spiral positions start at 1, got {n}")
    k = (math.isqrt(n - 1) + 1) // 2  # ring index: (2k-1)^2 < n <= (2k+1)^2
    if k == 0:
        return 0, 0
    d = (2 * k + 1) ** 2 - n  # steps back from the ring's last cell (k, -k)
    if d < 2 * k:
        return k - d, -k
    if d < 4 * k:
        return -k, -k + (d - 2 * k)
    if d < 6 * k:
        return -k + (d - 4 * k), k
    return k, k - (d - 6 * k)


def spiral_number(gx, gy):
    """Inverse of ``spiral_coord``; vectorised over numpy arrays."""
    gx = np.asarray(gx, dtype=np.int64)
    gy = np.asarray(gy, dtype=np.int64)
    k = np.maximum(np.abs(gx), np.abs(gy))
    d = np.select(
        [(gy == -k) & (gx > -k), (gx == -k) & (gy < k), (gy == k) & (gx < k)],
        [k - gx, 3 * k + gy, 5 * k + gx],
        default=7 * k - gy,
    )
    return (2 * k + 1) ** 2 - d


@dataclass(frozen=True, eq=False)
class SpiralRaster:
    """``numbers[row, col]`` holds the integer at gx = col - h, gy = h - row, h = (side-1)/2.

    Row 0 is the top of the picture (largest gy).
    """

    side: int
    numbers: np.ndarray
    prime: np.ndarray

    @property
    def half(self) -> int:
        return (self.side - 1) // 2

    def cell(self, gx: int, gy: int) -> SpiralCell:
        row, col = self.half - gy, gx + self.half
        return SpiralCell(int(self.numbers[row, col]), gx, gy, bool(self.prime[row, col]))

    @property
    def cells(self) -> list[list[SpiralCell]]:
        h = self.half
        return [[self.cell(c - h, h - r) for c in range(self.side)] for r in range(self.side)]

    @property
    def prime_count(self) -> int:
        return int(self.prime.sum())


def build_raster(side: int) -> SpiralRaster:
    if int(side) != side or side < 1 or side % 2 == 0:
        raise ValueError(f"spiral raster side must be an odd positive integer, got {side}")
    side = int(side)
    h = (side - 1) // 2
    gy, gx = np.mgrid[h : -h - 1 : -1, -h : h + 1]
    numbers = spiral_number(gx, gy)
    mask = sieve(side * side)[numbers]
    numbers.flags.writeable = False
    mask.flags.writeable = False
    return SpiralRaster(side, numbers, mask)


def emit_spiral_pgm(r: SpiralRaster, path: str | os.PathLike) -> None:
    """Binary P5 greymap: primes black (0), everything else white (255)."""
    pixels = np.where(r.prime, 0, 255).astype(np.uint8)
    header = f"P5\n{r.side} {r.side}\n255\n".encode("ascii")
    try:
        with open(path, "wb") as fh:
            fh.write(header + pixels.tobytes())
    except OSError as exc:
        raise OSError(f"writing PGM to {os.fspath(path)!r} failed: {exc}") from exc


def prime_cells(r: SpiralRaster) -> list[SpiralCell]:
    h = r.half
    rows, cols = np.nonzero(r.prime)
    return [SpiralCell(int(r.numbers[i, j]), int(j - h), int(h - i), True) for i, j in zip(rows, cols)]

