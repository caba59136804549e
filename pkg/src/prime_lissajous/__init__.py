"""Lissajous curves whose frequencies are consecutive primes, plus Ulam spirals."""

from .curves import (
    IDENTITY,
    AlternatingPrimeSum,
    Classic,
    CurvePoint,
    CurveVelocity,
    Identity,
    Logarithmic,
    PowerLaw,
    PrimeSum,
    SquareRoot,
    eval_point,
    eval_velocity,
    period,
)
from .geometry import (
    GeometrySummary,
    QuadratureConfig,
    QuadratureError,
    SingularPointError,
    arc_length,
    bounding_box,
    curvature,
    mirror_asymmetry,
    summarize,
    trace_distance,
)
from .primes import AlternatingSplit, PrimeSequence, first_n_primes, is_prime, split_alternating
from .render import RenderStyle, emit_csv, emit_svg, read_csv
from .sampling import Polyline, default_sample_count, sample_curve
from .ulam import SpiralCell, SpiralRaster, build_raster, emit_spiral_pgm, spiral_coord

__version__ = "0.1.0"
