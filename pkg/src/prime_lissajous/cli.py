"""Command-line front end.

Every successful command prints one ``key=value`` summary line per artifact to
stdout; diagnostics go to stderr. Exit status: 0 ok, 1 runtime/I-O failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
from typing import Optional, Sequence, TextIO

from .curves import (
    IDENTITY,
    TWO_PI,
    AlternatingPrimeSum,
    Classic,
    CurveSpec,
    Logarithmic,
    PowerLaw,
    PrimeSum,
    SquareRoot,
)
from .geometry import QuadratureConfig, QuadratureError, arc_length, summarize
from .render import RenderStyle, emit_csv, emit_svg
from .sampling import default_sample_count, sample_curve
from .ulam import build_raster, emit_spiral_pgm

# default sample counts above this need --big (or an explicit --samples)
BIG_SAMPLE_LIMIT = 500_000
# sample count used for gated curves when reproduce_all runs without --big
PREVIEW_SAMPLES = (1 << 16) + 1
ULAM_FIGURE_SIDE = 201
DEFAULT_SIMPLIFY_PX = 0.1

_ANGLE = re.compile(r"^([+-]?)(\d+(?:\.\d*)?)?\*?pi(?:/(\d+(?:\.\d*)?))?$")


class UsageError(Exception):
    pass


def parse_angle(text: str) -> float:
    """Radians as a decimal, or a multiple of pi such as ``pi/2``, ``-pi/4``, ``3*pi/4``."""
    s = text.strip().lower().replace(" ", "")
    m = _ANGLE.match(s)
    if m:
        sign, num, den = m.groups()
        value = (float(num) if num else 1.0) * math.pi / (float(den) if den else 1.0)
        return -value if sign == "-" else value
    try:
        value = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite: {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {v}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"must be finite and positive, got {text}")
    return v


def _odd_int(text: str) -> int:
    v = _positive_int(text)
    if v % 2 == 0:
        raise argparse.ArgumentTypeError(f"side must be odd, got {v}")
    return v


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _record(out: TextIO, **fields) -> None:
    out.write(" ".join(f"{k}={_fmt(v)}" for k, v in fields.items()) + "\n")


# -- parser ------------------------------------------------------------------


def _curve_options(p: argparse.ArgumentParser, family: Optional[str]) -> None:
    if family in (None, "classic"):
        p.add_argument("--a", type=_positive_float, default=1.0, help="x frequency")
        p.add_argument("--b", type=_positive_float, default=1.0, help="y frequency")
        p.add_argument("--delta", type=parse_angle, default=0.0, help="x phase (radians, or pi/2 style)")
    if family in (None, "primesum"):
        p.add_argument("--n", type=_positive_int, default=100, help="number of prime terms (per axis for altprimesum)")
        p.add_argument("--warp", choices=("identity", "log", "sqrt", "power"), default="identity")
        p.add_argument("--exponent", type=_positive_float, default=1.0, help="power-law warp exponent")


def _render_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="SVG output path")
    p.add_argument("--csv", help="CSV output path (t,x,y)")
    p.add_argument("--samples", type=_positive_int, help="sample count (default scales with max frequency)")
    p.add_argument("--big", action="store_true", help=f"allow default sample counts above {BIG_SAMPLE_LIMIT}")
    p.add_argument("--width", type=_positive_int, default=1000)
    p.add_argument("--height", type=_positive_int, default=1000)
    p.add_argument("--stroke", type=_positive_float, default=1.0)
    p.add_argument("--margin", type=float, default=0.05)
    p.add_argument("--simplify", type=float, default=DEFAULT_SIMPLIFY_PX,
                   help="SVG decimation tolerance in pixels (0 disables)")


def _quad_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rel-tol", type=_positive_float, default=1e-9)
    p.add_argument("--abs-tol", type=_positive_float, default=1e-12)
    p.add_argument("--max-subdivisions", type=_positive_int, default=1 << 24)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prime-lissajous",
        description="Lissajous curves with prime-number frequencies, and Ulam spirals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classic", help="x = sin(a t + delta), y = cos(b t)")
    _curve_options(p, "classic")
    _render_options(p)

    for name, text in (("primesum", "sums over the first n primes"),
                       ("altprimesum", "x over odd-position primes, y over even-position primes")):
        p = sub.add_parser(name, help=text)
        _curve_options(p, "primesum")
        _render_options(p)

    p = sub.add_parser("ulam", help="Ulam spiral as a PGM greymap")
    p.add_argument("--side", type=_odd_int, default=ULAM_FIGURE_SIDE)
    p.add_argument("--out", required=True)

    p = sub.add_parser("length", help="arc length over [t0, t1]")
    p.add_argument("--spec", choices=("classic", "primesum", "altprimesum"), required=True)
    _curve_options(p, None)
    p.add_argument("--t0", type=parse_angle, default=0.0)
    p.add_argument("--t1", type=parse_angle, default=TWO_PI)
    _quad_options(p)

    p = sub.add_parser("metrics", help="length, bounding box, curvature peak, mirror asymmetry")
    p.add_argument("--spec", choices=("classic", "primesum", "altprimesum"), required=True)
    _curve_options(p, None)
    p.add_argument("--samples", type=_positive_int)
    p.add_argument("--big", action="store_true")
    _quad_options(p)

    p = sub.add_parser("reproduce", help="regenerate every figure into a directory")
    p.add_argument("outdir")
    p.add_argument("--big", action="store_true", help="full sample density for the 5000-prime panel")
    return parser


# -- dispatch ----------------------------------------------------------------


def _warp(args):
    if args.warp == "identity":
        return IDENTITY
    if args.warp == "log":
        return Logarithmic()
    if args.warp == "sqrt":
        return SquareRoot()
    return PowerLaw(args.exponent)


def _spec(family: str, args) -> CurveSpec:
    if family == "classic":
        return Classic(args.a, args.b, args.delta)
    if family == "primesum":
        return PrimeSum(args.n, _warp(args))
    return AlternatingPrimeSum(args.n, _warp(args))


def _spec_fields(spec: CurveSpec) -> dict:
    if isinstance(spec, Classic):
        return {"spec": "classic", "a": spec.a, "b": spec.b, "delta": spec.delta}
    fields = {"spec": "primesum" if isinstance(spec, PrimeSum) else "altprimesum", "n": spec.n,
              "warp": spec.warp.label}
    if isinstance(spec.warp, PowerLaw):
        fields["exponent"] = spec.warp.exponent
    return fields


def _sample_count(spec: CurveSpec, args) -> int:
    if args.samples is not None:
        if args.samples < 2:
            raise UsageError("--samples must be at least 2")
        return args.samples
    count = default_sample_count(spec)
    if count > BIG_SAMPLE_LIMIT and not args.big:
        raise UsageError(f"default sample count {count} exceeds {BIG_SAMPLE_LIMIT}; pass --big or --samples")
    return count


def _quad(args) -> QuadratureConfig:
    return QuadratureConfig(args.rel_tol, args.abs_tol, args.max_subdivisions)


def _summary_fields(summary) -> dict:
    xmin, xmax, ymin, ymax = summary.bbox
    return {"length": summary.length, "xmin": xmin, "xmax": xmax, "ymin": ymin, "ymax": ymax,
            "max_abs_curvature": summary.max_abs_curvature, "asymmetry": summary.asymmetry}


def _cmd_render(args, out: TextIO) -> int:
    spec = _spec(args.command, args)
    if not 0.0 <= args.margin <= 0.45:
        raise UsageError("--margin must lie in [0, 0.45]")
    if args.simplify < 0:
        raise UsageError("--simplify must be non-negative")
    count = _sample_count(spec, args)
    line = sample_curve(spec, 0.0, TWO_PI, count)
    style = RenderStyle(args.width, args.height, args.stroke, args.margin, args.simplify)
    if args.out:
        emit_svg(line, style, args.out)
    if args.csv:
        emit_csv(line, args.csv)
    _record(out, **_spec_fields(spec), samples=count, closed=line.closed,
            svg=args.out or "-", csv=args.csv or "-")
    return 0


def _cmd_ulam(args, out: TextIO) -> int:
    raster = build_raster(args.side)
    emit_spiral_pgm(raster, args.out)
    _record(out, side=raster.side, cells=raster.side**2, primes=raster.prime_count, pgm=args.out)
    return 0


def _cmd_length(args, out: TextIO) -> int:
    spec = _spec(args.spec, args)
    if not args.t0 < args.t1:
        raise UsageError("--t0 must be smaller than --t1")
    length = arc_length(spec, args.t0, args.t1, _quad(args))
    _record(out, length=length, **_spec_fields(spec), t0=args.t0, t1=args.t1)
    return 0


def _cmd_metrics(args, out: TextIO) -> int:
    spec = _spec(args.spec, args)
    count = _sample_count(spec, args)
    line = sample_curve(spec, 0.0, TWO_PI, count)
    summary = summarize(spec, line, _quad(args))
    _record(out, **_spec_fields(spec), samples=count, **_summary_fields(summary))
    return 0


FIGURE_CURVES: tuple[tuple[str, CurveSpec], ...] = (
    ("fig2a_classic.svg", Classic(1, 2, math.pi / 2)),
    ("fig2b_classic.svg", Classic(3, 2, math.pi / 2)),
    ("fig2c_classic.svg", Classic(3, 4, math.pi / 4)),
    ("fig3a_primesum_100.svg", PrimeSum(100)),
    ("fig3b_primesum_1000.svg", PrimeSum(1000)),
    ("fig3c_primesum_5000.svg", PrimeSum(5000)),
    ("fig4a_altprimesum_100.svg", AlternatingPrimeSum(100)),
    ("fig4b_altprimesum_1000.svg", AlternatingPrimeSum(1000)),
)
ULAM_FIGURE = "fig1_ulam.pgm"


def reproduce_all(outdir: str | os.PathLike, big: bool = False, out: TextIO = sys.stdout) -> int:
    """Write the eight curve panels and the spiral raster, printing one manifest line each.

    Without ``big``, panels whose default sample count exceeds ``BIG_SAMPLE_LIMIT``
    are drawn from ``PREVIEW_SAMPLES`` points; their arc length is unaffected.
    """
    style = RenderStyle(simplify_px=DEFAULT_SIMPLIFY_PX)
    try:
        os.makedirs(outdir, exist_ok=True)
        for name, spec in FIGURE_CURVES:
            count = default_sample_count(spec)
            if count > BIG_SAMPLE_LIMIT and not big:
                count = PREVIEW_SAMPLES
            line = sample_curve(spec, 0.0, TWO_PI, count)
            path = os.path.join(outdir, name)
            emit_svg(line, style, path)
            summary = summarize(spec, line)
            _record(out, file=name, **_spec_fields(spec), samples=count, **_summary_fields(summary))
        raster = build_raster(ULAM_FIGURE_SIDE)
        emit_spiral_pgm(raster, os.path.join(outdir, ULAM_FIGURE))
        _record(out, file=ULAM_FIGURE, side=raster.side, primes=raster.prime_count)
    except (OSError, QuadratureError) as exc:
        print(f"prime-lissajous: {exc}", file=sys.stderr)
        return 1
    return 0


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "classic": _cmd_render,
        "primesum": _cmd_render,
        "altprimesum": _cmd_render,
        "ulam": _cmd_ulam,
        "length": _cmd_length,
        "metrics": _cmd_metrics,
    }
    if args.command == "reproduce":
        return reproduce_all(args.outdir, args.big, out)
    try:
        return handlers[args.command](args, out)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"prime-lissajous {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, QuadratureError) as exc:
        print(f"prime-lissajous {args.command}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
