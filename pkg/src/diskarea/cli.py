"""Command-line front end: area sweeps, verification suites, kernel benchmarks.

Exit codes: 0 all checks passed, 1 any check failed, 2 any check
inconclusive, 64 usage error.  Reports are CSV (default) or JSON lines;
repeated runs of the same config are byte-identical apart from the
wall-time column.  The output directory for relative paths can be pinned
with the DISKAREA_OUTDIR environment variable.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time

import numpy as np

from . import pair_sums
from .area import area_kernel, area_kernel_fft
from .circle_maps import TWO_PI, eval_lift, make_random_homeomorphism, mollify_map
from .runner import (
    AREA_COLUMNS,
    SUITES,
    VERIFY_COLUMNS,
    ConfigError,
    SweepConfig,
    exit_code_for,
    format_csv,
    format_jsonl,
    parse_seed_range,
    run_area,
    run_suite,
)

USAGE_EXIT = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x]


def build_parser() -> _Parser:
    parser = _Parser(prog="diskarea", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_area = sub.add_parser("area", help="compute image areas of concentric disks")
    p_area.add_argument("--family", action="append", required=True,
                        help="identity | rotation:phi | mobius:a | shear:c | random:seeds:roughness | step:j1,j2@v1,v2")
    p_area.add_argument("--r", required=True, help="comma-separated radii in (0, 0.97]")
    p_area.add_argument("--method", default="green-spectral",
                        help="comma-separated: green-spectral,green-quadrature,kernel-direct,kernel-fft,jacobian,exact")
    p_area.add_argument("--resolution", type=int, default=1024)
    p_area.add_argument("--order", type=int, default=512)
    p_area.add_argument("--conjugate", action="store_true",
                        help="analyze conj(f(conj(z))) of each family instance (orientation-reversing input)")
    p_area.add_argument("--workers", type=int, default=4)
    p_area.add_argument("--out", default=None)
    p_area.add_argument("--format", choices=("csv", "jsonl"), default="csv")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}")
    p_verify.add_argument("--seeds", default="0..99", help="seed range for the random corpus, e.g. 0..99")
    p_verify.add_argument("--radii", default="0.25,0.5,0.75,0.9")
    p_verify.add_argument("--r", type=float, default=None, help="single radius shorthand")
    p_verify.add_argument("--mollify", default=None,
                          help="comma-separated smoothing widths (default 2pi/32,2pi/64,2pi/128)")
    p_verify.add_argument("--family", action="append", default=None,
                          help="override the corpus for family-specific suites (e.g. shear:0.3 for convexity)")
    p_verify.add_argument("--order", type=int, default=512)
    p_verify.add_argument("--tol", action="append", default=[],
                          help="check_name=value tolerance override; repeatable")
    p_verify.add_argument("--conjugate", action="store_true")
    p_verify.add_argument("--workers", type=int, default=4)
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--format", choices=("csv", "jsonl"), default="csv")

    p_bench = sub.add_parser("bench", help="time the direct and FFT kernel paths")
    p_bench.add_argument("--sizes", default="256,1024,4096")
    p_bench.add_argument("--r", type=float, default=0.6)
    p_bench.add_argument("--seed", type=int, default=7)
    p_bench.add_argument("--repeat", type=int, default=3)
    p_bench.add_argument("--out", default=None)
    p_bench.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    return parser


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    if not os.path.isabs(out):
        out = os.path.join(os.environ.get("DISKAREA_OUTDIR", "."), out)
    os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
    with open(out, "w") as fh:
        fh.write(text)
    print(f"wrote {out}")


def _cmd_area(args) -> int:
    config = SweepConfig(
        families=args.family,
        radii=_parse_floats(args.r),
        methods=[m for m in args.method.split(",") if m],
        resolution=args.resolution,
        order=args.order,
        conjugate=args.conjugate,
        workers=args.workers,
    )
    rows = run_area(config)
    text = format_csv(rows, AREA_COLUMNS) if args.format == "csv" else format_jsonl(rows)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    radii = [args.r] if args.r is not None else _parse_floats(args.radii)
    tolerances = {}
    for item in args.tol:
        name, _, value = item.partition("=")
        if not value:
            raise ConfigError(f"bad tolerance override {item!r}; expected check=value")
        tolerances[name] = float(value)
    config = SweepConfig(
        families=args.family or [],
        radii=radii,
        seeds=parse_seed_range(args.seeds),
        mollify=_parse_floats(args.mollify) if args.mollify else [TWO_PI / 32, TWO_PI / 64, TWO_PI / 128],
        order=args.order,
        tolerances=tolerances,
        conjugate=args.conjugate,
        workers=args.workers,
    )
    if args.suite == "convexity" and args.family:
        spec = args.family[0]
        if not spec.startswith("shear:"):
            raise ConfigError("convexity --family expects shear:<c>")
        from .runner import run_convexity_suite

        rows = run_convexity_suite(config, complex(spec.split(":", 1)[1]))
    else:
        rows = run_suite(args.suite, config)
    text = format_csv(rows, VERIFY_COLUMNS) if args.format == "csv" else format_jsonl(rows)
    _emit(text, args.out)
    counts = {"true": 0, "false": 0, "inconclusive": 0}
    for row in rows:
        counts[row["passed"]] += 1
    print(
        f"suite={args.suite} checks={len(rows)} passed={counts['true']} "
        f"failed={counts['false']} inconclusive={counts['inconclusive']}",
        file=sys.stderr,
    )
    return exit_code_for(rows)


BENCH_COLUMNS = ("schema", "map_id", "r", "method", "resolution", "value", "rel_diff_vs_fft", "wall_time_ms")


def _cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",") if x]
    bmap = mollify_map(make_random_homeomorphism(args.seed, roughness=0.5))
    map_id = f"random:{args.seed}:0.5|moll"
    rows = []
    failures = 0
    for m in sizes:
        t = np.arange(m) * (TWO_PI / m)
        xi = eval_lift(bmap, t)
        kern = area_kernel(args.r, t)
        timed = []
        for backend, impl in sorted(pair_sums.implementations().items()):
            best = math.inf
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                raw = impl.sin_pair_sum(kern, xi)
                best = min(best, time.perf_counter() - t0)
            timed.append((f"kernel-direct[{backend}]", (math.pi / (m * m)) * raw, best))
        best = math.inf
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            est = area_kernel_fft(bmap, args.r, m)
            best = min(best, time.perf_counter() - t0)
        timed.append(("kernel-fft", est.value, best))
        ref = est.value
        for name, value, seconds in timed:
            rel = abs(value - ref) / max(abs(ref), 1e-300)
            if rel > 1e-10:
                print(f"M={m}: {name} disagrees with kernel-fft by {rel:.2e}", file=sys.stderr)
                failures += 1
            rows.append(
                {
                    "schema": 1,
                    "map_id": map_id,
                    "r": args.r,
                    "method": name,
                    "resolution": m,
                    "value": value,
                    "rel_diff_vs_fft": rel,
                    "wall_time_ms": round(seconds * 1e3, 3),
                }
            )
    text = format_csv(rows, BENCH_COLUMNS) if args.format == "csv" else format_jsonl(rows)
    _emit(text, args.out)
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "area":
            return _cmd_area(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "bench":
            return _cmd_bench(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except (_UsageError, ConfigError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
