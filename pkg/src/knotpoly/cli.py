"""Command-line entry point: ``knotpoly <command> [options]``.

Exit status is 0 on success, 1 when a verification check or computation
fails, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cache
from .errors import InvalidParameter, KnotPolyError
from .jones import family_index, machine_form
from .locus import DEFAULT_EPS, REFINE_STEPS, Region, emit, find_zeros, flagged, scan_locus, to_csv, to_svg
from .spectra import arc_endpoints, segment_endpoints
from .verify import SUITES, run_suite

COMMANDS = ("tutte", "jones", "zeros", "locus", "endpoints", "verify")
NEEDS_M = ("tutte", "jones", "zeros")
FORMATS = ("text", "csv", "svg", "machine")
DEFAULT_REGION = (-2.0, 3.0, -2.0, 2.0)


@dataclass(frozen=True)
class RunConfig:
    command: str
    m: int | None = None
    region: Region = Region(*DEFAULT_REGION)
    grid: int = 400
    eps: float = DEFAULT_EPS
    refine: int = REFINE_STEPS
    out: Path | None = None
    svg: Path | None = None
    fmt: str = "text"
    cache_dir: Path | None = None
    suite: str = "all"
    verbose: bool = False


class UsageError(Exception):
    pass


def validate(cfg: RunConfig) -> None:
    if cfg.command not in COMMANDS:
        raise UsageError(f"unknown command {cfg.command!r}")
    if cfg.command in NEEDS_M and cfg.m is None:
        raise UsageError(f"--m is required for {cfg.command}")
    if cfg.m is not None and cfg.m < 1:
        raise UsageError(f"--m must be a positive integer, got {cfg.m}")
    if cfg.grid < 2:
        raise UsageError(f"--grid must be at least 2, got {cfg.grid}")
    if not cfg.eps > 0:
        raise UsageError(f"--eps must be positive, got {cfg.eps}")
    if cfg.refine < 0:
        raise UsageError(f"--refine must be non-negative, got {cfg.refine}")
    if cfg.fmt not in FORMATS:
        raise UsageError(f"--format must be one of {FORMATS}")
    if cfg.suite != "all" and cfg.suite not in SUITES:
        raise UsageError(f"--suite must be one of {tuple(SUITES) + ('all',)}")


def _cplx(z: complex) -> str:
    return f"{z.real:.17g} {z.imag:+.17g}i"


def _cmd_tutte(cfg: RunConfig, out) -> int:
    poly = cache.fetch("tutte", cfg.m, cfg.cache_dir)
    if cfg.fmt == "machine":
        terms = [[ex, ey, str(c)] for (ex, ey), c in poly.sorted_terms()]
        out.write(json.dumps({"m": cfg.m, "terms": terms}) + "\n")
    else:
        out.write(f"T(S_{cfg.m},x,y) = {poly.to_text()}\n")
    return 0


def _cmd_jones(cfg: RunConfig, out) -> int:
    idx = family_index(cfg.m)
    v = cache.fetch("jones", cfg.m, cfg.cache_dir)
    if cfg.fmt == "machine":
        doc = {"m": idx.m, "r": idx.r, "writhe": idx.writhe, "pt": idx.pt_power,
               "terms": [[e, c] for e, c in machine_form(v)],
               "mirror_terms": [[e, c] for e, c in machine_form(v.invert_t())]}
        out.write(json.dumps(doc) + "\n")
        return 0
    if cfg.verbose:
        out.write(f"# m={idx.m} r={idx.r} writhe={idx.writhe} pt={idx.pt_power}\n")
        if idx.prefactor_conjectural:
            out.write("# prefactor per conjectured mod-5 rule\n")
    out.write(f"V(R(H_{idx.r}),t) = {v.to_text()}\n")
    out.write(f"V(H_{idx.r},t) = {v.invert_t().to_text()}\n")
    return 0


def _emit_points(obj, cfg: RunConfig, out, region: Region | None) -> None:
    if cfg.svg is not None:
        emit(obj, "svg", cfg.svg, region)
    if cfg.out is not None:
        emit(obj, "svg" if cfg.fmt == "svg" else "csv", cfg.out, region)
    elif cfg.fmt == "svg":
        out.write(to_svg(obj, region))
    elif cfg.fmt in ("csv", "machine"):
        out.write(to_csv(obj))


def _cmd_zeros(cfg: RunConfig, out) -> int:
    zs = find_zeros(cfg.m)
    if cfg.fmt == "text" and cfg.out is None:
        out.write(f"# m={zs.m} r={zs.r} zeros={len(zs.zeros)} max_residual={max(zs.residuals):.3g}\n")
        for z in zs.zeros:
            out.write(_cplx(z) + "\n")
    _emit_points(zs, cfg, out, None)
    return 0


def _cmd_locus(cfg: RunConfig, out) -> int:
    samples = scan_locus(cfg.region, cfg.grid, cfg.eps, cfg.refine)
    hits = flagged(samples)
    if cfg.fmt == "text" and cfg.out is None:
        nref = sum(s.refined for s in samples)
        out.write(f"# samples={len(samples)} refined={nref} flagged={len(hits)} eps={cfg.eps:g}\n")
        for s in hits:
            pair = "/".join(s.dominant_pair)
            out.write(f"{_cplx(s.t)} gap={s.gap:.3e} {pair}\n")
    _emit_points(hits, cfg, out, cfg.region)
    return 0


def _cmd_endpoints(cfg: RunConfig, out) -> int:
    arcs = arc_endpoints()
    seg = segment_endpoints()
    rows = []
    names = ("A_o", "A_o*", "A_i", "A_i*", "H_o", "H_o*", "H_i", "H_i*")
    for name, z in zip(names, arcs.r1_zeros):
        rows.append(("R1 zero " + name, z))
    rows.append(("circle arc", arcs.circle_arc))
    rows.append(("circle arc*", arcs.circle_arc.conjugate()))
    rows.append(("segment outer", complex(seg.outer)))
    rows.append(("segment inner", complex(seg.inner)))
    if cfg.fmt == "machine":
        doc = [{"name": n, "re": z.real, "im": z.imag} for n, z in rows]
        doc.append({"name": "circle arc angle (deg)", "value": arcs.circle_arc_angle_deg})
        out.write(json.dumps(doc) + "\n")
        return 0
    for n, z in rows:
        out.write(f"{n:<16} {z.real:+.10f} {z.imag:+.10f}i  |t|={abs(z):.10f}\n")
    out.write(f"{'circle arc angle':<16} {arcs.circle_arc_angle_deg:.6f} deg\n")
    return 0


def _cmd_verify(cfg: RunConfig, out) -> int:
    results = run_suite(cfg.suite)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


_DISPATCH = {
    "tutte": _cmd_tutte,
    "jones": _cmd_jones,
    "zeros": _cmd_zeros,
    "locus": _cmd_locus,
    "endpoints": _cmd_endpoints,
    "verify": _cmd_verify,
}


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        validate(cfg)
        return _DISPATCH[cfg.command](cfg, out)
    except (UsageError, InvalidParameter) as exc:
        err.write(f"knotpoly: error: {exc}\n")
        return 2
    except KnotPolyError as exc:
        err.write(f"knotpoly: {type(exc).__name__}: {exc}\n")
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knotpoly", description="Tutte and Jones polynomials of the S_m / H_r family.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--m", type=int)
    p.add_argument("--re-min", type=float, default=DEFAULT_REGION[0])
    p.add_argument("--re-max", type=float, default=DEFAULT_REGION[1])
    p.add_argument("--im-min", type=float, default=DEFAULT_REGION[2])
    p.add_argument("--im-max", type=float, default=DEFAULT_REGION[3])
    p.add_argument("--grid", type=int, default=400, help="intervals per side of the locus grid")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS, help="dominance-gap threshold")
    p.add_argument("--refine", type=int, default=REFINE_STEPS, help="bisection steps per crossing")
    p.add_argument("--out", type=Path)
    p.add_argument("--svg", type=Path)
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    p.add_argument("--cache", dest="cache_dir", type=Path, default=None)
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--verbose", action="store_true")
    return p


def config_from_args(argv=None) -> RunConfig:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        region = Region(a.re_min, a.re_max, a.im_min, a.im_max)
    except InvalidParameter as exc:
        parser.error(f"--re-min/--re-max/--im-min/--im-max: {exc}")
    cfg = RunConfig(
        command=a.command, m=a.m, region=region, grid=a.grid, eps=a.eps, refine=a.refine,
        out=a.out, svg=a.svg, fmt=a.fmt, cache_dir=a.cache_dir or cache.default_cache_dir(),
        suite=a.suite, verbose=a.verbose,
    )
    try:
        validate(cfg)
    except UsageError as exc:
        parser.error(str(exc))
    return cfg


def main(argv=None) -> int:
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
