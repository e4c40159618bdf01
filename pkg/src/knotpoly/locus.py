"""Zeros of V(H, t) at finite m and a grid approximation of their limit set.

The limit set is where two or more of the five lambdas share the largest
magnitude.  :func:`scan_locus` samples the dominance gap on a rectangle and
bisects every grid edge across which the dominant lambda changes identity,
so the output contains points on the curves themselves and not just grid
nodes that happen to fall within ``eps`` of them.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from .algebra import LaurentPoly
from .errors import InvalidParameter, IoFailure, ZeroArgument
from .jones import family_index, jones_H
from .rootfind import mp_relative_residual, polynomial_roots
from .spectra import LABELS, lambda_closed_form_batch, quartic_roots_batch

MAX_M = 200
DEFAULT_EPS = 1e-3
REFINE_STEPS = 20
# cells where a curve ends are resampled on a SUBDIVIDE x SUBDIVIDE sub-grid
SUBDIVIDE = 8
CONJ_TOL = 1e-8
SVG_SIZE = 800


@dataclass(frozen=True)
class ZeroSet:
    m: int
    r: int
    zeros: tuple[complex, ...]
    residuals: tuple[float, ...]

    def conjugation_defect(self) -> float:
        """Largest distance from a zero's conjugate to the nearest zero."""
        z = np.array(self.zeros)
        if z.size == 0:
            return 0.0
        d = np.abs(np.conj(z)[:, None] - z[None, :]).min(axis=1)
        return float(d.max())

    def negative_real(self) -> list[complex]:
        return [z for z in self.zeros if abs(z.imag) < CONJ_TOL and z.real < 0]

    def nearest(self, t0: complex) -> float:
        return min(abs(z - t0) for z in self.zeros)


def find_zeros(m: int) -> ZeroSet:
    """All 4m+2 zeros of V(H, t) for the m-th family member."""
    idx = family_index(m)
    if m > MAX_M:
        raise InvalidParameter(f"m={m} exceeds the practical limit {MAX_M}")
    v = jones_H(m)
    zeros = polynomial_roots(v)
    coeffs = v.coefficients()
    res = tuple(mp_relative_residual(coeffs, z) for z in zeros)
    return ZeroSet(m=m, r=idx.r, zeros=tuple(zeros), residuals=res)


def cube_root_norm(v: LaurentPoly) -> int:
    """|v(w)|^2 for w = e^{2 pi i/3}, exactly.

    Reduces exponents mod 3 to get ``a + b w`` and returns the norm
    ``a^2 - a b + b^2``.  Floating evaluation is useless here for large m
    because the terms reach 10^40 while the value is O(1).
    """
    s = [0, 0, 0]
    for e, c in v.items():
        s[e % 3] += c
    a, b = s[0] - s[2], s[1] - s[2]
    return a * a - a * b + b * b


def leja_order(zeros) -> list[complex]:
    """Greedy Leja ordering: each next point maximizes its product distance to the previous ones."""
    rest = list(zeros)
    if not rest:
        return []
    out = [rest.pop(int(np.argmax(np.abs(rest))))]
    logd = np.zeros(len(rest))
    while rest:
        logd += np.log(np.abs(np.array(rest) - out[-1]) + 1e-300)
        i = int(np.argmax(logd))
        out.append(rest.pop(i))
        logd = np.delete(logd, i)
    return out


def expand_roots(zeros, lead: int) -> np.ndarray:
    """Ascending coefficients of lead * prod (t - z) in floating point.

    Factors are multiplied in Leja order; the sorted order lets partial
    products grow by many orders of magnitude and loses all accuracy by
    degree ~200.
    """
    poly = np.array([complex(lead)])
    for z in leja_order(zeros):
        poly = np.concatenate([[0], poly]) - z * np.concatenate([poly, [0]])
    return poly


# --- dominance gap -----------------------------------------------------------


@dataclass(frozen=True)
class LocusSample:
    t: complex
    gap: float
    on_locus: bool
    refined: bool = False
    # labels of the two largest lambdas: "1" or a closed-form label
    dominant_pair: tuple[str, str] = field(default=("", ""), compare=False)


def _spectra(ts: np.ndarray) -> np.ndarray:
    """Five lambdas per point, shape (n, 5); lambda_1 = 1 in column 0.

    Points below the real axis are computed at the conjugate and conjugated
    back, so the scan is mirror-symmetric to the last bit.
    """
    ts = np.asarray(ts, dtype=complex).reshape(-1)
    lower = ts.imag < 0
    quart = quartic_roots_batch(np.where(lower, np.conj(ts), ts))
    quart = np.where(lower[:, None], np.conj(quart), quart)
    return np.concatenate([np.ones((ts.size, 1), dtype=complex), quart], axis=1)


def _gaps(lams: np.ndarray) -> np.ndarray:
    mags = np.sort(np.abs(lams), axis=1)
    return (mags[:, -1] - mags[:, -2]) / mags[:, -1]


def _dominant(lams: np.ndarray) -> np.ndarray:
    return lams[np.arange(lams.shape[0]), np.argmax(np.abs(lams), axis=1)]


def _pair_labels(ts: np.ndarray, lams: np.ndarray) -> list[tuple[str, str]]:
    if ts.size == 0:
        return []
    closed = lambda_closed_form_batch(ts)
    names = ("1",) + LABELS
    ref = np.concatenate([np.ones((ts.size, 1), dtype=complex), closed], axis=1)
    order = np.argsort(-np.abs(lams), axis=1)[:, :2]
    out = []
    for i in range(ts.size):
        pair = []
        for j in order[i]:
            k = int(np.argmin(np.abs(ref[i] - lams[i, j])))
            pair.append(names[k])
        out.append(tuple(pair))
    return out


def dominance_gap(t0: complex, eps: float = DEFAULT_EPS) -> LocusSample:
    """Relative gap between the two largest lambda magnitudes at ``t0``."""
    t0 = complex(t0)
    if t0 == 0:
        raise ZeroArgument("dominance gap undefined at t=0")
    ts = np.array([t0])
    lams = _spectra(ts)
    g = float(_gaps(lams)[0])
    return LocusSample(t0, g, g < eps, False, _pair_labels(ts, lams)[0])


def dominance_gap_batch(ts) -> np.ndarray:
    ts = np.asarray(ts, dtype=complex).reshape(-1)
    if np.any(ts == 0):
        raise ZeroArgument("dominance gap undefined at t=0")
    return _gaps(_spectra(ts))


# --- grid scan ---------------------------------------------------------------


@dataclass(frozen=True)
class Region:
    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise InvalidParameter(f"empty region {self}")

    def axis(self, lo: float, hi: float, n: int) -> np.ndarray:
        # (lo (n-k) + hi k) / n hits round values such as 0, 1, +-1 exactly
        # and is exactly antisymmetric when lo = -hi
        k = np.arange(n + 1)
        return (lo * (n - k) + hi * k) / n


def scan_locus(region: Region, n: int = 400, eps: float = DEFAULT_EPS,
               refine_steps: int = REFINE_STEPS) -> list[LocusSample]:
    """Dominance gap on an (n+1) x (n+1) node grid plus bisection refinements.

    Parameters
    ----------
    region : Region
    n : int
        Number of intervals per side.
    eps : float
        Membership threshold for ``on_locus``.
    refine_steps : int
        Bisection steps per crossing edge.

    Returns
    -------
    list of LocusSample
        Grid nodes in row-major order (imaginary part outer, ascending),
        skipping t = 0, then one refined sample per crossing edge in edge
        order, then refinements inside cells where a curve terminates.
    """
    if n < 2:
        raise InvalidParameter("grid must have at least 2 intervals")
    if not eps > 0:
        raise InvalidParameter("eps must be positive")
    xs = region.axis(region.re_min, region.re_max, n)
    ys = region.axis(region.im_min, region.im_max, n)
    grid = xs[None, :] + 1j * ys[:, None]
    flat = grid.reshape(-1)
    valid = flat != 0
    lams = np.zeros((flat.size, 5), dtype=complex)
    lams[valid] = _spectra(flat[valid])
    gaps = np.full(flat.size, np.inf)
    gaps[valid] = _gaps(lams[valid])
    dom = _dominant(lams)

    # grid edges (horizontal then vertical) whose endpoints have different dominant lambdas
    ids = np.arange(flat.size).reshape(n + 1, n + 1)
    a = np.concatenate([ids[:, :-1].ravel(), ids[:-1, :].ravel()])
    b = np.concatenate([ids[:, 1:].ravel(), ids[1:, :].ravel()])
    keep = valid[a] & valid[b]
    a, b = a[keep], b[keep]
    switched = _identity_changes(dom[a], lams[b], dom[b]) | _identity_changes(dom[b], lams[a], dom[a])
    a, b = a[switched], b[switched]
    refined = _bisect(flat[a], flat[b], dom[a], dom[b], refine_steps)
    ends = _terminal_cells(a, b, n)
    extra = [_refine_cell(xs, ys, j, i, refine_steps) for j, i in ends]

    rt = np.concatenate([refined] + extra)
    rlams = _spectra(rt) if rt.size else np.zeros((0, 5), dtype=complex)
    rgaps = _gaps(rlams) if rt.size else np.zeros(0)

    out_t = np.concatenate([flat[valid], rt])
    out_l = np.concatenate([lams[valid], rlams])
    out_g = np.concatenate([gaps[valid], rgaps])
    flags = out_g < eps
    labels = {}
    sel = np.nonzero(flags)[0]
    for i, lab in zip(sel, _pair_labels(out_t[sel], out_l[sel])):
        labels[i] = lab
    nv = int(valid.sum())
    return [
        LocusSample(complex(out_t[i]), float(out_g[i]), bool(flags[i]), i >= nv, labels.get(i, ("", "")))
        for i in range(out_t.size)
    ]


def _terminal_cells(a: np.ndarray, b: np.ndarray, n: int) -> list[tuple[int, int]]:
    """Cells crossed an odd number of times, i.e. where a curve stops."""
    counts = np.zeros((n, n), dtype=int)
    ra, ca = np.divmod(a, n + 1)
    rb, cb = np.divmod(b, n + 1)
    horiz = ra == rb
    for r, c, h in zip(ra, ca, horiz):
        if h:
            # edge (r, c)-(r, c+1) bounds the cells below and above it
            for cr in (r - 1, r):
                if 0 <= cr < n:
                    counts[cr, c] += 1
        else:
            for cc in (c - 1, c):
                if 0 <= cc < n:
                    counts[r, cc] += 1
    rows, cols = np.nonzero(counts % 2)
    return list(zip(rows.tolist(), cols.tolist()))


def _refine_cell(xs, ys, j: int, i: int, steps: int) -> np.ndarray:
    k = np.arange(SUBDIVIDE + 1)
    sx = (xs[i] * (SUBDIVIDE - k) + xs[i + 1] * k) / SUBDIVIDE
    sy = (ys[j] * (SUBDIVIDE - k) + ys[j + 1] * k) / SUBDIVIDE
    flat = (sx[None, :] + 1j * sy[:, None]).reshape(-1)
    if np.any(flat == 0):
        return np.zeros(0, dtype=complex)
    lams = _spectra(flat)
    dom = _dominant(lams)
    ids = np.arange(flat.size).reshape(SUBDIVIDE + 1, SUBDIVIDE + 1)
    a = np.concatenate([ids[:, :-1].ravel(), ids[:-1, :].ravel()])
    b = np.concatenate([ids[:, 1:].ravel(), ids[1:, :].ravel()])
    sw = _identity_changes(dom[a], lams[b], dom[b]) | _identity_changes(dom[b], lams[a], dom[a])
    a, b = a[sw], b[sw]
    return _bisect(flat[a], flat[b], dom[a], dom[b], steps)


def _identity_changes(dom_a: np.ndarray, lams_b: np.ndarray, dom_b: np.ndarray) -> np.ndarray:
    """True where the lambda continuing ``dom_a`` is not dominant at ``b``."""
    if dom_a.size == 0:
        return np.zeros(0, dtype=bool)
    follow = np.argmin(np.abs(lams_b - dom_a[:, None]), axis=1)
    cont = lams_b[np.arange(lams_b.shape[0]), follow]
    return cont != dom_b


def _bisect(ta, tb, da, db, steps: int) -> np.ndarray:
    """Locate the dominant-lambda switch on each segment [ta, tb].

    A midpoint belongs to whichever end its dominant lambda is closer to.
    """
    ta, tb = ta.copy(), tb.copy()
    da, db = da.copy(), db.copy()
    for _ in range(steps):
        if ta.size == 0:
            break
        mid = 0.5 * (ta + tb)
        dm = _dominant(_spectra(mid))
        left = np.abs(dm - da) <= np.abs(dm - db)
        ta = np.where(left, mid, ta)
        da = np.where(left, dm, da)
        tb = np.where(left, tb, mid)
        db = np.where(left, db, dm)
    return 0.5 * (ta + tb)


def flagged(samples) -> list[LocusSample]:
    return [s for s in samples if s.on_locus]


# --- output ------------------------------------------------------------------


def _points(obj):
    if isinstance(obj, ZeroSet):
        return [(z, None) for z in obj.zeros], False
    samples = list(obj)
    return [(s.t, s.gap) for s in samples], True


def to_csv(obj) -> str:
    """CSV text for a ZeroSet (``re,im``) or a list of samples (``re,im,gap``)."""
    pts, with_gap = _points(obj)
    lines = ["re,im,gap" if with_gap else "re,im"]
    for t, g in pts:
        row = f"{t.real:.17g},{t.imag:.17g}"
        if with_gap:
            row += f",{g:.17g}"
        lines.append(row)
    return "\n".join(lines) + "\n"


def default_region(obj) -> Region:
    pts, _ = _points(obj)
    radius = max([1.0] + [max(abs(t.real), abs(t.imag)) for t, _ in pts])
    half = math.ceil(radius * 2 + 1) / 2
    return Region(-half, half, -half, half)


def to_svg(obj, region: Region | None = None) -> str:
    """An 800x800 scatter plot with the unit circle drawn for reference."""
    region = region or default_region(obj)
    pts, _ = _points(obj)
    w = region.re_max - region.re_min
    h = region.im_max - region.im_min
    scale = SVG_SIZE / max(w, h)
    ox = (SVG_SIZE - w * scale) / 2
    oy = (SVG_SIZE - h * scale) / 2

    def px(t: complex) -> tuple[float, float]:
        return ox + (t.real - region.re_min) * scale, oy + (region.im_max - t.imag) * scale

    cx, cy = px(0j)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect x="0" y="0" width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
        f'<line x1="0" y1="{cy:.3f}" x2="{SVG_SIZE}" y2="{cy:.3f}" stroke="#cccccc" stroke-width="0.5"/>',
        f'<line x1="{cx:.3f}" y1="0" x2="{cx:.3f}" y2="{SVG_SIZE}" stroke="#cccccc" stroke-width="0.5"/>',
        f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{scale:.3f}" fill="none" stroke="#888888" stroke-width="0.75"/>',
    ]
    for t, _ in pts:
        x, y = px(t)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="1" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit(obj, fmt: str, path, region: Region | None = None) -> None:
    """Write ``obj`` (ZeroSet or samples) as ``csv`` or ``svg`` to ``path``."""
    if fmt == "csv":
        text = to_csv(obj)
    elif fmt == "svg":
        text = to_svg(obj, region)
    else:
        raise InvalidParameter(f"unknown format {fmt!r}")
    try:
        with open(os.fspath(path), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc
