"""Verification suites: identities, values, endpoints, zeros.

Each suite returns a list of :class:`CheckResult`; the CLI prints one line
per check and exits 1 if any fails.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import reference as ref
from .genfun import (
    CheckResult,
    build_genfun,
    delcon_terms,
    tutte_series,
    verify_b_symmetry,
    verify_numerator_identities,
    verify_recursion,
    verify_series_consistency,
)
from .graphs import build_S, tutte_oracle
from .jones import degree_span_check, family_index, jones_H, sign_alternation_check
from .locus import cube_root_norm, expand_roots, find_zeros
from .spectra import (
    arc_endpoints,
    check_identities,
    lambda_closed_form,
    multiset_distance,
    quartic_roots_numeric,
    segment_endpoints,
    spectrum_at,
)

SPECIAL_TOL = 1e-9
SEGMENT_TOL = 1e-6
R1_TOL = 1e-5
ARC_POINT_TOL = 1e-5
ARC_DEG_TOL = 1e-3
LAMBDA_TOL = 1e-5

ZERO_MS = (1, 2, 3, 10, 20, 50)
COMPLETENESS_MS = (1, 2, 3, 10, 50)
CUBE_ROOT = cmath.exp(2j * math.pi / 3)


def suite_identities() -> list[CheckResult]:
    gf = build_genfun()
    out = []
    out += verify_numerator_identities(gf)
    out += verify_b_symmetry(gf)
    out += verify_recursion(gf, 10)
    out += verify_series_consistency(gf, 12)
    series = tutte_series(gf, 4)
    delcon = delcon_terms(4)
    out.append(CheckResult("spanning-subgraph sum = deletion-contraction, S_1",
                           tutte_oracle(build_S(1)) == delcon[0]))
    for m in range(1, 5):
        out.append(CheckResult(f"deletion-contraction = series term, S_{m}", delcon[m - 1] == series[m - 1]))
    out += check_identities()
    return out


def _label(t0) -> str:
    return {1: "1", 1j: "i", -1j: "-i"}.get(t0, str(t0))


def _fifth_roots(sign: int) -> list[complex]:
    # nontrivial fifth roots of sign (1 or -1), excluding sign itself
    base = 0.0 if sign == 1 else math.pi
    roots = [cmath.exp(1j * (base + 2 * math.pi * k) / 5) for k in range(5)]
    return [r for r in roots if abs(r - sign) > 1e-6]


def suite_values() -> list[CheckResult]:
    out = []
    for m, expected in ref.JONES.items():
        got = jones_H(m)
        out.append(CheckResult(f"V exact, m={m}", got == expected,
                               "" if got == expected else f"got {got.to_text()}"))
    for t0, sign in ((1, 1), (1j, -1)):
        want = _fifth_roots(sign)
        num = quartic_roots_numeric(t0)
        d = multiset_distance(num, want)
        out.append(CheckResult(f"quartic roots at t={_label(t0)}", d <= SPECIAL_TOL, f"distance {d:.2e}"))
        dc = multiset_distance(lambda_closed_form(t0), want)
        out.append(CheckResult(f"closed-form roots at t={_label(t0)}", dc <= SPECIAL_TOL, f"distance {dc:.2e}"))
    for t0 in (1, 1j, -1j):
        mags = spectrum_at(t0).magnitudes
        dev = max(abs(x - 1) for x in mags)
        out.append(CheckResult(f"all five |lambda| = 1 at t={_label(t0)}", dev <= SPECIAL_TOL, f"max deviation {dev:.2e}"))
    return out


def suite_endpoints() -> list[CheckResult]:
    out = []
    seg = segment_endpoints()
    for name, got, want in (("outer", seg.outer, ref.SEGMENT_OUTER), ("inner", seg.inner, ref.SEGMENT_INNER)):
        out.append(CheckResult(f"segment endpoint {name}", abs(got - want) <= SEGMENT_TOL, f"{got:.10f}"))
    for name, sp_at in (("outer", seg.spectrum_outer), ("inner", seg.spectrum_inner)):
        want = [1, 1, 1, ref.SEGMENT_LAMBDA, ref.SEGMENT_LAMBDA.conjugate()]
        d = multiset_distance(sp_at.lambdas, want)
        out.append(CheckResult(f"lambdas at segment endpoint {name}", d <= LAMBDA_TOL, f"distance {d:.2e}"))
        spread = max(sp_at.magnitudes) - min(sp_at.magnitudes)
        out.append(CheckResult(f"five equal magnitudes at segment endpoint {name}", spread <= LAMBDA_TOL,
                               f"spread {spread:.2e}"))

    arcs = arc_endpoints()
    got = {"A_o": arcs.arc_outer, "A_i": arcs.arc_inner, "H_o": arcs.horseshoe_outer, "H_i": arcs.horseshoe_inner}
    for key, want in ref.R1_ZEROS.items():
        z = got[key]
        d = abs(z - want)
        out.append(CheckResult(f"R_1 zero {key}", d <= R1_TOL, f"{z.real:.6f}{z.imag:+.6f}i"))
        dc = min(abs(w - want.conjugate()) for w in arcs.r1_zeros)
        out.append(CheckResult(f"R_1 zero {key}*", dc <= R1_TOL))
    for key in ("A", "H"):
        o, i = got[f"{key}_o"], got[f"{key}_i"]
        out.append(CheckResult(f"|t_{key},i| = 1/|t_{key},o|", abs(abs(i) * abs(o) - 1) <= 1e-10))
    ce = arcs.circle_arc
    out.append(CheckResult("circle-arc endpoint", abs(ce - ref.CIRCLE_ARC) <= ARC_POINT_TOL,
                           f"{ce.real:.6f}{ce.imag:+.6f}i"))
    out.append(CheckResult("circle-arc angle", abs(arcs.circle_arc_angle_deg - ref.CIRCLE_ARC_DEG) <= ARC_DEG_TOL,
                           f"{arcs.circle_arc_angle_deg:.6f} deg"))
    return out


def suite_zeros(ms=ZERO_MS) -> list[CheckResult]:
    out = []
    sets = {}
    for m in ms:
        zs = find_zeros(m)
        sets[m] = zs
        n = 4 * m + 2
        out.append(CheckResult(f"m={m}: {n} zeros", len(zs.zeros) == n, f"found {len(zs.zeros)}"))
        worst = max(zs.residuals)
        out.append(CheckResult(f"m={m}: relative residual <= 1e-9", worst <= 1e-9, f"max {worst:.1e}"))
        cd = zs.conjugation_defect()
        out.append(CheckResult(f"m={m}: closed under conjugation", cd <= 1e-8, f"defect {cd:.1e}"))
        neg = zs.negative_real()
        out.append(CheckResult(f"m={m}: no negative real zeros", not neg, f"{len(neg)} found" if neg else ""))
        norm = cube_root_norm(jones_H(m))
        out.append(CheckResult(f"m={m}: V(e^(2 pi i/3)) != 0", norm > 0, f"|V|^2 = {norm}"))
    for m in ms:
        if m in COMPLETENESS_MS:
            v = jones_H(m)
            exact = np.array(v.coefficients(), dtype=float)
            approx = expand_roots(sets[m].zeros, v.coefficients()[-1])
            rel = float(np.max(np.abs(approx - exact) / np.abs(exact).max()))
            out.append(CheckResult(f"m={m}: roots re-expand to coefficients", rel <= 1e-6, f"relative {rel:.1e}"))

    spans = [m for m in range(1, max(ms) + 1) if not degree_span_check(jones_H(m), family_index(m))]
    out.append(CheckResult(f"degree span 4m+2, m=1..{max(ms)}", not spans, f"fails at {spans}" if spans else ""))
    alts = [m for m in range(1, max(ms) + 1) if not sign_alternation_check(jones_H(m))]
    out.append(CheckResult(f"sign alternation, m=1..{max(ms)}", not alts, f"fails at {alts}" if alts else ""))

    dist = {m: sets[m].nearest(CUBE_ROOT) for m in ms}
    pair = {m: sets[m].nearest(CUBE_ROOT.conjugate()) for m in ms}
    if 50 in dist:
        out.append(CheckResult("m=50: conjugate pair within 0.02 of e^(+-2 pi i/3)",
                               max(dist[50], pair[50]) < 0.02, f"distance {dist[50]:.1e}"))
    seq = [m for m in (10, 20, 50) if m in dist]
    if len(seq) > 1:
        ds = [dist[m] for m in seq]
        out.append(CheckResult(f"distance to e^(2 pi i/3) decreasing over m={seq}",
                               all(a > b for a, b in zip(ds, ds[1:])), ", ".join(f"{d:.1e}" for d in ds)))
    if 50 in sets:
        z = np.array(sets[50].zeros)
        near1 = int(np.sum(np.abs(z - 1) < 0.05))
        near_i = int(np.sum(np.abs(z - 1j) < 0.05))
        out.append(CheckResult("m=50: fewer zeros near t=1 than near t=i", near1 < near_i,
                               f"{near1} vs {near_i}"))
    return out


SUITES = {
    "identities": suite_identities,
    "values": suite_values,
    "endpoints": suite_endpoints,
    "zeros": suite_zeros,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        out = []
        for fn in SUITES.values():
            out += fn()
        return out
    return SUITES[name]()
