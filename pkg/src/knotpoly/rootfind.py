"""All-roots solver for integer polynomials with very large coefficients.

Aberth-Ehrlich simultaneous iteration in double precision, followed by
Aberth sweeps in gmpy2 against the exact integer coefficients.
Coefficients are divided by a power of two before conversion to float, and
points outside the unit disc are evaluated through the reversed polynomial
so that degree-800 inputs with |t| ~ 3 never overflow.

Jones polynomials cancel heavily near the unit circle, so double precision
alone pins clustered roots only to ~1e-8 and even accepts points like
e^{2 pi i/3} where the value is 1 but every term is ~1e40.  Residuals are
therefore judged at extended precision too.
"""

from __future__ import annotations

import gmpy2
import numpy as np

from .algebra import LaurentPoly
from .errors import ConvergenceFailure

MAX_ITER = 2000
# double-precision iterations used only to seed the extended-precision sweeps
SEED_ITER = 50
RESIDUAL_TOL = 1e-9
MAX_SWEEPS = 600
# extended-precision sweeps stop once a correction is below 2^-STEP_BITS |z|
STEP_BITS = 80
CLOSE_PAIR = 1e-6


def _scaled_coeffs(p: LaurentPoly) -> np.ndarray:
    """Ascending float coefficients of t^-min_deg * p scaled to max |c| ~ 1."""
    cs = p.coefficients()
    s = max(abs(c).bit_length() for c in cs)
    div = 1 << s
    return np.array([c / div for c in cs], dtype=float)


def _newton_ratio(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """p(z) / p'(z) for ascending coefficients ``c``, stable for any |z|."""
    n = len(c) - 1
    inside = np.abs(z) <= 1.0
    out = np.empty_like(z)
    if inside.any():
        zi = z[inside]
        p = np.zeros_like(zi)
        dp = np.zeros_like(zi)
        for k in range(n, -1, -1):
            dp = dp * zi + p
            p = p * zi + c[k]
        out[inside] = p / dp
    if (~inside).any():
        zo = z[~inside]
        u = 1.0 / zo
        q = np.zeros_like(zo)
        dq = np.zeros_like(zo)
        for k in range(n + 1):
            dq = dq * u + q
            q = q * u + c[k]
        # p = z^n q(u),  p' = z^(n-1) (n q - u q')
        out[~inside] = zo * q / (n * q - u * dq)
    return out


def _relative_residual(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """|p(z)| / sum |c_k| |z|^k, evaluated in whichever direction is bounded."""
    n = len(c) - 1
    out = np.empty(z.shape, dtype=float)
    inside = np.abs(z) <= 1.0
    for mask, w, order in ((inside, z, range(n, -1, -1)), (~inside, 1.0 / z, range(n + 1))):
        if not mask.any():
            continue
        wm = w[mask]
        rm = np.abs(wm)
        p = np.zeros_like(wm)
        a = np.zeros(wm.shape, dtype=float)
        for k in order:
            p = p * wm + c[k]
            a = a * rm + abs(c[k])
        out[mask] = np.abs(p) / a
    return out


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    radius = abs(c[0] / c[-1]) ** (1.0 / n)
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    return radius * np.exp(1j * angles)


def aberth(c: np.ndarray, tol: float = 1e-12, max_iter: int = MAX_ITER, strict: bool = True) -> np.ndarray:
    """Roots of ``sum c[k] z^k`` (ascending, ``c[0] != 0``, ``c[-1] != 0``).

    With ``strict=False`` unconverged approximations are returned as they
    stand, for a caller that refines them further.
    """
    c = np.asarray(c, dtype=float)
    n = len(c) - 1
    if n < 1:
        return np.zeros(0, dtype=complex)
    if n == 1:
        return np.array([-c[0] / c[1]], dtype=complex)
    z = _initial_guesses(c)
    active = np.ones(n, dtype=bool)
    for _ in range(max_iter):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        zi = z[idx]
        ratio = _newton_ratio(c, zi)
        diff = zi[:, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        recip = 1.0 / diff
        recip[np.arange(idx.size), idx] = 0.0
        corr = ratio / (1.0 - ratio * recip.sum(axis=1))
        corr = np.where(np.isfinite(corr), corr, 0.0)
        z[idx] = zi - corr
        done = np.abs(corr) <= tol * np.maximum(np.abs(z[idx]), 1e-300)
        active[idx[done]] = False
    if strict and active.any():
        raise ConvergenceFailure(
            f"{int(active.sum())} of {n} roots did not converge", np.nonzero(active)[0]
        )
    return z


def _working_precision(coeffs) -> int:
    # cancellation along the real segment runs ~20% past the coefficient bit length
    bits = max(abs(c).bit_length() for c in coeffs)
    return 2 * bits + 128


def _mp_eval(desc, w):
    p = gmpy2.mpc(0)
    dp = gmpy2.mpc(0)
    for c in desc:
        dp = dp * w + p
        p = p * w + c
    return p, dp


def mp_aberth(coeffs, z0, max_sweeps: int = MAX_SWEEPS):
    """Gauss-Seidel Aberth sweeps with extended-precision evaluation.

    Only ``p/p'`` and the repulsion from very close neighbours need the
    extra bits; the rest of ``sum 1/(z_i-z_j)`` is formed in double
    precision, which costs nothing in convergence once ``p/p'`` is small.

    Parameters
    ----------
    coeffs : sequence of int
        Ascending exact coefficients.
    z0 : array of complex
        Starting approximations, one per root.

    Returns
    -------
    list of gmpy2.mpc
    """
    n = len(coeffs) - 1
    prec = _working_precision(coeffs)
    zd = np.array(z0, dtype=complex)
    with gmpy2.context(gmpy2.get_context(), precision=prec):
        desc = [gmpy2.mpz(c) for c in reversed(coeffs)]
        z = [gmpy2.mpc(complex(v)) for v in zd]
        thresh = gmpy2.mpfr(2) ** (-STEP_BITS)
        active = list(range(n))
        for _ in range(max_sweeps):
            if not active:
                break
            still = []
            for i in active:
                zi = z[i]
                p, dp = _mp_eval(desc, zi)
                if p == 0:
                    continue
                ratio = p / dp
                diff = zd[i] - zd
                diff[i] = 1.0
                close = np.abs(diff) < CLOSE_PAIR * max(1.0, abs(zd[i]))
                close[i] = False
                inv = 1.0 / diff
                inv[i] = 0.0
                inv[close] = 0.0
                s = gmpy2.mpc(complex(inv.sum()))
                # near-coincident neighbours lose everything in double precision
                for j in np.nonzero(close)[0]:
                    s += 1 / (zi - z[j])
                corr = ratio / (1 - ratio * s)
                z[i] = zi - corr
                zd[i] = complex(z[i])
                if abs(corr) > thresh * abs(z[i]):
                    still.append(i)
            active = still
        if active:
            raise ConvergenceFailure(
                f"{len(active)} of {n} roots did not converge", active, [complex(v) for v in z]
            )
    return z


def mp_relative_residual(coeffs, t0: complex) -> float:
    """|p(t0)| / sum |c_k| |t0|^k for ascending integer ``coeffs``, at extended precision."""
    with gmpy2.context(gmpy2.get_context(), precision=_working_precision(coeffs)):
        w = gmpy2.mpc(complex(t0))
        r = abs(w)
        p = gmpy2.mpc(0)
        a = gmpy2.mpfr(0)
        for c in reversed(coeffs):
            p = p * w + c
            a = a * r + abs(c)
        return float(abs(p) / a)


def polynomial_roots(p: LaurentPoly, polish: bool = True) -> list[complex]:
    """All nonzero roots of a Laurent polynomial, sorted by argument then modulus.

    Double-precision Aberth supplies starting points; with ``polish`` they
    are refined by :func:`mp_aberth` and each rounded root must have an
    extended-precision relative residual below ``RESIDUAL_TOL``.
    """
    c = _scaled_coeffs(p)
    z = aberth(c, max_iter=MAX_ITER if not polish else SEED_ITER, strict=not polish)
    coeffs = p.coefficients()
    if polish:
        z = np.array([complex(v) for v in mp_aberth(coeffs, z)])
    # a real polynomial: imaginary parts below the iteration's resolution are zero
    roots = [complex(v.real, 0.0) if abs(v.imag) <= 2.0**-STEP_BITS * abs(v) else complex(v) for v in z]
    bad = [i for i, r in enumerate(roots) if mp_relative_residual(coeffs, r) > RESIDUAL_TOL]
    if bad:
        raise ConvergenceFailure(f"{len(bad)} roots above residual tolerance", bad)
    roots.sort(key=lambda r: (round(np.angle(r), 12), round(abs(r), 12)))
    return roots


def polish_real(p: LaurentPoly, x: float, steps: int = 8) -> float:
    """Newton-polish a real root of a real polynomial."""
    c = _scaled_coeffs(p)
    z = np.array([complex(x, 0.0)])
    for _ in range(steps):
        r = _newton_ratio(c, z)
        if not np.isfinite(r[0]) or r[0] == 0:
            break
        z = z - r.real
    return float(z[0].real)
