"""Generating function for the Tutte polynomials of the S_m family.

``sum_{m>=1} T(S_m, x, y) z^(m-1) = N(z) / D(z)`` with ``N`` of degree 4 and
``D = 1 + b_1 z + ... + b_5 z^5``.  The coefficients are stored as literal
data and checked against deletion-contraction by
:func:`verify_numerator_identities`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .algebra import BivarPoly, LaurentPoly, PolyOverRing
from .errors import InvalidParameter
from .graphs import build_S, tutte_delcon


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class GenFun:
    numerator: PolyOverRing
    denominator: PolyOverRing

    @property
    def a(self) -> tuple:
        return tuple(self.numerator[j] for j in range(5))

    @property
    def b(self) -> tuple:
        """``(b_1, ..., b_5)``; ``b_0 = 1`` is implicit."""
        return tuple(self.denominator[j] for j in range(1, 6))

    def map(self, f: Callable, ring: type) -> GenFun:
        return GenFun(self.numerator.map(f, ring), self.denominator.map(f, ring))

    def specialize_jones(self) -> GenFun:
        """Apply ``x = -t, y = -1/t`` to every coefficient."""
        return self.map(BivarPoly.specialize_jones, LaurentPoly)


def build_genfun() -> GenFun:
    """Return the numerator and denominator coefficients of Gamma(S, x, y, z)."""
    x, y = BivarPoly.x(), BivarPoly.y()
    xy = x * y

    a0 = x**4 + 2 * x**3 + x**2 * y + 2 * x**2 + 2 * xy + y**2 + x + y
    a1 = -x * (
        x**4 * y + x**3 * y**2 + x**4 + 4 * x**3 * y + 2 * x**2 * y**2 + x * y**3 + 3 * x**3
        + 6 * x**2 * y + 4 * x * y**2 + y**3 + 3 * x**2 + 5 * xy + 3 * y**2 + x + y
    )
    a2 = xy * (
        x**4 * y**2 + x**5 + 3 * x**4 * y + 2 * x**3 * y**2 + 4 * x**4 + 5 * x**3 * y
        + 3 * x**2 * y**2 + 2 * x * y**3 + 5 * x**3 + 5 * x**2 * y + 3 * x * y**2 - y**3
        + 3 * x**2 + 2 * xy - y**2
    )
    a3 = -(x**2) * y**2 * (
        x**4 * y + x**3 * y**2 + x**4 + 3 * x**3 * y + 2 * x**3 + 2 * x**2 * y
        + 2 * x * y**2 + x**2 - y**2
    )
    a4 = x**6 * y**4

    b1 = -(3 * (1 + x + y) + xy + x**2 + y**2)
    b2 = (
        1 + 3 * (x + y) + 3 * (x**2 + y**2) + 8 * xy + x**3 + y**3 + 5 * xy * (x + y)
        + xy * (x**2 + y**2) + xy**2
    )
    b3 = -xy * (
        3 + 5 * (x + y) + 4 * (x**2 + y**2) + 6 * xy + x**3 + y**3 + 3 * xy * (x + y) + xy**2
    )
    b4 = xy**2 * (1 + x) * (1 + y) * (1 + x + y)
    b5 = -(xy**4)

    return GenFun(
        PolyOverRing([a0, a1, a2, a3, a4], BivarPoly),
        PolyOverRing([1, b1, b2, b3, b4, b5], BivarPoly),
    )


def tutte_series(gf: GenFun, m_max: int) -> list:
    """First ``m_max`` power-series coefficients of N/D, i.e. T(S_1..S_m_max).

    Works in whichever ring ``gf`` lives in (bivariate or specialized).
    """
    if m_max < 1:
        raise InvalidParameter("m_max must be >= 1")
    b = gf.denominator
    if b[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out = []
    for k in range(m_max):
        acc = gf.numerator[k]
        for j in range(1, min(k, b.degree) + 1):
            acc = acc - b[j] * out[k - j]
        out.append(acc)
    return out


def tutte_recursion_step(window: Sequence, b: Sequence):
    """Next term ``T_{m+5} = -(b_1 T_{m+4} + ... + b_5 T_m)``.

    ``window`` is ``[T_m, ..., T_{m+4}]`` and ``b`` is ``[b_1, ..., b_5]``,
    both in the same ring.
    """
    if len(window) != 5 or len(b) != 5:
        raise ValueError("window and b must both have length 5")
    acc = b[0] * window[4]
    for j in range(1, 5):
        acc = acc + b[j] * window[4 - j]
    return -acc


def tutte_recursive(gf: GenFun, m_max: int) -> list:
    """T_1..T_{m_max}: the first five from the series, the rest by recursion."""
    seq = tutte_series(gf, min(m_max, 5))
    b = gf.b
    while len(seq) < m_max:
        seq.append(tutte_recursion_step(seq[-5:], b))
    return seq


@lru_cache(maxsize=None)
def delcon_terms(count: int) -> tuple[BivarPoly, ...]:
    """T(S_1..S_count) by deletion-contraction (cached per process)."""
    return tuple(tutte_delcon(build_S(m)) for m in range(1, count + 1))


def verify_numerator_identities(gf: GenFun, tutte: Sequence[BivarPoly] | None = None) -> list[CheckResult]:
    """Check ``a_k = T_{k+1} + sum_{j=1..k} b_j T_{k+1-j}`` for k = 0..4."""
    T = list(tutte) if tutte is not None else list(delcon_terms(5))
    b = gf.b
    results = []
    for k in range(5):
        rhs = T[k]
        for j in range(1, k + 1):
            rhs = rhs + b[j - 1] * T[k - j]
        ok = rhs == gf.a[k]
        results.append(CheckResult(f"numerator identity a_{k}", ok))
    return results


def verify_b_symmetry(gf: GenFun) -> list[CheckResult]:
    results = []
    for j, bj in enumerate(gf.b, start=1):
        results.append(CheckResult(f"b_{j} symmetric under x<->y", bj.swap() == bj))
    for j, aj in enumerate(gf.a):
        results.append(CheckResult(f"a_{j} not symmetric under x<->y", aj.swap() != aj))
    return results


def verify_recursion(gf: GenFun, m_max: int = 10) -> list[CheckResult]:
    """Recursion holds for 1 <= m <= m_max using series terms T_1..T_{m_max+5}."""
    T = tutte_series(gf, m_max + 5)
    b = gf.b
    bad = [m for m in range(1, m_max + 1) if tutte_recursion_step(T[m - 1:m + 4], b) != T[m + 4]]
    return [CheckResult(f"linear recursion, m=1..{m_max}", not bad, f"fails at m={bad}" if bad else "")]


def verify_series_consistency(gf: GenFun, terms: int = 10) -> list[CheckResult]:
    """N - D * sum T_m z^(m-1) has no z-power below ``terms``."""
    T = tutte_series(gf, terms)
    series = PolyOverRing(T, gf.numerator.ring)
    residual = (gf.numerator - gf.denominator * series).truncate(terms)
    return [CheckResult(f"series consistency through z^{terms - 1}", not residual)]
