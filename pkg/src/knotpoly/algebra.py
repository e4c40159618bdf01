"""Exact polynomial rings with arbitrary-precision integer coefficients.

Three types live here:

* :class:`BivarPoly` -- polynomials in ``x`` and ``y`` (Tutte polynomials and
  the generating-function coefficients).
* :class:`LaurentPoly` -- Laurent polynomials in ``t`` (Jones polynomials and
  everything derived from the specialization ``x = -t, y = -1/t``).
* :class:`PolyOverRing` -- univariate polynomials in an outer variable (``z``
  or ``xi``) whose coefficients belong to one of the two rings above.

All values are immutable once built.  Floating point only appears in
:meth:`LaurentPoly.eval_complex` and friends, where coefficients are rescaled
by a power of two before conversion so that huge integers never overflow.

Canonical text form
-------------------
Terms are joined by a single space.  Each term is a sign followed by an
optional coefficient and an optional monomial, joined by ``*``::

    term      := sign coeff | sign [coeff "*"] monomial
    sign      := "+" | "-"
    monomial  := factor ("*" factor)*
    factor    := var | var "^" exponent

A coefficient of 1 is omitted when a monomial is present; ``v^0`` factors are
never written and ``v^1`` is written ``v``.  Bivariate terms are ordered by
x-exponent descending, then y-exponent descending; Laurent terms by exponent
descending.  The zero polynomial is the single token ``0``.
"""

from __future__ import annotations

import math
import re
from typing import Callable, Iterable, Mapping

from .errors import ZeroArgument

__all__ = [
    "BivarPoly",
    "LaurentPoly",
    "PolyOverRing",
    "bivar_arith",
    "specialize_jones",
    "laurent_invert_t",
    "eval_complex",
]


def _clean(terms: Mapping) -> dict:
    return {k: int(c) for k, c in terms.items() if c}


_TERM_RE = re.compile(r"^([+-])(\d+)?(?:\*?(.*))?$")


def _parse_terms(text: str, variables: str) -> list[tuple[int, dict[str, int]]]:
    text = text.strip()
    if text in ("", "0"):
        return []
    out = []
    for tok in text.split():
        m = _TERM_RE.match(tok)
        if not m:
            raise ValueError(f"malformed term {tok!r}")
        sign, digits, rest = m.groups()
        coeff = int(digits) if digits else 1
        if digits is None and not rest:
            raise ValueError(f"malformed term {tok!r}")
        powers: dict[str, int] = {}
        if rest:
            for factor in rest.split("*"):
                name, _, exp = factor.partition("^")
                if name not in variables or name in powers:
                    raise ValueError(f"bad factor {factor!r} in {tok!r}")
                powers[name] = int(exp) if exp else 1
        out.append((-coeff if sign == "-" else coeff, powers))
    return out


def _format_term(coeff: int, factors: list[str]) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    if not factors:
        return f"{sign}{mag}"
    mono = "*".join(factors)
    return f"{sign}{mono}" if mag == 1 else f"{sign}{mag}*{mono}"


def _power(var: str, e: int) -> list[str]:
    if e == 0:
        return []
    return [var] if e == 1 else [f"{var}^{e}"]


class BivarPoly:
    """Sparse integer polynomial in ``x`` and ``y``.

    ``terms`` maps ``(e_x, e_y)`` to a nonzero integer coefficient.  An int
    argument builds a constant.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | int = 0):
        if isinstance(terms, int):
            terms = {(0, 0): terms}
        for (a, b) in terms:
            if a < 0 or b < 0:
                raise ValueError("BivarPoly exponents must be nonnegative")
        self._terms = _clean(terms)
        self._hash = None

    @classmethod
    def x(cls) -> BivarPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BivarPoly:
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> BivarPoly:
        return cls({(a, b): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = BivarPoly(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def swap(self) -> BivarPoly:
        """Return p(y, x)."""
        return BivarPoly({(b, a): c for (a, b), c in self._terms.items()})

    @property
    def deg_x(self) -> int:
        return max((a for a, _ in self._terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((b for _, b in self._terms), default=-1)

    def evaluate(self, x, y):
        """Evaluate at arbitrary ring/field values (ints, complex, LaurentPoly)."""
        total = 0
        for (a, b), c in self._terms.items():
            total = total + c * (x**a) * (y**b)
        return total

    def specialize_jones(self) -> LaurentPoly:
        """p(-t, -1/t): the monomial x^a y^b maps to (-1)^(a+b) t^(a-b)."""
        out: dict[int, int] = {}
        for (a, b), c in self._terms.items():
            e = a - b
            out[e] = out.get(e, 0) + (-c if (a + b) & 1 else c)
        return LaurentPoly(out)

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " ".join(
            _format_term(c, _power("x", a) + _power("y", b))
            for (a, b), c in self.sorted_terms()
        )

    @classmethod
    def from_text(cls, text: str) -> BivarPoly:
        out: dict[tuple[int, int], int] = {}
        for coeff, powers in _parse_terms(text, ("x", "y")):
            k = (powers.get("x", 0), powers.get("y", 0))
            out[k] = out.get(k, 0) + coeff
        return cls(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"BivarPoly({self.to_text()!r})"


class LaurentPoly:
    """Sparse integer Laurent polynomial in ``t``.

    ``terms`` maps a signed exponent to a nonzero integer coefficient.  An int
    argument builds a constant.
    """

    __slots__ = ("_terms", "_hash", "_scaled")

    def __init__(self, terms: Mapping[int, int] | int = 0):
        if isinstance(terms, int):
            terms = {0: terms}
        self._terms = _clean(terms)
        self._hash = None
        self._scaled = None

    @classmethod
    def t(cls, power: int = 1) -> LaurentPoly:
        return cls({power: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPoly:
        """Build from ascending coefficients starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def coefficients(self) -> list[int]:
        """Dense ascending coefficient list from min_degree to max_degree."""
        if not self._terms:
            return []
        lo, hi = self.min_degree, self.max_degree
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            ((e, c),) = self._terms.items()
            if abs(c) != 1:
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly({e * n: c ** (-n)})
        result, base = LaurentPoly(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def invert_t(self) -> LaurentPoly:
        """Return p(1/t)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def reflect(self, n: int) -> LaurentPoly:
        """Return t^n p(1/t); ``p == p.reflect(n)`` means palindromic of span n."""
        return LaurentPoly({n - e: c for e, c in self._terms.items()})

    # -- numeric boundary ---------------------------------------------------

    def _scaled_coeffs(self) -> tuple[int, list[float]]:
        # Ascending dense coefficients divided by 2**s, max magnitude in (0.5, 1].
        if self._scaled is None:
            coeffs = self.coefficients()
            s = max(abs(c).bit_length() for c in coeffs)
            div = 1 << s
            self._scaled = (s, [c / div for c in coeffs])
        return self._scaled

    def _horner(self, t0: complex) -> tuple[complex, float, int]:
        """Scaled value and scaled absolute-term sum.

        Returns ``(v, a, s)`` with ``p(t0) = v * 2**s * F`` and
        ``sum |c_k| |t0|^k = a * 2**s * |F|`` for a common factor ``F``
        (a power of ``t0``), so ``|v| / a`` is the relative residual.
        """
        s, cs = self._scaled_coeffs()
        r = abs(t0)
        if r <= 1.0:
            v, a = 0j, 0.0
            for c in reversed(cs):
                v = v * t0 + c
                a = a * r + abs(c)
        else:
            u, ru = 1.0 / t0, 1.0 / r
            v, a = 0j, 0.0
            for c in cs:
                v = v * u + c
                a = a * ru + abs(c)
        return v, a, s

    def eval_complex(self, t0: complex) -> complex:
        """Evaluate numerically at ``t0`` with power-of-two prescaling."""
        t0 = complex(t0)
        if not self._terms:
            return 0j
        if t0 == 0:
            if self.min_degree < 0:
                raise ZeroArgument("Laurent polynomial evaluated at t=0")
            return complex(self._terms.get(0, 0))
        v, _, s = self._horner(t0)
        lead = self.min_degree if abs(t0) <= 1.0 else self.max_degree
        try:
            v = v * t0**lead
        except OverflowError:
            return complex(math.inf, math.inf)
        return complex(_ldexp(v.real, s), _ldexp(v.imag, s))

    def relative_residual(self, t0: complex) -> float:
        """|p(t0)| divided by sum_k |c_k| |t0|^k, computed without overflow."""
        t0 = complex(t0)
        if t0 == 0:
            raise ZeroArgument("relative residual at t=0")
        if not self._terms:
            return 0.0
        v, a, _ = self._horner(t0)
        return abs(v) / a

    # -- text ---------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items(), key=lambda kv: -kv[0])

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " ".join(_format_term(c, _power("t", e)) for e, c in self.sorted_terms())

    @classmethod
    def from_text(cls, text: str) -> LaurentPoly:
        out: dict[int, int] = {}
        for coeff, powers in _parse_terms(text, ("t",)):
            e = powers.get("t", 0)
            out[e] = out.get(e, 0) + coeff
        return cls(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"


def _ldexp(x: float, s: int) -> float:
    try:
        return math.ldexp(x, s)
    except OverflowError:
        return math.copysign(math.inf, x)


class PolyOverRing:
    """Polynomial in an outer variable with coefficients in ``ring``.

    ``coefficients[k]`` multiplies the k-th power of the outer variable.
    Trailing zero coefficients are dropped.
    """

    __slots__ = ("ring", "_coeffs")

    def __init__(self, coefficients: Iterable, ring: type):
        cs = [c if isinstance(c, ring) else ring(c) for c in coefficients]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self._coeffs = tuple(cs)

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, k: int):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return self.ring()

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, PolyOverRing):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def _zip(self, other, op):
        n = max(len(self._coeffs), len(other._coeffs))
        return PolyOverRing([op(self[k], other[k]) for k in range(n)], self.ring)

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return PolyOverRing([-c for c in self._coeffs], self.ring)

    def __mul__(self, other):
        if not isinstance(other, PolyOverRing):
            return PolyOverRing([c * other for c in self._coeffs], self.ring)
        if not self or not other:
            return PolyOverRing([], self.ring)
        out = [self.ring() for _ in range(len(self._coeffs) + len(other._coeffs) - 1)]
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return PolyOverRing(out, self.ring)

    __rmul__ = __mul__

    def truncate(self, n: int) -> PolyOverRing:
        """Keep powers < n."""
        return PolyOverRing(self._coeffs[:n], self.ring)

    def derivative(self) -> PolyOverRing:
        return PolyOverRing([c * k for k, c in enumerate(self._coeffs)][1:], self.ring)

    def map(self, f: Callable, ring: type) -> PolyOverRing:
        return PolyOverRing([f(c) for c in self._coeffs], ring)

    def evaluate(self, value):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        inner = ", ".join(str(c) for c in self._coeffs)
        return f"PolyOverRing[{self.ring.__name__}]([{inner}])"


def bivar_arith(p: BivarPoly, q: BivarPoly, op: str) -> BivarPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def specialize_jones(p: BivarPoly) -> LaurentPoly:
    return p.specialize_jones()


def laurent_invert_t(p: LaurentPoly) -> LaurentPoly:
    return p.invert_t()


def eval_complex(p: LaurentPoly, t0: complex) -> complex:
    return p.eval_complex(t0)

