"""Jones polynomials of the H family assembled from T(S_m, -t, -1/t)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import LaurentPoly
from .errors import InvalidParameter
from .genfun import build_genfun, tutte_recursion_step, tutte_series

# m mod 5 -> (writhe, power of t)
_WRITHE = {1: 2, 2: 2, 4: 2, 3: 6, 0: -2}
_PT = {1: 1, 2: 1, 4: 1, 3: 4, 0: -2}

# the mod-5 writhe rule was checked against diagrams only up to this m
PREFACTOR_VALIDATED_MAX_M = 10


@dataclass(frozen=True)
class FamilyIndex:
    m: int
    r: int
    writhe: int
    pt_power: int

    @property
    def n_dark(self) -> int:
        return 2 * self.m + 3

    @property
    def n_light(self) -> int:
        return 2 * self.m + 1

    @property
    def prefactor_conjectural(self) -> bool:
        return self.m > PREFACTOR_VALIDATED_MAX_M


def family_index(m: int) -> FamilyIndex:
    """Crossing number, writhe and t-power for the m-th member."""
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"m must be a positive integer, got {m!r}")
    w = _WRITHE[m % 5]
    pt = _PT[m % 5]
    n_light, n_dark = 2 * m + 1, 2 * m + 3
    num = n_light - n_dark + 3 * w
    if num % 4 or num // 4 != pt:
        raise AssertionError(f"t-power table inconsistent with writhe at m={m}")
    return FamilyIndex(m=m, r=4 * m + 2, writhe=w, pt_power=pt)


def m_from_r(r: int) -> int:
    if (r - 2) % 4 or r < 6:
        raise InvalidParameter(f"r={r} is not of the form 4m+2 with m >= 1")
    return (r - 2) // 4


class _SpecializedTutte:
    """Growing list of T(S_m, -t, -1/t), extended by the 5-term recursion."""

    def __init__(self):
        gf = build_genfun().specialize_jones()
        self.b = gf.b
        self.terms: list[LaurentPoly] = tutte_series(gf, 5)

    def get(self, m: int) -> LaurentPoly:
        while len(self.terms) < m:
            self.terms.append(tutte_recursion_step(self.terms[-5:], self.b))
        return self.terms[m - 1]


@lru_cache(maxsize=1)
def _specialized() -> _SpecializedTutte:
    return _SpecializedTutte()


def tutte_at_jones_point(m: int) -> LaurentPoly:
    """T(S_m, -t, -1/t) exactly."""
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"m must be a positive integer, got {m!r}")
    return _specialized().get(m)


def jones_H(m: int) -> LaurentPoly:
    """V = (-1)^w t^pt T(S_m, -t, -1/t); the sign is +1 because w is even."""
    idx = family_index(m)
    v = tutte_at_jones_point(m).shift(idx.pt_power)
    return -v if idx.writhe % 2 else v


def jones_H_mirror(m: int) -> LaurentPoly:
    """The same polynomial with t -> 1/t (the reversed-crossing partner)."""
    return jones_H(m).invert_t()


def degree_span_check(v: LaurentPoly, idx: FamilyIndex) -> bool:
    if not v:
        raise ValueError("degree_span_check needs a nonzero polynomial")
    hi = idx.n_dark - 1 + idx.pt_power
    lo = -2 * idx.m + idx.pt_power
    return v.max_degree == hi and v.min_degree == lo and hi - lo == idx.r


def sign_alternation_check(v: LaurentPoly) -> bool:
    if not v:
        raise ValueError("sign_alternation_check needs a nonzero polynomial")
    cs = v.coefficients()
    return all(a * b <= 0 for a, b in zip(cs, cs[1:]))


def machine_form(v: LaurentPoly) -> list[tuple[int, str]]:
    """Descending (exponent, coefficient-string) pairs."""
    return [(e, str(c)) for e, c in v.sorted_terms()]
