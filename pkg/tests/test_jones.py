from __future__ import annotations

import pytest

from knotpoly.algebra import LaurentPoly
from knotpoly.errors import InvalidParameter
from knotpoly.genfun import build_genfun, tutte_series
from knotpoly.jones import (
    degree_span_check,
    family_index,
    jones_H,
    jones_H_mirror,
    m_from_r,
    machine_form,
    sign_alternation_check,
    tutte_at_jones_point,
)

t = LaurentPoly.t()


def _desc(top, coeffs):
    return LaurentPoly({top - k: c for k, c in enumerate(coeffs)})


# published Jones polynomials of 6_2, 10_116 and the 14-crossing member
V1 = _desc(5, [1, -2, 2, -2, 2, -1, 1])
V2 = _desc(7, [1, -4, 8, -12, 15, -16, 15, -11, 8, -4, 1])
V3 = _desc(12, [1, -6, 18, -38, 64, -91, 111, -118, 111, -92, 66, -39, 19, -6, 1])


@pytest.mark.parametrize("m,r,w,pt", [(1, 6, 2, 1), (3, 14, 6, 4), (5, 22, -2, -2), (2, 10, 2, 1), (4, 18, 2, 1)])
def test_family_index(m, r, w, pt):
    idx = family_index(m)
    assert (idx.r, idx.writhe, idx.pt_power) == (r, w, pt)
    assert idx.n_light - idx.n_dark == -2
    assert m_from_r(r) == m


def test_family_index_rejects():
    with pytest.raises(InvalidParameter):
        family_index(0)
    with pytest.raises(InvalidParameter):
        m_from_r(7)


@pytest.mark.parametrize("m,v", [(1, V1), (2, V2), (3, V3)])
def test_known_values(m, v):
    assert jones_H(m) == v


def test_prefactors_of_known_values():
    assert V1 == t * tutte_at_jones_point(1)
    assert V2 == t * tutte_at_jones_point(2)
    assert V3 == t**4 * tutte_at_jones_point(3)


def test_writhe_always_even():
    assert all(family_index(m).writhe % 2 == 0 for m in range(1, 21))


def test_degree_span_examples():
    assert degree_span_check(V1, family_index(1))
    assert degree_span_check(V3, family_index(3))
    assert not degree_span_check(V1, family_index(2))


def test_sign_alternation_examples():
    assert sign_alternation_check(V1)
    assert sign_alternation_check(V3)
    assert not sign_alternation_check(t**2 + t + 1)


def test_structure_up_to_50():
    for m in range(1, 51):
        v = jones_H(m)
        assert degree_span_check(v, family_index(m)), m
        assert sign_alternation_check(v), m


def test_recursion_matches_direct_specialization():
    gf = build_genfun()
    series = tutte_series(gf, 8)
    for m in range(1, 9):
        idx = family_index(m)
        assert jones_H(m) == series[m - 1].specialize_jones().shift(idx.pt_power)


def test_value_at_one():
    # V(1) = (-2)^(c-1) for a c-component link; m = 4 mod 5 gives three components
    for m in range(1, 30):
        want = 4 if m % 5 == 4 else 1
        assert sum(jones_H(m).terms.values()) == want, m


def test_mirror():
    assert jones_H_mirror(1) == V1.invert_t()


def test_prefactor_flag():
    assert not family_index(10).prefactor_conjectural
    assert family_index(11).prefactor_conjectural


def test_machine_form():
    assert machine_form(V1)[:2] == [(5, "1"), (4, "-2")]
