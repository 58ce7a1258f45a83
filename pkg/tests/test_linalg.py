from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oscrep.errors import DegreeEscape
from oscrep.linalg import (SliceKey, SubspaceBasis, bilinear_form, gram_matrix, kernel_on_slice, matrix_rank,
                           nullspace, slice_enumerate)
from oscrep.reps import RepParams, dual_laplacian, laplacian
from oscrep.weyl import Polynomial

SL312 = RepParams("sl", 3, 1, 2)


def P(s, p=SL312):
    return Polynomial.parse(p.ring, s)


def mons(p, key, cap):
    return {str(f) for f in slice_enumerate(p, key, cap).polynomials()}


def test_bigraded_slice():
    assert mons(SL312, SliceKey.bigraded(1, 1), 3) == {"x2*y1", "x2*y2", "x3*y1", "x3*y2"}
    assert mons(SL312, SliceKey.bigraded(0, 0), 0) == {"1"}


def test_symplectic_total_slice():
    sp = RepParams("sp", 2, 2, 2)
    assert mons(sp, SliceKey.total(0), 2) == {"1", "x1*y1", "x1*y2", "x2*y1", "x2*y2"}


def test_odd_total_slice_adds_x0_powers():
    p = RepParams("so-odd", 2, 1, 2)
    got = mons(p, SliceKey.odd_total(0), 2)
    assert "x0" not in got and "x0^2" not in got
    assert "1" in got
    assert mons(p, SliceKey.odd_total(1), 1) >= {"x0", "x2"}


def test_total_is_union_of_bigraded():
    k, cap = -1, 4
    union = set()
    for l1 in range(-cap, cap + 1):
        union |= mons(SL312, SliceKey.bigraded(l1, k - l1), cap)
    assert union == mons(SL312, SliceKey.total(k), cap)


def test_form_values():
    assert bilinear_form(P("x1"), P("x1"), SL312) == -1
    assert bilinear_form(P("x2*y2"), P("x2*y2"), SL312) == 1
    assert bilinear_form(P("1"), P("1"), SL312) == 1
    assert gram_matrix([P("x2*y1"), P("x3*y2")], SL312) == [[1, 0], [0, 1]]


def test_kernel_examples():
    d = laplacian(SL312)
    assert kernel_on_slice(d, slice_enumerate(SL312, SliceKey.bigraded(1, 1), 3)).dim == 0
    k4 = kernel_on_slice(d, slice_enumerate(SL312, SliceKey.bigraded(1, 1), 4))
    assert k4.contains(P("x2*y1 + 1/2*x1*x2^2*y2"))
    assert k4.contains(P("x3*y2 + 1/2*x2*y2^2*y3"))
    k0 = kernel_on_slice(d, slice_enumerate(SL312, SliceKey.bigraded(0, 0), 2))
    expected = SubspaceBasis.from_polynomials(SL312, [P("1"), P("x1*x2"), P("y2*y3"), P("x1*x3 - y1*y3")])
    assert k0.same_space(expected)


def test_degree_escape():
    with pytest.raises(DegreeEscape):
        kernel_on_slice(dual_laplacian(SL312), slice_enumerate(SL312, SliceKey.bigraded(0, 0), 2))


def test_span_membership_and_coordinates():
    b = SubspaceBasis.from_polynomials(SL312, [P("x1"), P("y1")])
    assert b.coordinates(P("x1 - 2*y1")) == [1, -2]
    assert not SubspaceBasis.from_polynomials(SL312, [P("x1")]).contains(P("y1"))


def test_matrix_rank():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[Fraction(1, 2), 0], [0, 3]]) == 2


vecs = st.lists(st.dictionaries(st.integers(0, 5), st.integers(-3, 3).filter(bool), max_size=4),
                min_size=1, max_size=6)


@settings(max_examples=60, deadline=None)
@given(vecs)
def test_nullspace_combinations_vanish(rows):
    for combo in nullspace(rows):
        total = {}
        for j, a in combo.items():
            for c, v in rows[j].items():
                total[c] = total.get(c, 0) + a * v
        assert not any(total.values())


@settings(max_examples=40, deadline=None)
@given(st.integers(-2, 2), st.integers(-2, 2))
def test_form_is_diagonal_and_symmetric(l1, l2):
    polys = slice_enumerate(SL312, SliceKey.bigraded(l1, l2), 3).polynomials()
    g = gram_matrix(polys, SL312)
    for i in range(len(polys)):
        for j in range(len(polys)):
            assert g[i][j] == g[j][i]
            assert (g[i][j] != 0) == (i == j)
