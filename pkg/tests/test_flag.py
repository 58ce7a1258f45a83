import pytest

from oscrep.errors import InputNotHarmonic, NonTerminating
from oscrep.flag import (FlagProblem, check_classical, classical_harmonic, classical_harmonic_closed_form,
                         harmonic_basis_odd, harmonic_basis_sl, lemma21_solve, odd_harmonic)
from oscrep.linalg import SliceKey, kernel_on_slice, slice_enumerate
from oscrep.reps import RepParams, family_laplacians, laplacian
from oscrep.weyl import Polynomial, Ring, WeylOperator

SL312 = RepParams("sl", 3, 1, 2)


def P(s, ring=SL312.ring):
    return Polynomial.parse(ring, s)


def test_classical_one_step():
    r = Ring(2, with_y=False)
    prob = FlagProblem(WeylOperator.deriv(r, "x1", 2), [("x1", 2)], WeylOperator.deriv(r, "x2", 2), P("x2^2", r))
    sol = lemma21_solve(prob)
    assert sol.poly == P("x2^2 - x1^2", r) and sol.verified


def test_classical_examples():
    assert str(classical_harmonic((0, 2), (2, 2))) == "-x1^2 + x2^2"
    assert str(classical_harmonic((1, 0), (2, 2))) == "x1"
    assert str(classical_harmonic((0, 1, 1), (2, 2, 2))) == "x2*x3"


@pytest.mark.parametrize("ell", [(1, 3, 2), (0, 4, 0), (1, 2, 2), (0, 0, 5)])
def test_closed_form_matches_series(ell):
    shape = (2, 3, 2)
    assert classical_harmonic(ell, shape) == classical_harmonic_closed_form(ell, shape)


def test_seed_outside_kernel_rejected():
    with pytest.raises(InputNotHarmonic):
        classical_harmonic((2, 0), (2, 2))


def test_zero_seed():
    t1 = WeylOperator.term(SL312.ring, 1, [], ["x2", "y2"])
    sol = lemma21_solve(FlagProblem(t1, [("x2", 1), ("y2", 1)], laplacian(SL312) - t1, Polynomial.zero(SL312.ring)))
    assert sol.poly.is_zero()


def test_nonterminating_series():
    r = Ring(1, with_y=False)
    x = WeylOperator.mult(P("x1", r))
    ident = lambda f: f  # noqa: E731
    with pytest.raises(NonTerminating):
        lemma21_solve(FlagProblem(WeylOperator.zero(r), ident, x, P("1", r), iteration_cap=5))


def test_oscillator_seeds():
    t1 = WeylOperator.term(SL312.ring, 1, [], ["x2", "y2"])
    inv = [("x2", 1), ("y2", 1)]
    t2 = laplacian(SL312) - t1
    assert lemma21_solve(FlagProblem(t1, inv, t2, P("x2*y1"))).poly == P("x2*y1 + 1/2*x1*x2^2*y2")
    assert lemma21_solve(FlagProblem(t1, inv, t2, P("x3*y2"))).poly == P("x3*y2 + 1/2*x2*y2^2*y3")
    assert lemma21_solve(FlagProblem(t1, inv, t2, P("1"))).poly == P("1")


def test_truncation_keeps_cancelling_combinations():
    # an element of degree 2 that only appears as a difference of two degree-4 completions
    basis = harmonic_basis_sl(SL312, 0, 0, 2)
    assert basis.contains(P("x1*x3 - y1*y3"))


@pytest.mark.parametrize("p", [RepParams("sl", 3, 1, 2), RepParams("sl", 3, 1, 1), RepParams("sl", 3, 2, 3)])
@pytest.mark.parametrize("l1,l2", [(0, 0), (-1, 0), (0, -2), (-2, 1)])
def test_sl_basis_equals_kernel(p, l1, l2):
    b = harmonic_basis_sl(p, l1, l2, 5)
    oracle = kernel_on_slice(laplacian(p), slice_enumerate(p, SliceKey.bigraded(l1, l2), 5))
    assert b.same_space(oracle)


def test_odd_basis_and_lift():
    p = RepParams("so-odd", 3, 1, 2)
    r = p.ring
    assert odd_harmonic(p, P("x2*y2", r)) == P("x2*y2 - x0^2", r)
    assert odd_harmonic(p, P("1", r)) == P("1", r)
    assert odd_harmonic(p, P("x2", r), 1) == P("x0*x2", r)
    d = family_laplacians(p)[0]
    b = harmonic_basis_odd(p, -1, 4)
    assert b.same_space(kernel_on_slice(d, slice_enumerate(p, SliceKey.odd_total(-1), 4)))


@pytest.mark.parametrize("k", range(5))
def test_classical_dimensions(k):
    assert check_classical(3, k, (2, 2, 2)).detail["dim"] == 2 * k + 1
