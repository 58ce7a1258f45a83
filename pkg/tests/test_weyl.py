from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oscrep.errors import ParseError, UniverseMismatch
from oscrep.weyl import Polynomial, Ring, WeylOperator, apply_power, integrate, op_bracket

R = Ring(3)


def P(s, ring=R):
    return Polynomial.parse(ring, s)


def test_arithmetic_basics():
    assert (P("x1") + P("-x1")).is_zero()
    assert P("x1 + y1") * P("x1 - y1") == P("x1^2 - y1^2")
    assert P("x2*y2").scale(Fraction(3, 2)).to_str() == "3/2*x2*y2"
    assert P("0").to_str() == "0"


def test_parse_accepts_juxtaposition_and_rationals():
    assert P("x1 x3") == P("x1*x3")
    assert P("-1/2 x1^2 y3 + x2 y2").coeff((2, 0, 0, 0, 0, 1)) == Fraction(-1, 2)


@pytest.mark.parametrize("bad", ["x1 +", "x9", "x1^", "2/0*x1", "z1", "x0"])
def test_parse_errors(bad):
    with pytest.raises((ParseError, UniverseMismatch)):
        P(bad)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        P("x1 ++ x2")


def test_ring_mismatch():
    with pytest.raises(UniverseMismatch):
        P("x1") + P("x1", Ring(2))


def test_derivative_and_composition():
    dx1 = WeylOperator.deriv(R, "x1")
    x1 = WeylOperator.mult(P("x1"))
    assert dx1(P("x1^2")) == P("2*x1")
    assert (dx1 * x1).to_str() == "x1*∂x1 + 1"
    assert (x1 * dx1).to_str() == "x1*∂x1"
    assert (dx1 ** 2 * x1).to_str() == "x1*∂x1^2 + 2*∂x1"
    assert op_bracket(dx1, x1) == WeylOperator.identity(R)


def test_ascii_rendering():
    op = WeylOperator.term(R, 1, ["y3"], ["x3"])
    assert op.to_str(ascii=True) == "y3*dx3"


def test_integrate():
    assert integrate(P("x1^2"), "x1", 1) == P("1/3*x1^3")
    assert integrate(P("1"), "x1", 2) == P("1/2*x1^2")
    assert integrate(P("x1*y2"), "x1", 0) == P("x1*y2")


exps = st.tuples(*[st.integers(0, 3)] * R.size)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda d: Polynomial(R, d))


@st.composite
def operators(draw):
    op = WeylOperator.zero(R)
    names = [str(v) for v in R.variables]
    for _ in range(draw(st.integers(1, 3))):
        mult = draw(st.lists(st.sampled_from(names), max_size=2))
        der = draw(st.lists(st.sampled_from(names), max_size=2))
        op = op + WeylOperator.term(R, draw(coeffs), mult, der)
    return op


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


@settings(max_examples=60, deadline=None)
@given(polys)
def test_to_str_round_trip(f):
    assert P(f.to_str()) == f


@settings(max_examples=40, deadline=None)
@given(operators(), operators(), polys)
def test_composition_is_application(s, t, f):
    assert (s * t)(f) == s(t(f))


@settings(max_examples=30, deadline=None)
@given(operators(), operators(), operators())
def test_bracket_antisymmetry_and_jacobi(a, b, c):
    assert op_bracket(a, b) == -op_bracket(b, a)
    jac = op_bracket(a, op_bracket(b, c)) + op_bracket(b, op_bracket(c, a)) + op_bracket(c, op_bracket(a, b))
    assert jac.is_zero()


@settings(max_examples=40, deadline=None)
@given(polys, st.sampled_from(["x1", "y2", "x3"]), st.integers(0, 3))
def test_derivative_undoes_integration(f, v, m):
    d = WeylOperator.deriv(R, v, m) if m else WeylOperator.identity(R)
    assert d(integrate(f, v, m)) == f
    assert apply_power(WeylOperator.deriv(R, v), integrate(f, v, m), m) == f
