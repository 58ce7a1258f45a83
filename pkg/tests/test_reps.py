import pytest

from oscrep.errors import InvalidParams, NotAWeightVector, NotInAlgebra
from oscrep.reps import (Family, Matrix, RepParams, abstract_bracket, cartan, dual_laplacian, family_laplacians,
                         in_algebra, laplacian, rho, spanning_set, weight_of)
from oscrep.weyl import Polynomial

SL312 = RepParams("sl", 3, 1, 2)
E = Matrix.unit


def test_param_validation():
    with pytest.raises(InvalidParams):
        RepParams("sl", 3, 2, 1)
    with pytest.raises(InvalidParams):
        RepParams("sl", 1, 1, 1)
    with pytest.raises(InvalidParams):
        RepParams("sp", 3, 1, 2, single_block=True)
    with pytest.raises(ValueError):
        RepParams("gl", 3, 1, 2)
    assert RepParams("sl", 3, 2, 0, single_block=True).n2 == 2


def test_only_odd_family_has_x0():
    assert RepParams("so-odd", 2, 1, 1).ring.odd
    assert not any(RepParams(f, 2, 1, 1).ring.odd for f in ("sl", "so-even", "sp"))


def test_sl_generators():
    assert rho(SL312, E(1, 1)).to_str() == "-x1*∂x1 - y1*∂y1 - 1"
    assert rho(SL312, E(1, 2)).to_str() == "∂x1*∂x2 - y2*∂y1"


def test_even_orthogonal_generator():
    p = RepParams("so-even", 3, 1, 2)
    assert rho(p, E(6, 1) - E(4, 3)).to_str() == "-x1*∂y3 - y1*∂x3"


def test_not_in_algebra():
    p = RepParams("so-even", 3, 1, 2)
    assert not in_algebra(p, E(1, 2))
    with pytest.raises(NotInAlgebra):
        rho(p, E(1, 2))


def test_laplacians():
    assert laplacian(SL312).to_str() == "-x1*∂y1 + ∂x2*∂y2 - y3*∂x3"
    assert dual_laplacian(SL312).to_str() == "y1*∂x1 + x2*y2 + x3*∂y3"
    p = RepParams("sl", 2, 1, 1)
    assert laplacian(p).to_str() == "-x1*∂y1 - y2*∂x2"
    assert dual_laplacian(p).to_str() == "y1*∂x1 + x2*∂y2"
    q = RepParams("so-odd", 3, 1, 2)
    assert family_laplacians(q)[0].to_str() == "∂x0^2 - 2*x1*∂y1 + 2*∂x2*∂y2 - 2*y3*∂x3"


def test_laplacian_examples():
    r = SL312.ring
    assert laplacian(SL312)(Polynomial.parse(r, "x3*y1")) == Polynomial.parse(r, "-x1*x3 - y1*y3")
    assert dual_laplacian(SL312)(Polynomial.constant(r)) == Polynomial.parse(r, "x2*y2")


def test_matrix_brackets():
    assert abstract_bracket(E(1, 2), E(2, 1)) == E(1, 1) - E(2, 2)
    assert abstract_bracket(E(1, 2), E(2, 3)) == E(1, 3)
    a = E(1, 2) + E(3, 1)
    assert abstract_bracket(a, a) == Matrix()
    assert E(1, 2).transpose() == E(2, 1)


@pytest.mark.parametrize("fam,count", [("sl", 8), ("so-even", 15), ("so-odd", 21), ("sp", 21)])
def test_spanning_set_sizes(fam, count):
    p = RepParams(fam, 3, 1, 2)
    gens = spanning_set(p)
    assert len(gens) == count
    assert all(in_algebra(p, g.matrix) for g in gens)


def test_weights():
    r = SL312.ring
    assert weight_of(Polynomial.parse(r, "x1"), SL312).values == (-2, -1)
    p = RepParams("sl", 2, 1, 1)
    assert weight_of(Polynomial.constant(p.ring), p).values == (-2,)
    with pytest.raises(NotAWeightVector):
        weight_of(Polynomial.parse(r, "x1 + x2"), SL312)


@pytest.mark.parametrize("fam", [f.value for f in Family])
def test_cartan_is_diagonal_on_monomials(fam):
    p = RepParams(fam, 2, 1, 2)
    f = Polynomial.parse(p.ring, "x1^2*y2")
    for h in cartan(p):
        img = rho(p, h.matrix)(f)
        assert img.is_zero() or set(img.terms) == set(f.terms)
