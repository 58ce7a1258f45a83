import pytest

from oscrep.decompose import decomposition_audit, harmonic_decompose, regime_bound, symplectic_split_audit
from oscrep.errors import InvalidParams, RegimeViolation
from oscrep.linalg import SliceKey
from oscrep.reps import RepParams, family_laplacians
from oscrep.weyl import Polynomial

SL312 = RepParams("sl", 3, 1, 2)


def P(s, p=SL312):
    return Polynomial.parse(p.ring, s)


def test_regime_bound():
    assert regime_bound(SL312) == 0
    assert regime_bound(RepParams("sl", 3, 2, 2)) == 0
    assert regime_bound(RepParams("sl", 4, 1, 3)) == -1
    assert regime_bound(RepParams("sl", 3, 3, 3)) == 0


def test_worked_decomposition():
    dec = harmonic_decompose(P("x1*x3"), SL312)
    comps = {m: h for m, h in dec.components}
    assert comps[0] == P("-x1*x2*y2*y3 - y1*y3")
    assert comps[1] == P("x1*y3")
    assert dec.reconstruct(SL312) == P("x1*x3")


def test_regime_violation():
    with pytest.raises(RegimeViolation):
        harmonic_decompose(P("x2*y1"), SL312)


def test_sp_rejected():
    p = RepParams("sp", 2, 1, 2)
    with pytest.raises(InvalidParams):
        harmonic_decompose(P("x1", p), p)


@pytest.mark.parametrize("p,text", [
    (RepParams("sl", 2, 1, 1), "x1*x2*y2 + 3*x1*y1*y2"),
    (RepParams("so-even", 2, 1, 2), "x1^2*x2 + x1"),
    (RepParams("so-odd", 2, 1, 2), "x0^2*x1^2 + x1*x2"),
])
def test_components_are_harmonic(p, text):
    f = P(text, p)
    dec = harmonic_decompose(f, p)
    d, _ = family_laplacians(p)
    assert dec.reconstruct(p) == f
    assert all(d(h).is_zero() for _, h in dec.components)


def test_audits():
    assert decomposition_audit(SL312, SliceKey.bigraded(0, 0), 4).ok
    assert decomposition_audit(RepParams("so-even", 2, 1, 2), SliceKey.total(0), 4).ok
    assert decomposition_audit(RepParams("so-odd", 2, 1, 2), SliceKey.odd_total(-1), 4).ok


def test_symplectic_split():
    r = symplectic_split_audit(RepParams("sp", 2, 2, 2), 4)
    assert r.ok
    assert r.detail["by_degree"]["2"] == {"sym": 3, "alt": 1}
