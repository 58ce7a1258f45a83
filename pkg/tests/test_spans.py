import pytest

from oscrep.errors import InvalidParams, PatternMismatch
from oscrep.linalg import SliceKey
from oscrep.reps import RepParams
from oscrep.spans import check_span, explicit_spans, symplectic_sym_layer
from oscrep.weyl import Polynomial


def test_two_variable_zeta():
    p = RepParams("sl", 2, 2, 2)
    b = explicit_spans(p, "sl-equal", 2, SliceKey.bigraded(-1, 1))
    assert b.polynomials() == [Polynomial.parse(p.ring, "x1*y2 - x2*y1")]
    assert explicit_spans(p, "sl-equal", 2, SliceKey.bigraded(1, -1)).polynomials() == []


def test_symplectic_degree_two_layer():
    p = RepParams("sp", 2, 2, 2)
    quad = [f for f in symplectic_sym_layer(p, 2).polynomials() if f.degree() == 2]
    assert len(quad) == 3


@pytest.mark.parametrize("p,which,key", [
    (RepParams("sl", 3, 1, 1), "sl-equal", SliceKey.bigraded(-1, 0)),
    (RepParams("sl", 3, 2, 2), "sl-equal", SliceKey.bigraded(0, -1)),
    (RepParams("so-even", 3, 1, 1), "even-equal", SliceKey.total(0)),
    (RepParams("so-even", 2, 1, 1), "even-two-variable", SliceKey.total(-2)),
    (RepParams("sp", 2, 2, 2), "sp-alt-layer", None),
])
def test_spans_match_kernels(p, which, key):
    assert check_span(p, which, 4, key).ok


def test_pattern_mismatch():
    with pytest.raises(PatternMismatch):
        explicit_spans(RepParams("sl", 3, 1, 2), "sl-equal", 2)
    with pytest.raises(PatternMismatch):
        explicit_spans(RepParams("sp", 3, 1, 2), "sp-sym-layer", 2)
    with pytest.raises(InvalidParams):
        explicit_spans(RepParams("sp", 2, 2, 2), "nope", 2)
