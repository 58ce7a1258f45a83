import pytest

from oscrep.linalg import SliceKey
from oscrep.reps import RepParams
from oscrep.singular import catalog_for, singular_vectors
from oscrep.weyl import Polynomial

SL413 = RepParams("sl", 4, 1, 3)


@pytest.mark.parametrize("l1,l2", [(-1, 0), (0, -1), (-2, 0), (-1, -2)])
def test_unique_singular_vector_in_regime(l1, l2):
    rep = singular_vectors(SL413, SliceKey.bigraded(l1, l2), 6)
    assert rep.count == 1 and rep.exact


def test_two_singular_vectors_above_regime():
    rep = singular_vectors(SL413, SliceKey.bigraded(1, 1), 10)
    assert rep.count == 2 and rep.exact
    assert any(f == Polynomial.parse(SL413.ring, "x2*y3") for f, _ in rep.vectors)


def test_whole_slice_catalog():
    rep = singular_vectors(SL413, SliceKey.bigraded(0, 0), 6, harmonic=False)
    assert rep.catalog == "sl-generic-B" and rep.exact


@pytest.mark.parametrize("n1", [1, 2])
def test_equal_blocks(n1):
    p = RepParams("sl", 2, n1, n1)
    for harmonic in (True, False):
        for l1, l2 in [(0, 0), (-1, 0), (0, -1), (-1, 1)]:
            rep = singular_vectors(p, SliceKey.bigraded(l1, l2), 6, harmonic=harmonic)
            assert rep.exact, (l1, l2, harmonic)


def test_singular_vectors_are_weight_vectors():
    rep = singular_vectors(RepParams("sl", 3, 1, 1), SliceKey.bigraded(-1, 0), 6)
    assert all(len(w.values) == 2 for _, w in rep.vectors)


def test_no_catalog_for_adjacent_blocks():
    assert catalog_for(RepParams("sl", 3, 1, 2), True) is None


def test_report_json():
    data = singular_vectors(SL413, SliceKey.bigraded(-1, 0), 4).to_json()
    assert data["cap"] == 4 and data["slice"] == {"kind": "BIGRADED", "l1": -1, "l2": 0}
