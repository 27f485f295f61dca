import pytest

from corpus import CORPUS, load_diagram, random_diagram
from errors import OracleInputError
from invariants import conway
from laurent import LaurentPoly, compare_up_to_units
from oracle import alexander_via_fox, fox_matrix, fox_row_sums_at_one, wirtinger

KNOTTED = [name for name, entry in CORPUS.items() if entry.connected and entry.crossings]


def test_clasp_kink_presentation(clasp_kink):
    w = wirtinger(clasp_kink)
    assert w.num_colors == 2
    assert len(w.arcs) == 5
    assert len(w.relations) == 5
    assert sorted(arc.color for arc in w.arcs) == [1, 1, 1, 2, 2]
    assert [rel.sign for rel in w.relations] == [1, 1, 1, 1, -1]


def test_fox_rows_vanish_at_one(clasp_kink, trefoil_left):
    for d in (clasp_kink, trefoil_left):
        w = wirtinger(d)
        assert fox_row_sums_at_one(w) == [0] * len(w.relations)
        assert fox_matrix(w).shape == (len(w.relations), len(w.arcs))


@pytest.mark.parametrize("name", KNOTTED)
def test_oracle_matches_corpus(name):
    d = load_diagram(name)
    expected = LaurentPoly.parse(CORPUS[name].alexander, d.num_colors)
    assert compare_up_to_units(alexander_via_fox(wirtinger(d)), expected)


def test_clasp_kink_oracle_value(clasp_kink):
    assert alexander_via_fox(wirtinger(clasp_kink)) == LaurentPoly.parse(
        "t1^(1/2)*t2^(1/2) + t1^(-1/2)*t2^(-1/2)", 2)


def test_oracle_agrees_with_determinant_route(rng):
    for _ in range(12):
        d = random_diagram(rng, 6, rng.choice([1, 2]))
        assert compare_up_to_units(alexander_via_fox(wirtinger(d)), conway(d).alexander)


@pytest.mark.parametrize("name", ["unknot", "split_unknots"])
def test_oracle_rejects_degenerate_inputs(name):
    with pytest.raises(OracleInputError):
        wirtinger(load_diagram(name))
