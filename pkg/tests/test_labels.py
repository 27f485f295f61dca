import pytest

from corpus import CORPUS, load_diagram, random_diagram
from invariants import det_symbolic
from laurent import LaurentPoly, RationalFn
from matrices import build_K, build_tau_symbolic, clasp_diagonal, delete_marked, label_product
from matrices.tau import q_factor
from matrices.utils import match_rectangular
from conftest import poly

# Corner labels of the two-component example link: rows are crossings, columns
# regions a..g; (p, q) stands for t1^(p/2) * t2^(q/2).
LABELS_CLASP_KINK = [
    [(-1, 1), (1, 1), None, None, (1, -1), None, (-1, -1)],
    [(1, -1), (-1, -1), (1, 1), None, (-1, 1), None, None],
    [(-1, 1), None, (-1, -1), (1, 1), (1, -1), None, None],
    [(1, -1), None, None, (-1, -1), (-1, 1), None, (1, 1)],
]
KINK_ROW = [None, None, None, None, "1", "1", "t1 + t1^-1"]


def _cell(value) -> LaurentPoly:
    if value is None:
        return LaurentPoly.zero(2)
    if isinstance(value, str):
        return poly(value)
    return LaurentPoly.monomial(2, value)


def _same(a, b) -> bool:
    return all(x == y for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb))


def test_clasp_kink_label_matrix_golden(clasp_kink):
    golden = [[_cell(v) for v in row] for row in LABELS_CLASP_KINK + [KINK_ROW]]
    K = build_K(clasp_kink)
    assert K.shape == (5, 7)
    assert match_rectangular(K.entries, golden) is not None


def test_label_entries_are_units_or_kink_sums(clasp_kink):
    K = build_K(clasp_kink)
    for row in K.entries[:4]:
        assert sum(1 for value in row if value) == 4
        assert all(value.is_monomial() for value in row if value)
    assert sorted(len(value) for value in K.entries[4] if value) == [1, 1, 2]


@pytest.mark.parametrize("name", [name for name, entry in CORPUS.items() if entry.crossings])
def test_factorization_on_corpus(name):
    d = load_diagram(name)
    assert _same(label_product(build_K(d), clasp_diagonal(d)), build_tau_symbolic(d))


def test_factorization_on_random_diagrams(rng):
    for _ in range(15):
        d = random_diagram(rng, 7, rng.choice([1, 2, 3]))
        assert _same(label_product(build_K(d), clasp_diagonal(d)), build_tau_symbolic(d))


def test_clasp_determinants_are_inverse(clasp_kink):
    S = clasp_diagonal(clasp_kink)
    assert len(S) == 5
    assert S.determinant() * S.inverse_determinant() == RationalFn(LaurentPoly.one(2))


def test_clasp_entry_of_the_kink(clasp_kink):
    S = clasp_diagonal(clasp_kink)
    assert S.entries[4] == RationalFn(poly("4"), q_factor(2, 1) ** 2)


def test_clasp_kink_reduced_label_determinant(clasp_kink):
    det = det_symbolic(delete_marked(build_K(clasp_kink), clasp_kink))
    expected = q_factor(2, 1) * poly("t1*t2 + t1^-1*t2^-1")
    assert det == expected or det == -expected


def test_label_product_rejects_wrong_sizes(clasp_kink, trefoil_right):
    with pytest.raises(ValueError):
        label_product(build_K(clasp_kink), clasp_diagonal(trefoil_right))


def test_json_dump(clasp_kink):
    dumped = build_K(clasp_kink).to_json()
    assert dumped["kind"] == "K"
    assert dumped["crossing_order"] == [0, 1, 2, 3, 4]
    assert len(dumped["entries"]) == 5
