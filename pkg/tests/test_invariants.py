import io
import itertools
import math

import numpy as np
import pytest

from corpus import load_diagram, random_diagram
from diagram import linking_number, reverse_components
from errors import ColoringError, ConsistencyAlarm, DisconnectedDiagramError, VariableMismatchError
from invariants import (alexander_from, check_color_merge, conway, det_sign_change_between, diagram_info,
                        grid_points, inertia, signature_at, signature_grid, write_grid_csv, xi_invariant)
from laurent import LaurentPoly, RationalFn, TorusPoint, compare_up_to_units
from matrices.tau import q_factor
from conftest import MINUS_ONE_2, poly


def _clasp_kink_sigma(point: TorusPoint) -> int:
    return int(np.sign(math.cos(sum(point.thetas) / 2)))


def test_inertia_counts():
    result = inertia(np.diag([3.0, -1.0, 0.0, 1e-14, 2.0]))
    assert (result.n_pos, result.n_neg, result.n_zero) == (2, 1, 2)
    assert result.signature == 1
    assert result.dim == 5
    empty = inertia(np.zeros((0, 0)))
    assert empty.dim == 0


def test_ldl_agrees_with_eigh(rng):
    generator = np.random.default_rng(7)
    for _ in range(20):
        size = rng.randint(1, 8)
        rank = rng.randint(0, size)
        basis = generator.normal(size=(size, rank))
        weights = np.diag(generator.choice([-1.0, 1.0], size=rank))
        m = basis @ weights @ basis.T
        a, b = inertia(m, method="eigh"), inertia(m, method="ldl")
        assert (a.n_pos, a.n_neg, a.n_zero) == (b.n_pos, b.n_neg, b.n_zero)


def test_inertia_rejects_unknown_method():
    with pytest.raises(ValueError):
        inertia(np.eye(2), method="qr")


def test_clasp_kink_at_minus_one(clasp_kink):
    result = signature_at(clasp_kink, MINUS_ONE_2)
    assert (result.sigma, result.eta) == (-1, 0)
    assert result.inertia.signature == -3
    assert (result.inertia.n_pos, result.inertia.n_neg) == (1, 4)
    assert not result.near_degenerate


def test_clasp_kink_closed_form_on_grid(clasp_kink):
    for point in grid_points(2, 10):
        result = signature_at(clasp_kink, point)
        assert result.eta == 0
        assert result.sigma == _clasp_kink_sigma(point)


@pytest.mark.parametrize("theta", [0.2, 1.0, math.pi / 2, 2.9])
def test_clasp_kink_nullity_on_the_locus(clasp_kink, theta):
    assert signature_at(clasp_kink, TorusPoint.of(theta, math.pi - theta)).eta == 1
    assert signature_at(clasp_kink, TorusPoint.of(theta + math.pi, 2 * math.pi - theta)).eta == 1


def test_trefoil_signatures(trefoil_right, trefoil_left):
    assert signature_at(trefoil_right, TorusPoint.of(math.pi)).sigma == -2
    assert signature_at(trefoil_left, TorusPoint.of(math.pi)).sigma == 2
    assert signature_at(trefoil_right, TorusPoint.of(0.5)).sigma == 0
    root = signature_at(trefoil_right, TorusPoint.of(math.pi / 3))
    assert root.eta == 1


def test_hopf_signature_vanishes(hopf):
    for point in grid_points(2, 5):
        result = signature_at(hopf, point)
        assert (result.sigma, result.eta) == (0, 0)


def test_unknot_and_split_unknots():
    unknot = signature_at(load_diagram("unknot"), TorusPoint.of(1.0))
    assert (unknot.sigma, unknot.eta, unknot.inertia.dim) == (0, 0, 0)
    split = load_diagram("split_unknots")
    for point in grid_points(2, 3):
        assert signature_at(split, point).eta >= 1


def test_parity_holds_on_random_diagrams(rng):
    for _ in range(20):
        d = random_diagram(rng, 8, rng.choice([1, 2]))
        for _ in range(4):
            point = TorusPoint.of(*(rng.uniform(0.05, 6.2) for _ in range(d.num_colors)))
            result = signature_at(d, point)
            assert result.inertia.dim == len(d.regions) - 2
            assert abs(result.sigma) + result.eta <= len(d.regions)


def test_signature_is_locally_constant(clasp_kink):
    p, q = TorusPoint.of(1.0, 1.0), TorusPoint.of(1.0, 1.5)
    assert not det_sign_change_between(clasp_kink, p, q, depth=5)
    assert signature_at(clasp_kink, p).sigma == signature_at(clasp_kink, q).sigma


def test_determinant_keeps_its_sign_across_the_nullity_locus(clasp_kink):
    # Two eigenvalues change sign together on w1 w2 = -1.
    p, q = TorusPoint.of(1.0, 1.0), TorusPoint.of(2.2, 2.2)
    assert not det_sign_change_between(clasp_kink, p, q, depth=5)
    assert signature_at(clasp_kink, p).sigma - signature_at(clasp_kink, q).sigma == 2


def test_point_dimension_is_checked(clasp_kink):
    with pytest.raises(VariableMismatchError):
        signature_at(clasp_kink, TorusPoint.of(1.0))


def test_grid_csv(clasp_kink):
    results = signature_grid(clasp_kink, 3, jobs=1)
    assert len(results) == 9
    stream = io.StringIO()
    write_grid_csv(results, stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == "theta1,theta2,sigma,eta,near_degenerate"
    assert len(lines) == 10
    first = lines[1].split(",")
    assert float(first[0]) == pytest.approx(2 * math.pi / 4)
    assert first[-1] in ("true", "false")


def test_grid_workers_agree(trefoil_right):
    serial = signature_grid(trefoil_right, 12, jobs=1)
    parallel = signature_grid(trefoil_right, 12, jobs=2)
    assert [(r.point, r.sigma, r.eta) for r in serial] == [(r.point, r.sigma, r.eta) for r in parallel]


def test_grid_resolution_must_be_positive():
    with pytest.raises(ValueError):
        grid_points(2, 0)
    assert len(grid_points(2, 1)) == 1


def test_xi(trefoil_right, hopf, clasp_kink):
    assert xi_invariant(trefoil_right) == -2
    assert xi_invariant(hopf) == 0
    assert xi_invariant(clasp_kink) == -1


def _component_subsets(d):
    indices = range(len(d.components))
    return [subset for size in range(len(d.components) + 1) for subset in itertools.combinations(indices, size)]


@pytest.mark.parametrize("name, expected", [("hopf", 0), ("clasp_kink", -1), ("whitehead", 1)])
def test_xi_ignores_component_orientations(name, expected):
    d = load_diagram(name)
    assert {xi_invariant(reverse_components(d, subset)) for subset in _component_subsets(d)} == {expected}


@pytest.mark.parametrize("name", ["hopf", "clasp_kink", "whitehead"])
def test_xi_is_one_color_signature_plus_linking(name):
    for subset in _component_subsets(load_diagram(name)):
        d = reverse_components(load_diagram(name), subset)
        one_color = d.with_colors({e: 1 for e in d.edges})
        linking = sum(linking_number(d, i, j) for i, j in itertools.combinations(range(len(d.components)), 2))
        assert xi_invariant(d) == signature_at(one_color, TorusPoint.of(math.pi)).sigma + linking


def test_conway_clasp_kink(clasp_kink):
    result = conway(clasp_kink)
    nabla = RationalFn(poly("t1*t2 + t1^-1*t2^-1"))
    assert result.consistency_ok
    assert result.nabla_up_to_sign == nabla or result.nabla_up_to_sign == -nabla
    assert result.nabla_sq == nabla * nabla
    assert result.alexander == poly("t1^(1/2)*t2^(1/2) + t1^(-1/2)*t2^(-1/2)")


def test_conway_trefoil(trefoil_right):
    result = conway(trefoil_right)
    assert result.alexander == LaurentPoly.parse("t1 - 1 + t1^-1", 1)
    numerator = (result.nabla_up_to_sign * q_factor(1, 1)).as_laurent()
    assert compare_up_to_units(numerator, LaurentPoly.parse("t1^2 - 1 + t1^-2", 1))


@pytest.mark.parametrize("name, expected", [
    ("figure_eight", "t1 - 3 + t1^-1"),
    ("whitehead", "t1*t2 - t1 - t2 + 1"),
    ("hopf", "1"),
    ("unknot", "1"),
])
def test_conway_alexander(name, expected):
    d = load_diagram(name)
    result = conway(d)
    assert result.consistency_ok
    assert compare_up_to_units(result.alexander, LaurentPoly.parse(expected, d.num_colors))


def test_unknot_conway_function():
    result = conway(load_diagram("unknot"))
    q1 = q_factor(1, 1)
    assert result.nabla_sq == RationalFn(LaurentPoly.one(1), q1 * q1)


def test_conway_needs_connected_diagram():
    with pytest.raises(DisconnectedDiagramError):
        conway(load_diagram("split_unknots"))


def test_routes_agree_on_random_diagrams(rng):
    for _ in range(6):
        d = random_diagram(rng, 6, rng.choice([1, 2]))
        assert conway(d, strict=True).consistency_ok


def test_alexander_from_rejects_odd_exponents():
    assert alexander_from(poly("t1^2 + 1", 1)) == poly("t1^(1/2) + t1^(-1/2)", 1)
    with pytest.raises(ConsistencyAlarm):
        alexander_from(poly("t1 + 1", 1))


def test_color_merge(clasp_kink):
    report = check_color_merge(clasp_kink, 1, 2, TorusPoint.of(1.0))
    assert report.linking_sum == 2
    assert report.status == "pass"
    assert report.merged_sigma == report.original_sigma - 2
    with pytest.raises(ColoringError):
        check_color_merge(load_diagram("trefoil_right"), 1, 2, TorusPoint.of(1.0))


def test_color_merge_on_random_links(rng):
    for _ in range(5):
        d = random_diagram(rng, 7, 2)
        for _ in range(3):
            report = check_color_merge(d, 1, 2, TorusPoint.of(rng.uniform(0.1, 6.1)))
            assert report.status in ("pass", "skipped")


def test_diagram_info(clasp_kink):
    info = diagram_info(clasp_kink)
    assert info.crossings == 5
    assert info.regions == 7
    assert info.w_m == -1
    assert info.linking_numbers == [[0, 2], [2, 0]]
    assert info.connected
