import cmath
import math
import random
from fractions import Fraction

import pytest

from errors import InvalidPointError, NonExactDivisionError, PoleError, VariableMismatchError
from laurent import (LaurentPoly, RationalFn, TorusPoint, compare_up_to_units, eval_complex, phi, poly_arith,
                     poly_exact_div)
from conftest import poly


def test_parse_and_render():
    p = poly("t1*t2 - 1/2*t1^(-1/2) + 3")
    assert p.terms == {(2, 2): 1, (-1, 0): Fraction(-1, 2), (0, 0): 3}
    assert LaurentPoly.parse(p.to_string(), 2) == p
    assert poly("0").to_string() == "0"


def test_parse_rejects_unknown_variable():
    with pytest.raises(VariableMismatchError):
        LaurentPoly.parse("t3", 2)
    with pytest.raises(ValueError):
        LaurentPoly.parse("t1 + x", 1)


def test_arithmetic():
    t = poly("t1", 1)
    assert (t - 1) * (t + 1) == poly("t1^2 - 1", 1)
    assert poly_arith(t, t, "add") == t.scale(2)
    assert (t ** -2) * t * t == 1
    with pytest.raises(ValueError):
        poly("1 + t1", 1) ** -1
    with pytest.raises(VariableMismatchError):
        poly("t1", 1) + poly("t1")


def test_exact_division():
    a = poly("t1^2 - t2^2")
    assert a.exact_div(poly("t1 - t2")) == poly("t1 + t2")
    assert a.exact_div(poly("2*t1^-1")) == poly("1/2*t1^3 - 1/2*t1*t2^2")
    with pytest.raises(NonExactDivisionError):
        a.exact_div(poly("t1 - 2*t2"))
    assert poly("t1 + 1", 1).divides(poly("t1^2 + 2*t1 + 1", 1))


def test_phi_is_an_involution():
    p = poly("t1^(1/2)*t2^-1 + 4 - t2^3")
    assert p.phi() == poly("t1^(-1/2)*t2 + 4 - t2^-3")
    assert p.phi().phi() == p


def test_evaluate_uses_half_angles():
    t = poly("t1^(1/2)", 1)
    assert cmath.isclose(t.evaluate(TorusPoint.of(math.pi)), 1j)
    x = poly("1/2*t1 + 1/2*t1^-1", 1)
    assert math.isclose(x.evaluate([1.2]).real, math.cos(1.2))


def test_contract_and_center():
    p = poly("t1^2 + 1", 1)
    assert p.contract_exponents(2) == poly("t1 + 1", 1)
    assert poly("1 + t1*t2").centered() == poly("t1^(1/2)*t2^(1/2) + t1^(-1/2)*t2^(-1/2)")
    assert poly("-t1 + 1", 1).with_positive_lead() == poly("t1 - 1", 1)


def test_compare_up_to_units():
    assert compare_up_to_units(poly("1 + t1*t2"), poly("-t1^-1*t2^-1 - 1"))
    assert compare_up_to_units(poly("t1 - 1 + t1^-1", 1), poly("t1^2 - t1 + 1", 1))
    assert not compare_up_to_units(poly("t1 - 1 + t1^-1", 1), poly("t1 - 3 + t1^-1", 1))
    assert not compare_up_to_units(poly("2*t1", 1), poly("t1", 1))


def test_rational_functions():
    t = poly("t1", 1)
    total = RationalFn(poly("1", 1), t - 1) + RationalFn(poly("1", 1), t + 1)
    assert total == RationalFn(t.scale(2), t * t - 1)
    assert (total * (t * t - 1)).as_laurent() == t.scale(2)
    assert RationalFn(t * t - 1, t - 1).as_laurent() == t + 1
    with pytest.raises(NonExactDivisionError):
        RationalFn(t, t - 1).as_laurent()
    assert RationalFn(t, t - 1).phi() == RationalFn(poly("1", 1), 1 - t)


def test_rational_normal_form():
    value = RationalFn(poly("3*t1^-1", 1), poly("-6*t1^-1 + 6", 1))
    assert value.denominator == poly("t1 - 1", 1)
    assert value.numerator == poly("1/2", 1)


def test_pole_is_reported():
    q = RationalFn(poly("1", 1), poly("t1 - t1^-1", 1))
    with pytest.raises(PoleError):
        q.evaluate([0.0])
    assert cmath.isclose(q.evaluate([math.pi / 2]), 1 / (2j))


def test_torus_points():
    p = TorusPoint.parse("3.14159265, 1.0")
    assert p.num_vars == 2
    assert p.square_root().thetas == (3.14159265 / 2, 0.5)
    for bad in ("0", "6.3", "nan", "", "a,b"):
        with pytest.raises(InvalidPointError):
            TorusPoint.parse(bad)


# --- Randomized ring properties ---

def random_poly(rng: random.Random, num_vars: int, max_terms: int = 4, spread: int = 4) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(-spread, spread) for _ in range(num_vars))
        terms[exps] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return LaurentPoly(num_vars, terms)


def random_nonzero_poly(rng: random.Random, num_vars: int) -> LaurentPoly:
    while True:
        p = random_poly(rng, num_vars, max_terms=3, spread=3)
        if p:
            return p


def test_ring_axioms_on_random_polynomials():
    rng = random.Random(1729)
    for _ in range(1000):
        n = rng.randint(1, 3)
        a, b, c = (random_poly(rng, n) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + LaurentPoly.zero(n) == a
        assert a * LaurentPoly.one(n) == a
        assert (a - a).is_zero()


def test_exact_division_undoes_multiplication():
    rng = random.Random(4104)
    for _ in range(300):
        n = rng.randint(1, 3)
        a, b = random_poly(rng, n), random_nonzero_poly(rng, n)
        assert poly_exact_div(a * b, b) == a


def test_phi_is_multiplicative():
    rng = random.Random(65537)
    for _ in range(300):
        n = rng.randint(1, 3)
        a, b = random_poly(rng, n), random_poly(rng, n)
        assert phi(a * b) == phi(a) * phi(b)
        assert phi(a + b) == phi(a) + phi(b)


def test_phi_conjugates_values_on_the_torus():
    rng = random.Random(8128)
    for _ in range(300):
        n = rng.randint(1, 3)
        a = random_poly(rng, n)
        point = TorusPoint.of(*(rng.uniform(0.01, 2 * math.pi - 0.01) for _ in range(n)))
        assert abs(eval_complex(phi(a), point) - eval_complex(a, point).conjugate()) <= 1e-12
