from fractions import Fraction

import numpy as np
import pytest

from algebra.collector import mul, nilpotent_context, power
from algebra.errors import PreconditionError
from algebra.group_law import (
    IntPolynomial,
    dependency_ok,
    fit_group_law,
    law_commutator,
    law_inverse,
    law_mul,
    law_pow,
)
from algebra.matrix_rep import binomial_pow, regular_rep
from algebra.rings import RATIONALS
from check_engine.sampling import random_element, random_rational, random_rational_vector


@pytest.fixture(scope='module')
def heisenberg_law():
    return fit_group_law(nilpotent_context(2, 2), validation_size=30)


@pytest.fixture(scope='module')
def class_three_law():
    return fit_group_law(nilpotent_context(2, 3), validation_size=30)


def as_fractions(*values):
    return tuple(Fraction(v) for v in values)


class TestHeisenbergLaw:
    def test_abelian_coordinates_add(self, heisenberg_law):
        assert set(heisenberg_law.mul_polys[0].terms) == {(1, (('xi_1', 1),)), (1, (('eta_1', 1),))}
        assert set(heisenberg_law.mul_polys[1].terms) == {(1, (('xi_2', 1),)), (1, (('eta_2', 1),))}

    def test_central_coordinate(self, heisenberg_law):
        assert set(heisenberg_law.mul_polys[2].terms) == {
            (1, (('xi_3', 1),)),
            (1, (('eta_3', 1),)),
            (1, (('xi_2', 1), ('eta_1', 1))),
        }

    def test_power_polynomial(self, heisenberg_law):
        assert set(heisenberg_law.pow_polys[2].terms) == {
            (1, (('lambda', 1), ('xi_3', 1))),
            (1, (('lambda', 2), ('xi_1', 1), ('xi_2', 1))),
        }

    def test_mul(self, heisenberg_law):
        assert law_mul(heisenberg_law, (1, 2, 3), (4, 5, 6)) == as_fractions(5, 7, 17)

    def test_square_root(self, heisenberg_law):
        assert law_pow(heisenberg_law, (2, 2, 3), Fraction(1, 2)) == as_fractions(1, 1, 1)
        assert law_pow(heisenberg_law, (1, 1, 1), 2) == as_fractions(2, 2, 3)

    def test_zero_exponent(self, heisenberg_law):
        assert law_pow(heisenberg_law, (Fraction(1, 3), 2, -5), 0) == as_fractions(0, 0, 0)

    def test_cube(self, heisenberg_law):
        assert law_pow(heisenberg_law, (1, 1, 0), 3) == as_fractions(3, 3, 3)

    def test_commutator(self, heisenberg_law):
        assert law_commutator(heisenberg_law, (1, 0, 0), (0, 1, 0)) == as_fractions(0, 0, -1)

    def test_length_mismatch(self, heisenberg_law):
        with pytest.raises(PreconditionError):
            law_mul(heisenberg_law, (1, 2), (1, 2, 3))

    def test_matches_matrix_roots(self, heisenberg_law, heisenberg):
        rep = regular_rep(2, 2, RATIONALS)
        a = (Fraction(2), Fraction(-1, 3), Fraction(5, 2))
        root = law_pow(heisenberg_law, a, Fraction(1, 3))
        assert rep.evaluate_coordinates(root, heisenberg.basis) == binomial_pow(
            rep.evaluate_coordinates(a, heisenberg.basis), Fraction(1, 3)
        )


class TestClassThreeLaw:
    def test_triangular(self, class_three_law):
        assert dependency_ok(class_three_law)

    def test_agrees_with_collector(self, class_three_law, ctx23, rng):
        for _ in range(10):
            g, h = random_element(rng, ctx23), random_element(rng, ctx23)
            assert law_mul(class_three_law, g.exponents, h.exponents) == as_fractions(*mul(g, h).exponents)
            n = int(rng.integers(-4, 5))
            assert law_pow(class_three_law, g.exponents, n) == as_fractions(*power(g, n).exponents)

    def test_group_axioms_at_rational_points(self, class_three_law):
        rng = np.random.default_rng(1)
        zero = as_fractions(*([0] * class_three_law.rank))
        for _ in range(5):
            a, b, c = (random_rational_vector(rng, class_three_law.rank) for _ in range(3))
            assert law_mul(class_three_law, law_mul(class_three_law, a, b), c) == \
                law_mul(class_three_law, a, law_mul(class_three_law, b, c))
            assert law_mul(class_three_law, a, zero) == a
            assert law_mul(class_three_law, a, law_inverse(class_three_law, a)) == zero

    def test_exponent_laws(self, class_three_law):
        rng = np.random.default_rng(2)
        for _ in range(5):
            a = random_rational_vector(rng, class_three_law.rank)
            lam, mu = random_rational(rng), random_rational(rng)
            assert law_pow(class_three_law, a, lam + mu) == law_mul(
                class_three_law, law_pow(class_three_law, a, lam), law_pow(class_three_law, a, mu)
            )
            assert law_pow(class_three_law, a, lam * mu) == law_pow(
                class_three_law, law_pow(class_three_law, a, lam), mu
            )


def test_class_bound():
    with pytest.raises(PreconditionError):
        fit_group_law(nilpotent_context(2, 2), max_class=1)


def test_polynomial_rendering():
    poly = IntPolynomial(((1, (('xi_3', 1),)), (-2, (('lambda', 2), ('xi_1', 1)))))
    assert str(poly) == "xi_3 - 2*C(lambda,2)*xi_1"
    assert poly.evaluate({'xi_3': Fraction(1), 'lambda': Fraction(3), 'xi_1': Fraction(2)}) == -11
    assert poly.variables() == {'xi_3', 'lambda', 'xi_1'}
