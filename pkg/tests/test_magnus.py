from fractions import Fraction

import pytest

from algebra.errors import PreconditionError, RingMismatchError, TrivialWordError
from algebra.hall_basis import generate_basis
from algebra.linalg import exact_rank, integer_det
from algebra.magnus import (
    TruncSeries,
    basic_product_matrix,
    dimension_weight,
    hilbert_coeffs,
    iterated_bracket,
    lie_bracket,
    lie_coefficient_rows,
    lie_expand,
    magnus_congruence_defect,
    magnus_embed,
    one,
    residual_witness,
    unit_inverse,
    witness_degree,
)
from algebra.parser import parse_word
from algebra.rings import INTEGERS, RATIONALS, CoeffRing, from_tag, generalized_binomial, prime_field
from algebra.words import Bracket, Leaf, Word


def u(gen, D=2, ring=INTEGERS):
    return TruncSeries.variable(gen, D, ring)


class TestRings:
    def test_tags(self):
        assert from_tag("Z") == INTEGERS
        assert from_tag("Q") == RATIONALS
        assert from_tag("Fp:5") == prime_field(5)
        assert prime_field(7).tag == "Fp:7"

    @pytest.mark.parametrize("tag", ["R", "Fp:4", "Fp:x", "Fp:"])
    def test_bad_tags(self, tag):
        with pytest.raises(PreconditionError):
            from_tag(tag)

    def test_normalize(self):
        assert prime_field(3).normalize(-1) == 2
        assert prime_field(3).normalize(Fraction(1, 2)) == 2
        assert RATIONALS.render(Fraction(3, 6)) == "1/2"
        with pytest.raises(PreconditionError):
            INTEGERS.normalize(Fraction(1, 2))

    def test_inverse(self):
        assert prime_field(5).inverse(2) == 3
        assert INTEGERS.inverse(-1) == -1
        with pytest.raises(PreconditionError):
            INTEGERS.inverse(2)

    def test_unknown_kind(self):
        with pytest.raises(PreconditionError):
            CoeffRing('R')

    def test_generalized_binomial(self):
        assert generalized_binomial(5, 2) == 10
        assert generalized_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
        assert generalized_binomial(-1, 3) == -1


class TestSeriesArithmetic:
    def test_product_of_variables(self):
        assert (u(1) * u(2)).terms == {(1, 2): 1}

    def test_truncation(self):
        assert (u(1) * u(2) * u(1)).is_zero()

    def test_distributivity(self):
        product = (one(2, INTEGERS) + u(1)) * (one(2, INTEGERS) + u(2))
        assert product.terms == {(): 1, (1,): 1, (2,): 1, (1, 2): 1}

    def test_unit_inverse_geometric(self):
        inverse = unit_inverse(one(3, INTEGERS) + u(1, 3))
        assert inverse.terms == {(): 1, (1,): -1, (1, 1): 1, (1, 1, 1): -1}

    def test_unit_inverse_of_one(self):
        assert unit_inverse(one(4, INTEGERS)).is_one()

    def test_unit_inverse_two_variables(self):
        s = one(2, INTEGERS) + u(1) + u(2)
        inverse = unit_inverse(s)
        assert inverse.terms == {(): 1, (1,): -1, (2,): -1, (1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): 1}
        assert (s * inverse).is_one()
        assert (inverse * s).is_one()

    def test_unit_inverse_needs_constant_one(self):
        with pytest.raises(PreconditionError):
            unit_inverse(TruncSeries.scalar(2, 2, INTEGERS))

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            u(1) + u(1, 2, RATIONALS)

    def test_render(self):
        assert str(one(2, INTEGERS) + u(1) - u(1) * u(2)) == "1 + u1 - u1*u2"


class TestMagnusEmbedding:
    def test_generator(self):
        assert magnus_embed(parse_word("x1"), 2, 2).terms == {(): 1, (1,): 1}

    def test_commutator(self):
        assert magnus_embed(parse_word("[x1,x2]"), 2, 2).terms == {(): 1, (1, 2): 1, (2, 1): -1}

    def test_square_over_f3(self):
        assert magnus_embed(parse_word("x1^2"), 1, 1, prime_field(3)).terms == {(): 1, (1,): 2}

    def test_inverse_letter(self):
        assert magnus_embed(parse_word("x1^-1"), 1, 3) == unit_inverse(magnus_embed(parse_word("x1"), 1, 3))

    def test_homomorphism(self):
        a, b = parse_word("x1^2*x2^-1"), parse_word("x2*x1^-3*x2")
        assert magnus_embed(a * b, 2, 4) == magnus_embed(a, 2, 4) * magnus_embed(b, 2, 4)

    def test_lie_expand(self):
        assert lie_expand(Leaf(1), 2, 1).terms == {(1,): 1}
        assert lie_expand(Bracket(Leaf(1), Leaf(2)), 2, 2).terms == {(1, 2): 1, (2, 1): -1}
        nested = lie_expand(Bracket(Bracket(Leaf(1), Leaf(2)), Leaf(1)), 2, 3)
        assert nested.terms == {(1, 1, 2): -1, (1, 2, 1): 2, (2, 1, 1): -1}

    def test_lie_expand_weight_above_degree(self):
        with pytest.raises(PreconditionError):
            lie_expand(Bracket(Leaf(1), Leaf(2)), 2, 1)

    def test_iterated_bracket_matches_repeated_brackets(self):
        a, b = u(1, 4) + u(1, 4) * u(2, 4), u(2, 4)
        repeated = a
        for s in range(4):
            assert iterated_bracket(a, b, s) == repeated
            repeated = lie_bracket(repeated, b)

    @pytest.mark.parametrize("q, c", [(2, 5), (3, 3)])
    def test_congruence_defect_vanishes(self, q, c):
        for entry in generate_basis(q, c):
            assert magnus_congruence_defect(entry.expr, q).is_zero()

    def test_same_weight_lie_elements_independent(self):
        basis = generate_basis(2, 5)
        for w in range(1, 6):
            exprs = [entry.expr for entry in basis.entries_of_weight(w)]
            assert exact_rank(lie_coefficient_rows(exprs, 2, w)) == len(exprs)

    @pytest.mark.parametrize("w", [1, 2, 3, 4])
    def test_basic_products_form_a_basis(self, w):
        assert abs(integer_det(basic_product_matrix(generate_basis(2, 4), w))) == 1


class TestDimensionFiltration:
    @pytest.mark.parametrize("text, expected", [("x1", 1), ("[x1,x2]", 2), ("[x1,x2,x2]", 3), ("x1^2", 1)])
    def test_dimension_weight(self, text, expected):
        assert dimension_weight(parse_word(text), 2, 4, RATIONALS) == expected

    def test_beyond_truncation(self):
        assert dimension_weight(parse_word("[x1,x2,x2]"), 2, 2, RATIONALS) is None
        assert dimension_weight(Word.identity(), 2, 3) is None

    def test_characteristic_p_drops_weight(self):
        # x1^2 - 1 = 2u1 + u1^2 vanishes in degree 1 over F_2
        assert dimension_weight(parse_word("x1^2"), 2, 3, prime_field(2)) == 2

    @pytest.mark.parametrize("q, c, jmax, expected", [
        (2, 1, 3, [1, 2, 3, 4]),
        (2, 2, 4, [1, 2, 4, 6, 9]),
        (2, 3, 3, [1, 2, 4, 8]),
    ])
    def test_hilbert_coeffs(self, q, c, jmax, expected):
        assert hilbert_coeffs(q, c, jmax) == expected


class TestResidualWitness:
    def test_square_at_three(self):
        witness = residual_witness(parse_word("x1^2"), 3)
        assert (witness.N, witness.monomial, witness.coeff) == (1, (1,), 2)
        assert witness.closed_form_coeff == 2
        assert witness.q == 2

    def test_commutator_at_two(self):
        witness = residual_witness(parse_word("[x1,x2]"), 2)
        assert (witness.N, witness.monomial, witness.coeff) == (4, (1, 2, 1, 2), 1)
        assert witness.closed_form_coeff is None

    def test_generator(self):
        witness = residual_witness(parse_word("x1"), 2)
        assert (witness.N, witness.monomial, witness.coeff) == (1, (1,), 1)

    def test_prime_power_exponent(self):
        witness = residual_witness(parse_word("x1^4*x2^6"), 2)
        assert witness.N == 6
        assert witness.monomial == (1, 1, 1, 1, 2, 2)
        assert witness.coeff == witness.closed_form_coeff == 1

    def test_group_order_exponent(self):
        witness = residual_witness(parse_word("x1"), 3, q=2)
        assert witness.group_order_exponent == 2

    def test_trivial_word(self):
        with pytest.raises(TrivialWordError):
            residual_witness(parse_word("x1*x1^-1"), 2)

    def test_degree_cap(self):
        assert witness_degree(parse_word("x1^8"), 2) == 8
        with pytest.raises(PreconditionError):
            residual_witness(parse_word("x1^8"), 2, max_degree=4)
