import json
from fractions import Fraction

import pytest

from algebra.collector import nilpotent_context
from algebra.errors import DeserializationError
from algebra.group_law import IntPolynomial
from algebra.hall_basis import generate_basis
from algebra.magnus import magnus_embed, residual_witness
from algebra.matrix_rep import UniTriMatrix, binomial_pow
from algebra.parser import parse_word
from algebra.rings import RATIONALS, prime_field
from algebra.serialization import (
    basis_entries_from_json,
    basis_to_json,
    element_from_json,
    element_to_json,
    matrix_from_json,
    matrix_to_json,
    polynomial_from_json,
    polynomial_to_json,
    render_rational,
    series_from_json,
    series_to_json,
    witness_from_json,
    witness_to_json,
)


def through_json(document):
    return json.loads(json.dumps(document))


class TestDocuments:
    def test_element(self, heisenberg):
        g = heisenberg.element((5, 7, 17))
        document = element_to_json(g)
        assert document == {'q': 2, 'c': 2, 'exponents': ['5', '7', '17']}
        assert element_from_json(through_json(document)) == g

    def test_basis(self):
        basis = generate_basis(2, 3)
        entries = basis_entries_from_json(through_json(basis_to_json(basis)))
        assert [entry['expr'] for entry in entries] == [entry.expr for entry in basis]

    def test_series(self):
        series = magnus_embed(parse_word("[x1,x2]*x1^3"), 2, 3, RATIONALS)
        document = series_to_json(series)
        assert document['terms'][0] == {'mono': [], 'coeff': '1'}
        assert series_from_json(through_json(document)) == series

    def test_witness(self):
        witness = residual_witness(parse_word("x1^2"), 3)
        assert witness_from_json(through_json(witness_to_json(witness))) == witness

    def test_matrix_with_fractions(self):
        matrix = binomial_pow(UniTriMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]], RATIONALS), Fraction(1, 2))
        document = matrix_to_json(matrix)
        assert document['rows'][0] == ['1', '1/2', '-1/8']
        assert matrix_from_json(through_json(document)) == matrix

    def test_matrix_over_prime_field(self):
        matrix = UniTriMatrix([[1, 2], [0, 1]], prime_field(3))
        assert matrix_from_json(through_json(matrix_to_json(matrix))) == matrix

    def test_polynomial(self):
        poly = IntPolynomial(((1, (('xi_3', 1),)), (-2, (('lambda', 2), ('xi_1', 1)))))
        document = polynomial_to_json(poly)
        assert document[1] == {'coeff': '-2', 'factors': [{'var': 'lambda', 'r': 2}, {'var': 'xi_1', 'r': 1}]}
        assert polynomial_from_json(through_json(document)) == poly

    def test_render_rational(self):
        assert render_rational(Fraction(4, 2)) == '2'
        assert render_rational(Fraction(-3, 6)) == '-1/2'


class TestRejections:
    def test_missing_field(self):
        with pytest.raises(DeserializationError):
            element_from_json({'q': 2, 'c': 2})

    def test_wrong_length(self):
        with pytest.raises(DeserializationError):
            element_from_json({'q': 2, 'c': 2, 'exponents': ['1', '2']})

    def test_not_a_number(self):
        with pytest.raises(DeserializationError):
            element_from_json({'q': 2, 'c': 2, 'exponents': ['1', 'two', '3']})

    def test_not_unitriangular(self):
        with pytest.raises(DeserializationError):
            matrix_from_json({'n': 2, 'ring': 'Z', 'rows': [['1', '0'], ['1', '1']]})

    def test_bad_ring(self):
        with pytest.raises(DeserializationError):
            series_from_json({'D': 1, 'ring': 'Fp:6', 'terms': []})

    def test_basis_weight_mismatch(self):
        with pytest.raises(DeserializationError):
            basis_entries_from_json([{'index': 1, 'weight': 2, 'expr': 'x1'}])

    def test_not_an_object(self):
        with pytest.raises(DeserializationError):
            element_from_json(['1', '2', '3'])


def test_context_is_shared(heisenberg):
    assert nilpotent_context(2, 2) is heisenberg
