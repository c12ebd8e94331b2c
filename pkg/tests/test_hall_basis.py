import pytest

from algebra.errors import PreconditionError
from algebra.hall_basis import (
    basic_products,
    check_prefix_stable,
    euler_product,
    generate_basis,
    moebius,
    weight_profile,
    witt_number,
)
from algebra.words import Bracket, Leaf, bracket


def exprs(basis):
    return [entry.expr for entry in basis]


class TestGenerateBasis:
    def test_class_one_is_generators(self):
        assert exprs(generate_basis(2, 1)) == [Leaf(1), Leaf(2)]

    def test_heisenberg(self):
        assert exprs(generate_basis(2, 2)) == [Leaf(1), Leaf(2), Bracket(Leaf(2), Leaf(1))]

    def test_class_three(self):
        basis = generate_basis(2, 3)
        assert len(basis) == 5
        assert [e.expr for e in basis.entries_of_weight(3)] == [
            bracket(Leaf(2), Leaf(1), Leaf(1)),
            bracket(Leaf(2), Leaf(1), Leaf(2)),
        ]

    def test_indices_are_one_based(self):
        basis = generate_basis(3, 2)
        assert [entry.index for entry in basis] == list(range(1, len(basis) + 1))
        assert basis[1].expr == Leaf(1)

    def test_weights_nondecreasing(self):
        weights = generate_basis(3, 4).weights
        assert list(weights) == sorted(weights)

    @pytest.mark.parametrize("q, c", [(2, 6), (3, 4)])
    def test_counts_match_witt(self, q, c):
        profile = weight_profile(generate_basis(q, c))
        assert profile == {w: witt_number(w, q) for w in range(1, c + 1)}

    def test_prefix_stable(self):
        assert check_prefix_stable(generate_basis(2, 2).entries, generate_basis(2, 5).entries)
        assert check_prefix_stable(generate_basis(3, 2).entries, generate_basis(3, 4).entries)

    def test_bracket_links(self):
        basis = generate_basis(2, 2)
        assert basis.bracket_link(2, 1) == 3
        assert basis.bracket_link(3, 1) is None

    def test_to_list(self):
        assert generate_basis(2, 2).to_list()[2] == {'index': 3, 'weight': 2, 'expr': '[x2,x1]'}

    def test_rejects_small_inputs(self):
        with pytest.raises(PreconditionError):
            generate_basis(1, 3)
        with pytest.raises(PreconditionError):
            generate_basis(2, 0)


class TestCounting:
    @pytest.mark.parametrize("d, expected", [(1, 1), (2, -1), (6, 1), (12, 0), (30, -1)])
    def test_moebius(self, d, expected):
        assert moebius(d) == expected

    @pytest.mark.parametrize("w, q, expected", [(1, 5, 5), (2, 2, 1), (3, 2, 2), (6, 2, 9), (2, 3, 3), (3, 3, 8)])
    def test_witt_number(self, w, q, expected):
        assert witt_number(w, q) == expected

    def test_witt_rejects_zero_weight(self):
        with pytest.raises(PreconditionError):
            witt_number(0, 2)

    def test_euler_product(self):
        assert euler_product({1: 2, 2: 1}, 4) == [1, 2, 4, 6, 9]

    def test_euler_product_recovers_free_monoid(self):
        # prod (1 - t^w)^-n(w, q) = 1 / (1 - q t)
        assert euler_product({w: witt_number(w, 2) for w in range(1, 8)}, 7) == [2 ** j for j in range(8)]

    @pytest.mark.parametrize("q, c", [(2, 4), (3, 3)])
    def test_basic_products_count(self, q, c):
        basis = generate_basis(q, c)
        for w in range(1, c + 1):
            assert len(basic_products(basis, w)) == q ** w

    def test_basic_products_above_class(self):
        with pytest.raises(PreconditionError):
            basic_products(generate_basis(2, 2), 3)
