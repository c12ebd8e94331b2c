import pytest

from algebra.collector import (
    collect,
    commutator,
    inv,
    lcs_weight,
    mul,
    nilpotent_context,
    power,
    representative_word,
    substitute,
)
from algebra.errors import ContextMismatchError, GeneratorRangeError, PreconditionError
from algebra.parser import parse_word
from algebra.words import Word, expand_commutator
from check_engine.sampling import random_element, random_word


class TestCollect:
    def test_swap(self, heisenberg):
        assert collect(heisenberg, parse_word("x2*x1")).exponents == (1, 1, 1)

    def test_commutator_of_generators(self, heisenberg):
        assert collect(heisenberg, parse_word("[x1,x2]")).exponents == (0, 0, -1)

    def test_identity(self, heisenberg):
        assert collect(heisenberg, Word.identity()).is_identity()

    @pytest.mark.parametrize("q, c", [(2, 4), (3, 3)])
    def test_basis_entries_collect_to_units(self, q, c):
        ctx = nilpotent_context(q, c)
        for entry in ctx.basis:
            assert collect(ctx, expand_commutator(entry.expr)) == ctx.unit(entry.index)

    def test_hall_witt(self):
        ctx = nilpotent_context(3, 5)
        word = parse_word(
            "x2^-1*[x1,x2^-1,x3]*x2 * x3^-1*[x2,x3^-1,x1]*x3 * x1^-1*[x3,x1^-1,x2]*x1"
        )
        assert collect(ctx, word).is_identity()

    def test_weight_above_class_vanishes(self, heisenberg):
        assert collect(heisenberg, parse_word("[x1,x2,x2]")).is_identity()

    def test_generator_range(self, heisenberg):
        with pytest.raises(GeneratorRangeError):
            collect(heisenberg, parse_word("x3"))

    def test_collect_is_homomorphic(self, ctx23, rng):
        for _ in range(20):
            u, v = random_word(rng, 2, 6), random_word(rng, 2, 6)
            assert collect(ctx23, u * v) == mul(collect(ctx23, u), collect(ctx23, v))


class TestArithmetic:
    def test_mul(self, heisenberg):
        a, b = heisenberg.element((1, 2, 3)), heisenberg.element((4, 5, 6))
        assert mul(a, b).exponents == (5, 7, 17)

    def test_pow(self, heisenberg):
        assert power(heisenberg.element((1, 1, 0)), 3).exponents == (3, 3, 3)

    def test_negative_pow_is_inverse_power(self, ctx23):
        a = ctx23.element((1, -2, 3, 0, 1))
        assert power(a, -3) == power(inv(a), 3)
        assert power(a, 0).is_identity()

    def test_inverse(self, ctx23, rng):
        for _ in range(10):
            a = random_element(rng, ctx23)
            assert mul(a, inv(a)).is_identity()
            assert mul(inv(a), a).is_identity()

    def test_associative(self, ctx23, rng):
        for _ in range(10):
            a, b, c = (random_element(rng, ctx23) for _ in range(3))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))

    def test_operators(self, heisenberg):
        a = heisenberg.element((1, 2, 3))
        assert a * ~a == heisenberg.identity()
        assert a ** 2 == mul(a, a)
        assert str(a) == "(1,2,3)"

    def test_commutator(self, heisenberg):
        assert commutator(heisenberg.unit(1), heisenberg.unit(2)).exponents == (0, 0, -1)

    def test_context_mismatch(self, heisenberg, ctx23):
        with pytest.raises(ContextMismatchError):
            mul(heisenberg.unit(1), ctx23.unit(1))

    def test_wrong_length(self, heisenberg):
        with pytest.raises(PreconditionError):
            heisenberg.element((1, 2))


class TestLcsWeight:
    def test_identity(self, heisenberg):
        assert lcs_weight(heisenberg.identity()) == 3

    def test_central(self, heisenberg):
        assert lcs_weight(heisenberg.element((0, 0, 1))) == 2

    def test_triple_commutator(self, ctx23):
        assert lcs_weight(collect(ctx23, parse_word("[x1,x2,x2]"))) == 3


class TestWordsAndSubstitution:
    def test_representative_word(self, ctx23, rng):
        for _ in range(10):
            g = random_element(rng, ctx23)
            assert collect(ctx23, representative_word(g)) == g

    def test_identity_substitution(self, ctx23, rng):
        g = random_element(rng, ctx23)
        assert substitute(g, [Word.generator(1), Word.generator(2)]) == g

    def test_swap_substitution(self, heisenberg):
        g = collect(heisenberg, parse_word("x2*x1"))
        assert substitute(g, [Word.generator(2), Word.generator(1)]).exponents == (1, 1, 0)

    def test_substitution_is_homomorphic(self, ctx23, rng):
        images = [random_word(rng, 2, 4), random_word(rng, 2, 4)]
        for _ in range(5):
            u, v = random_word(rng, 2, 5), random_word(rng, 2, 5)
            g, h = collect(ctx23, u), collect(ctx23, v)
            assert substitute(mul(g, h), images) == mul(substitute(g, images), substitute(h, images))

    def test_substitution_needs_q_images(self, heisenberg):
        with pytest.raises(PreconditionError):
            substitute(heisenberg.unit(1), [Word.generator(1)])
