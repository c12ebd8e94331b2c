"""
Random Sampling
Seeded generators of words, group elements and rational vectors.
"""
from fractions import Fraction
from typing import Tuple

import numpy as np

from algebra.collector import GroupElement, NilpotentContext
from algebra.words import Word, free_reduce


def random_word(rng: np.random.Generator, q: int, max_length: int,
                max_exponent: int = 2, min_length: int = 0) -> Word:
    """Word of at most max_length letters with exponents in [-max_exponent, max_exponent]"""
    length = int(rng.integers(min_length, max_length + 1))
    letters = []
    for _ in range(length):
        gen = int(rng.integers(1, q + 1))
        exp = int(rng.integers(1, max_exponent + 1)) * (1 if rng.random() < 0.5 else -1)
        letters.append((gen, exp))
    return free_reduce(letters)


def random_nontrivial_word(rng: np.random.Generator, q: int, max_length: int, max_exponent: int = 2) -> Word:
    while True:
        word = random_word(rng, q, max_length, max_exponent, min_length=1)
        if not word.is_identity():
            return word


def random_element(rng: np.random.Generator, ctx: NilpotentContext, bound: int = 3) -> GroupElement:
    return ctx.element(int(v) for v in rng.integers(-bound, bound + 1, size=ctx.rank))


def random_rational(rng: np.random.Generator, bound: int = 3, max_denominator: int = 4) -> Fraction:
    return Fraction(int(rng.integers(-bound * max_denominator, bound * max_denominator + 1)),
                    int(rng.integers(1, max_denominator + 1)))


def random_rational_vector(rng: np.random.Generator, size: int, bound: int = 3) -> Tuple[Fraction, ...]:
    return tuple(random_rational(rng, bound) for _ in range(size))
