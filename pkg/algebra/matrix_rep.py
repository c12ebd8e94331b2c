"""
Matrix Representations
Unitriangular matrix groups T_n over Z, Q and F_p, binomial powers and roots,
and the regular representation of free nilpotent groups.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence

import numpy as np

from .collector import GroupElement, representative_word
from .errors import PreconditionError, RingMismatchError
from .magnus import Monomial, TruncSeries, magnus_embed
from .rings import RATIONALS, CoeffRing, Scalar, generalized_binomial, prime_field
from .words import Word, expand_commutator

logger = logging.getLogger(__name__)


class UniTriMatrix:
    """Upper unitriangular n x n matrix with exact entries"""

    def __init__(self, entries, ring: CoeffRing):
        array = np.array(entries, dtype=object)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise PreconditionError(f"Expected a square matrix, got shape {array.shape}")
        n = array.shape[0]
        for i in range(n):
            for j in range(n):
                array[i, j] = ring.normalize(array[i, j])
        for i in range(n):
            if array[i, i] != 1 or any(array[i, j] != 0 for j in range(i)):
                raise PreconditionError("Matrix is not upper unitriangular")
        self.entries = array
        self.ring = ring
        self.n = n

    @classmethod
    def identity(cls, n: int, ring: CoeffRing) -> 'UniTriMatrix':
        return cls(_identity_array(n), ring)

    @classmethod
    def elementary(cls, n: int, i: int, j: int, ring: CoeffRing, value: Scalar = 1) -> 'UniTriMatrix':
        """I + value * e_ij with 1-based i < j"""
        if not 1 <= i < j <= n:
            raise PreconditionError(f"Elementary matrix needs 1 <= i < j <= n, got i={i}, j={j}, n={n}")
        array = _identity_array(n)
        array[i - 1, j - 1] = value
        return cls(array, ring)

    def _wrap(self, array) -> 'UniTriMatrix':
        return UniTriMatrix(array, self.ring)

    def _check(self, other: 'UniTriMatrix') -> None:
        if self.n != other.n:
            raise RingMismatchError(f"Matrix dimensions differ: {self.n} vs {other.n}")
        self.ring.check_same(other.ring)

    def nilpotent_part(self):
        """u = a - I as a raw object array"""
        return self.entries - _identity_array(self.n)

    def __matmul__(self, other: 'UniTriMatrix') -> 'UniTriMatrix':
        self._check(other)
        return self._wrap(self.entries.dot(other.entries))

    __mul__ = __matmul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniTriMatrix):
            return NotImplemented
        return self.n == other.n and self.ring == other.ring and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.n, self.ring, tuple(self.entries.flatten())))

    def is_identity(self) -> bool:
        return not any(self.entries[i, j] for i in range(self.n) for j in range(i + 1, self.n))

    def rows(self) -> List[List[Scalar]]:
        return [list(row) for row in self.entries]

    def __repr__(self) -> str:
        body = '; '.join(' '.join(self.ring.render(v) for v in row) for row in self.entries)
        return f"UniTriMatrix({self.ring.tag}, [{body}])"


def _identity_array(n: int):
    array = np.zeros((n, n), dtype=object)
    for i in range(n):
        array[i, i] = 1
    return array


def mat_mul(a: UniTriMatrix, b: UniTriMatrix) -> UniTriMatrix:
    return a @ b


def mat_inv(a: UniTriMatrix) -> UniTriMatrix:
    """(I + u)^-1 = I - u + u^2 - ... with u^n = 0"""
    u = a.nilpotent_part()
    result = _identity_array(a.n)
    term = _identity_array(a.n)
    for _ in range(a.n - 1):
        term = -term.dot(u)
        result = result + term
    return UniTriMatrix(result, a.ring)


def mat_pow(a: UniTriMatrix, exponent: int) -> UniTriMatrix:
    if exponent < 0:
        return mat_pow(mat_inv(a), -exponent)
    result = UniTriMatrix.identity(a.n, a.ring)
    base = a
    while exponent:
        if exponent & 1:
            result = result @ base
        exponent >>= 1
        if exponent:
            base = base @ base
    return result


def mat_commutator(a: UniTriMatrix, b: UniTriMatrix) -> UniTriMatrix:
    """[a, b] = a^-1 b^-1 a b"""
    return mat_inv(a) @ mat_inv(b) @ a @ b


def left_normed_commutator(matrices: Sequence[UniTriMatrix]) -> UniTriMatrix:
    result = matrices[0]
    for matrix in matrices[1:]:
        result = mat_commutator(result, matrix)
    return result


def binomial_pow(a: UniTriMatrix, exponent) -> UniTriMatrix:
    """
    a^lambda = sum over k < n of C(lambda, k) u^k, with u = a - I.

    Args:
        a: Matrix over the rationals
        exponent: Rational exponent; 1/m gives the unique m-th root

    Returns:
        UniTriMatrix over the rationals
    """
    if a.ring != RATIONALS:
        raise PreconditionError(f"binomial_pow needs a matrix over Q, got {a.ring.tag}")
    exponent = Fraction(exponent)
    u = a.nilpotent_part()
    result = _identity_array(a.n)
    term = _identity_array(a.n)
    for k in range(1, a.n):
        term = term.dot(u)
        result = result + term * generalized_binomial(exponent, k)
    return UniTriMatrix(result, RATIONALS)


def level(a: UniTriMatrix) -> int:
    """Smallest d >= 1 with a nonzero entry on superdiagonal d; n for the identity"""
    for d in range(1, a.n):
        if any(a.entries[i, i + d] for i in range(a.n - d)):
            return d
    return a.n


def class_witness(n: int, p: int) -> List[UniTriMatrix]:
    """t_k = I + e_(k,k+1) over F_p; their left-normed commutator is I + e_(1,n)"""
    if n < 2:
        raise PreconditionError(f"class_witness needs n >= 2, got {n}")
    ring = prime_field(p)
    return [UniTriMatrix.elementary(n, k, k + 1, ring) for k in range(1, n)]


def random_unitriangular(n: int, ring: CoeffRing, rng: np.random.Generator,
                         min_level: int = 1, bound: int = 3) -> UniTriMatrix:
    """Random element of K_min_level in T_n with entries drawn from [-bound, bound]"""
    array = _identity_array(n)
    for i in range(n):
        for j in range(i + min_level, n):
            array[i, j] = int(rng.integers(-bound, bound + 1))
    return UniTriMatrix(array, ring)


# ============ Regular representation ============

def _basis_monomials(q: int, c: int) -> List[Monomial]:
    """Monomials of degree <= c ordered by degree, then lexicographically"""
    monomials: List[Monomial] = [()]
    layer: List[Monomial] = [()]
    for _ in range(c):
        layer = [m + (gen,) for m in layer for gen in range(1, q + 1)]
        monomials.extend(layer)
    return monomials


@dataclass(frozen=True)
class RegularImage:
    """
    Right multiplication by a Magnus image on the truncated free algebra.

    Equal to the dense regular-representation matrix of the word, kept as
    a series so that large dimensions stay tractable.
    """
    rep: 'RegularRepresentation'
    series: TruncSeries

    def is_identity(self) -> bool:
        return self.series.is_one()

    def __matmul__(self, other: 'RegularImage') -> 'RegularImage':
        return RegularImage(self.rep, self.series * other.series)

    def power(self, n: int) -> 'RegularImage':
        return RegularImage(self.rep, self.series ** n)

    def matrix(self) -> UniTriMatrix:
        return self.rep.operator_matrix(self.series)


class RegularRepresentation:
    """
    Regular representation of F / gamma_(c+1)(F) on the monomials of degree <= c.

    Row vectors act on the right, so the matrix of x_i has, in the row of
    a monomial m, a 1 at m and a 1 at m*u_i. Ordering by degree keeps every
    matrix unitriangular.
    """

    def __init__(self, q: int, c: int, ring: CoeffRing, max_dimension: Optional[int] = None):
        if q < 2 or c < 1:
            raise PreconditionError(f"Regular representation needs q >= 2 and c >= 1, got q={q}, c={c}")
        self.q = q
        self.c = c
        self.ring = ring
        self.dimension = sum(q ** j for j in range(c + 1))
        self.max_dimension = max_dimension

    @cached_property
    def monomials(self) -> List[Monomial]:
        return _basis_monomials(self.q, self.c)

    @cached_property
    def positions(self) -> Dict[Monomial, int]:
        return {m: k for k, m in enumerate(self.monomials)}

    def _check_dimension(self) -> None:
        if self.max_dimension is not None and self.dimension > self.max_dimension:
            raise PreconditionError(
                f"Representation dimension {self.dimension} exceeds the cap {self.max_dimension}"
            )

    def operator_matrix(self, series: TruncSeries) -> UniTriMatrix:
        """Dense matrix of v -> v * series"""
        self._check_dimension()
        array = np.zeros((self.dimension, self.dimension), dtype=object)
        for row, monomial in enumerate(self.monomials):
            room = self.c - len(monomial)
            for term, coeff in series.terms.items():
                if len(term) <= room:
                    array[row, self.positions[monomial + term]] += coeff
        return UniTriMatrix(array, self.ring)

    @cached_property
    def generators(self) -> List[UniTriMatrix]:
        self._check_dimension()
        matrices = []
        for gen in range(1, self.q + 1):
            array = _identity_array(self.dimension)
            for row, monomial in enumerate(self.monomials):
                if len(monomial) < self.c:
                    array[row, self.positions[monomial + (gen,)]] = 1
            matrices.append(UniTriMatrix(array, self.ring))
        logger.debug(f"Built {self.q} regular generator matrices of dimension {self.dimension}")
        return matrices

    def image(self, word: Word) -> RegularImage:
        return RegularImage(self, magnus_embed(word, self.q, self.c, self.ring))

    def evaluate_word(self, word: Word) -> UniTriMatrix:
        """Product of generator-matrix powers along the word"""
        word.check_generators(self.q)
        result = UniTriMatrix.identity(self.dimension, self.ring)
        for gen, exp in word.letters:
            result = result @ mat_pow(self.generators[gen - 1], exp)
        return result

    def evaluate(self, g: GroupElement) -> UniTriMatrix:
        if g.ctx.q != self.q:
            raise PreconditionError(f"Element has q={g.ctx.q}, representation has q={self.q}")
        return self.evaluate_word(representative_word(g))

    def evaluate_coordinates(self, coordinates: Sequence, basis) -> UniTriMatrix:
        """prod_j M_j^(xi_j) for rational xi, M_j the image of the basis entry b_j"""
        if self.ring != RATIONALS:
            raise PreconditionError("Rational coordinates need the representation over Q")
        result = UniTriMatrix.identity(self.dimension, self.ring)
        for entry, value in zip(basis.entries, coordinates):
            if value:
                factor = self.evaluate_word(expand_commutator(entry.expr))
                result = result @ binomial_pow(factor, value)
        return result


def regular_rep(q: int, c: int, ring: CoeffRing, max_dimension: Optional[int] = None) -> RegularRepresentation:
    return RegularRepresentation(q, c, ring, max_dimension)


def p_power_order(image: RegularImage, p: int, max_steps: int) -> Optional[int]:
    """
    Smallest k with image^(p^k) = 1, found by repeated p-th powering.

    Returns:
        k, or None if the identity is not reached within max_steps
    """
    current = image
    for k in range(max_steps + 1):
        if current.is_identity():
            return k
        current = current.power(p)
    return None
