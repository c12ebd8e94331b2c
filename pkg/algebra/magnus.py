"""
Magnus Ring
Truncated free associative ring over Z, Q or F_p and the Magnus embedding.

An element of Z<u_1, ..., u_q> / (degree > D) is stored sparsely as a map
from monomials (tuples of generator indices) to nonzero coefficients. The
Magnus embedding sends x_i to 1 + u_i; it is faithful on F / gamma_(D+1)(F),
which makes it the independent oracle for the collector.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from sympy import multiplicity

from .errors import AlgebraError, PreconditionError, RingMismatchError, TrivialWordError
from .hall_basis import HallBasis, basic_products, euler_product, witt_number
from .rings import INTEGERS, RATIONALS, CoeffRing, Scalar, prime_field
from .words import CommutatorExpr, Leaf, Word, expand_commutator, render

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


def monomial_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """Canonical order: degree first, then lexicographic"""
    return (len(monomial), monomial)


def render_monomial(monomial: Monomial) -> str:
    if not monomial:
        return '1'
    parts = []
    index = 0
    while index < len(monomial):
        gen = monomial[index]
        run = 1
        while index + run < len(monomial) and monomial[index + run] == gen:
            run += 1
        parts.append(f"u{gen}" if run == 1 else f"u{gen}^{run}")
        index += run
    return '*'.join(parts)


@dataclass(frozen=True)
class TruncSeries:
    """Element of the free associative ring truncated above degree D"""
    D: int
    ring: CoeffRing
    terms: Mapping[Monomial, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[Monomial, Scalar] = {}
        for monomial, coeff in self.terms.items():
            monomial = tuple(monomial)
            if len(monomial) > self.D:
                continue
            coeff = self.ring.normalize(coeff)
            if coeff:
                clean[monomial] = coeff
        object.__setattr__(self, 'terms', clean)

    # ============ Construction ============

    @classmethod
    def zero(cls, D: int, ring: CoeffRing) -> 'TruncSeries':
        return cls(D, ring, {})

    @classmethod
    def scalar(cls, value, D: int, ring: CoeffRing) -> 'TruncSeries':
        return cls(D, ring, {(): value})

    @classmethod
    def variable(cls, gen: int, D: int, ring: CoeffRing) -> 'TruncSeries':
        return cls(D, ring, {(gen,): 1})

    # ============ Arithmetic ============

    def _check(self, other: 'TruncSeries') -> None:
        if not isinstance(other, TruncSeries):
            raise RingMismatchError(f"Cannot combine a series with {type(other).__name__}")
        if self.D != other.D:
            raise RingMismatchError(f"Truncation degrees differ: {self.D} vs {other.D}")
        self.ring.check_same(other.ring)

    def __add__(self, other: 'TruncSeries') -> 'TruncSeries':
        self._check(other)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return TruncSeries(self.D, self.ring, terms)

    def __neg__(self) -> 'TruncSeries':
        return TruncSeries(self.D, self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: 'TruncSeries') -> 'TruncSeries':
        return self + (-other)

    def __mul__(self, other: 'TruncSeries') -> 'TruncSeries':
        self._check(other)
        by_degree: Dict[int, List[Tuple[Monomial, Scalar]]] = {}
        for monomial, coeff in other.terms.items():
            by_degree.setdefault(len(monomial), []).append((monomial, coeff))
        terms: Dict[Monomial, Scalar] = {}
        for left, a in self.terms.items():
            room = self.D - len(left)
            for degree, items in by_degree.items():
                if degree > room:
                    continue
                for right, b in items:
                    key = left + right
                    terms[key] = terms.get(key, 0) + a * b
        return TruncSeries(self.D, self.ring, terms)

    def scale(self, value) -> 'TruncSeries':
        value = self.ring.normalize(value)
        return TruncSeries(self.D, self.ring, {m: c * value for m, c in self.terms.items()})

    def __pow__(self, n: int) -> 'TruncSeries':
        if n < 0:
            return unit_inverse(self) ** (-n)
        result = one(self.D, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ============ Inspection ============

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.D == other.D and self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.D, self.ring, frozenset(self.terms.items())))

    def coefficient(self, monomial: Monomial) -> Scalar:
        return self.terms.get(tuple(monomial), self.ring.normalize(0))

    def constant_term(self) -> Scalar:
        return self.coefficient(())

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): self.ring.normalize(1)}

    def homogeneous(self, degree: int) -> 'TruncSeries':
        return TruncSeries(self.D, self.ring, {m: c for m, c in self.terms.items() if len(m) == degree})

    def min_degree(self) -> Optional[int]:
        return min((len(m) for m in self.terms), default=None)

    def items(self) -> Iterator[Tuple[Monomial, Scalar]]:
        """Terms in canonical monomial order"""
        for monomial in sorted(self.terms, key=monomial_key):
            yield monomial, self.terms[monomial]

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for monomial, coeff in self.items():
            text = self.ring.render(coeff)
            if not monomial:
                parts.append(text)
            elif text == '1':
                parts.append(render_monomial(monomial))
            elif text == '-1':
                parts.append('-' + render_monomial(monomial))
            else:
                parts.append(f"{text}*{render_monomial(monomial)}")
        return ' + '.join(parts).replace('+ -', '- ')


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a + b


def ring_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def one(D: int, ring: CoeffRing) -> TruncSeries:
    return TruncSeries.scalar(1, D, ring)


def unit_inverse(s: TruncSeries) -> TruncSeries:
    """
    Inverse of a series with constant term 1.

    Writing s = 1 + v, the inverse is the sum of (-v)^k for k = 0..D.
    """
    if s.constant_term() != s.ring.normalize(1):
        raise PreconditionError("unit_inverse needs constant term 1")
    v = s - one(s.D, s.ring)
    neg_v = -v
    result = one(s.D, s.ring)
    term = one(s.D, s.ring)
    for _ in range(s.D):
        term = term * neg_v
        if term.is_zero():
            break
        result = result + term
    return result


# ============ Magnus embedding ============

@lru_cache(maxsize=1024)
def _generator_power(gen: int, exponent: int, D: int, ring: CoeffRing) -> TruncSeries:
    """(1 + u_gen)^exponent; negative exponents go through unit_inverse"""
    if exponent < 0:
        return unit_inverse(_generator_power(gen, -exponent, D, ring))
    terms = {(gen,) * k: comb(exponent, k) for k in range(min(exponent, D) + 1)}
    return TruncSeries(D, ring, terms)


def magnus_embed(w: Word, q: int, D: int, ring: CoeffRing = INTEGERS) -> TruncSeries:
    """
    Image of a word under x_i -> 1 + u_i, truncated above degree D.

    Args:
        w: Word with generators in 1..q
        q: Generator count
        D: Truncation degree
        ring: Coefficient ring

    Returns:
        TruncSeries with constant term 1
    """
    w.check_generators(q)
    if D < 0:
        raise PreconditionError(f"Truncation degree must be nonnegative, got {D}")
    result = one(D, ring)
    for gen, exp in w.letters:
        result = result * _generator_power(gen, exp, D, ring)
    return result


def lie_bracket(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """[a, b] = ab - ba"""
    return a * b - b * a


def lie_expand(e: CommutatorExpr, q: int, D: int, ring: CoeffRing = INTEGERS) -> TruncSeries:
    """Lie element of a commutator expression: Leaf(i) -> u_i, Bracket -> ring commutator"""
    if e.weight > D:
        raise PreconditionError(f"Expression weight {e.weight} exceeds truncation degree {D}")
    if isinstance(e, Leaf):
        if e.gen > q:
            raise PreconditionError(f"Generator x{e.gen} out of range 1..{q}")
        return TruncSeries.variable(e.gen, D, ring)
    return lie_bracket(lie_expand(e.left, q, D, ring), lie_expand(e.right, q, D, ring))


def iterated_bracket(u: TruncSeries, v: TruncSeries, s: int) -> TruncSeries:
    """
    [u, v, ..., v] with s copies of v, via the closed form
    sum over k of (-1)^k C(s, k) v^k u v^(s-k).
    """
    result = TruncSeries.zero(u.D, u.ring)
    for k in range(s + 1):
        term = (v ** k) * u * (v ** (s - k))
        result = result + term.scale((-1) ** k * comb(s, k))
    return result


# ============ Dimension filtration ============

def dimension_weight(w: Word, q: int, D: int, ring: CoeffRing = RATIONALS) -> Optional[int]:
    """
    Smallest k with a nonzero degree-k component of magnus_embed(w) - 1.

    Returns:
        k in 1..D, or None when no component of degree <= D survives
    """
    difference = magnus_embed(w, q, D, ring) - one(D, ring)
    return difference.min_degree()


def hilbert_coeffs(q: int, c: int, jmax: int) -> List[int]:
    """Coefficients d_0..d_jmax of 1 / prod_(i<=c) (1 - t^i)^witt_number(i, q)"""
    if q < 2 or c < 1:
        raise PreconditionError(f"Hilbert coefficients need q >= 2 and c >= 1, got q={q}, c={c}")
    return euler_product({i: witt_number(i, q) for i in range(1, c + 1)}, jmax)


# ============ Residual witnesses ============

@dataclass(frozen=True)
class Witness:
    """Certificate that a word survives in a finite p-group quotient"""
    word: Word
    p: int
    q: int
    N: int
    monomial: Monomial
    coeff: int
    group_order_exponent: int
    closed_form_coeff: Optional[int] = None

    def to_dict(self) -> Dict:
        return {
            'word': render(self.word),
            'p': self.p,
            'q': self.q,
            'N': self.N,
            'monomial': list(self.monomial),
            'coeff': str(self.coeff),
            'group_order_exponent': str(self.group_order_exponent),
            'closed_form_coeff': None if self.closed_form_coeff is None else str(self.closed_form_coeff),
        }


def witness_degree(w: Word, p: int) -> int:
    """N = sum of p^(s_a) over the letters x_(i_a)^(r_a), r_a = p^(s_a) m_a"""
    return sum(p ** multiplicity(p, abs(exp)) for _, exp in w.letters)


def residual_witness(w: Word, p: int, q: Optional[int] = None,
                     max_degree: Optional[int] = None) -> Witness:
    """
    Find a monomial of the Magnus image over F_p that certifies w != 1
    in a finite p-group quotient.

    Args:
        w: Nontrivial word (freely reduced, so adjacent generators differ)
        p: Prime
        q: Generator count (default: max(2, largest generator in w))
        max_degree: Refuse words whose certificate degree N exceeds this

    Returns:
        Witness with the degree N, the designated monomial and its coefficient
    """
    if w.is_identity():
        raise TrivialWordError("The trivial word has no residual witness")
    field_ring = prime_field(p)
    q = q or max(2, w.max_generator())
    w.check_generators(q)

    monomial: Tuple[int, ...] = ()
    closed_form = 1
    for gen, exp in w.letters:
        s = multiplicity(p, abs(exp))
        block = p ** s
        monomial += (gen,) * block
        m = exp // block
        if closed_form is not None:
            closed_form = closed_form * comb(block * m, block) % p if m > 0 else None
    N = len(monomial)
    if max_degree is not None and N > max_degree:
        raise PreconditionError(f"Witness degree {N} exceeds the cap {max_degree}")

    image = magnus_embed(w, q, N, field_ring)
    coeff = image.coefficient(monomial)
    if not coeff:
        raise AlgebraError(f"Designated witness coefficient vanished for {render(w)} at p={p}")
    logger.info(f"Residual witness for {render(w)} at p={p}: degree {N}, coefficient {coeff}")
    return Witness(
        word=w,
        p=p,
        q=q,
        N=N,
        monomial=monomial,
        coeff=int(coeff),
        group_order_exponent=sum(q ** j for j in range(1, N + 1)),
        closed_form_coeff=closed_form,
    )


# ============ Basic products ============

def degree_monomials(q: int, w: int) -> List[Monomial]:
    """All q^w monomials of degree w in lexicographic order"""
    monomials: List[Monomial] = [()]
    for _ in range(w):
        monomials = [m + (gen,) for m in monomials for gen in range(1, q + 1)]
    return monomials


def lie_coefficient_rows(exprs: List[CommutatorExpr], q: int, w: int) -> List[List[int]]:
    """Coefficient vectors of the Lie elements over the degree-w monomials"""
    monomials = degree_monomials(q, w)
    rows = []
    for expr in exprs:
        series = lie_expand(expr, q, w, INTEGERS)
        rows.append([int(series.coefficient(m)) for m in monomials])
    return rows


def basic_product_matrix(basis: HallBasis, w: int) -> List[List[int]]:
    """
    Square integer matrix whose rows are the Lie images of the basic
    products of weight w, over the q^w monomials of degree w.
    """
    monomials = degree_monomials(basis.q, w)
    lie_images = {
        entry.index: lie_expand(entry.expr, basis.q, w, INTEGERS)
        for entry in basis.entries if entry.weight <= w
    }
    rows = []
    for product in basic_products(basis, w):
        series = one(w, INTEGERS)
        for index in product:
            series = series * lie_images[index]
        rows.append([int(series.coefficient(m)) for m in monomials])
    return rows


def magnus_congruence_defect(entry_expr: CommutatorExpr, q: int) -> TruncSeries:
    """
    magnus_embed(b) - 1 - lie_expand(b) truncated at the weight of b;
    zero for every basic commutator.
    """
    weight = entry_expr.weight
    image = magnus_embed(expand_commutator(entry_expr), q, weight, INTEGERS)
    return image - one(weight, INTEGERS) - lie_expand(entry_expr, q, weight, INTEGERS)
