"""
Group Law
Mal'cev coordinates of free nilpotent groups: the multiplication polynomials
zeta_i and the power polynomials omega_i, found by exact interpolation against
the collector, and their evaluation at rational points.

Polynomials are integer combinations of products of binomials C(var, r),
which makes them integer valued on integer arguments.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Set, Tuple

import numpy as np

from .collector import NilpotentContext
from .errors import FitError, PreconditionError
from .linalg import solve_exact
from .rings import generalized_binomial

logger = logging.getLogger(__name__)

Factor = Tuple[str, int]
Term = Tuple[int, Tuple[Factor, ...]]

LAMBDA = 'lambda'


def xi(j: int) -> str:
    return f"xi_{j}"


def eta(j: int) -> str:
    return f"eta_{j}"


def _binomial_product(factors: Sequence[Factor], values: Dict[str, Fraction]):
    result = 1
    for var, r in factors:
        result = result * generalized_binomial(values[var], r)
        if not result:
            return 0
    return result


@dataclass(frozen=True)
class IntPolynomial:
    """Integer combination of products of binomial terms C(var, r)"""
    terms: Tuple[Term, ...] = ()

    def evaluate(self, values: Dict[str, Fraction]):
        return sum((coeff * _binomial_product(factors, values) for coeff, factors in self.terms), 0)

    def variables(self) -> Set[str]:
        return {var for _, factors in self.terms for var, _ in factors}

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for coeff, factors in self.terms:
            pieces = [var if r == 1 else f"C({var},{r})" for var, r in factors]
            body = '*'.join(pieces)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append('-' + body)
            else:
                parts.append(f"{coeff}*{body}")
        return ' + '.join(parts).replace('+ -', '- ')


@dataclass(frozen=True)
class GroupLaw:
    ctx: NilpotentContext
    mul_polys: Tuple[IntPolynomial, ...]
    pow_polys: Tuple[IntPolynomial, ...]

    @property
    def rank(self) -> int:
        return len(self.mul_polys)


# ============ Multi-index enumeration ============

def _weighted_indices(weights: Sequence[int], bound: int) -> List[Tuple[int, ...]]:
    """All exponent tuples r with sum(r_v * weights[v]) <= bound"""
    results: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], remaining: int) -> None:
        position = len(prefix)
        if position == len(weights):
            results.append(prefix)
            return
        r = 0
        while r * weights[position] <= remaining:
            extend(prefix + (r,), remaining - r * weights[position])
            r += 1

    extend((), bound)
    return results


def _factors(names: Sequence[str], index: Tuple[int, ...]) -> Tuple[Factor, ...]:
    return tuple((name, r) for name, r in zip(names, index) if r)


# ============ Fitting ============

class _Fitter:
    """Interpolates one coordinate polynomial at a time against an oracle"""

    def __init__(self, names: Sequence[str], indices: List[Tuple[int, ...]],
                 oracle: Callable[[Tuple[int, ...]], int], coordinate: int):
        self.names = list(names)
        self.indices = indices
        self.oracle = oracle
        self.coordinate = coordinate

    def fit(self, extra_points: List[Tuple[int, ...]]) -> IntPolynomial:
        # the multi-indices themselves are a unisolvent point set for this basis
        points = list(self.indices) + extra_points
        rows = []
        rhs = []
        for point in points:
            values = dict(zip(self.names, point))
            rows.append([_binomial_product(_factors(self.names, index), values) for index in self.indices])
            rhs.append(self.oracle(point))
        solution = solve_exact(rows, rhs)
        if solution is None:
            raise FitError("Interpolation system has no unique solution", self.coordinate)
        terms = []
        for index, value in zip(self.indices, solution):
            if value.denominator != 1:
                raise FitError(f"Non-integer coefficient {value}", self.coordinate)
            if value:
                terms.append((int(value), _factors(self.names, index)))
        return IntPolynomial(tuple(terms))


def _random_points(rng: np.random.Generator, count: int, dims: int, radius: int,
                   exclude: Set[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    points: List[Tuple[int, ...]] = []
    seen = set(exclude)
    attempts = 0
    while len(points) < count and attempts < 50 * count + 100:
        attempts += 1
        point = tuple(int(v) for v in rng.integers(-radius, radius + 1, size=dims))
        if point not in seen:
            seen.add(point)
            points.append(point)
    return points


def fit_group_law(ctx: NilpotentContext, max_class: int = 4, box_radius: int = 3,
                  validation_size: int = 100, seed: int = 0) -> GroupLaw:
    """
    Interpolate the group law of a free nilpotent context.

    zeta_i is fitted over xi_1..xi_i, eta_1..eta_i within weighted degree
    wt(b_i), where xi_j and eta_j weigh wt(b_j); omega_i over lambda and
    xi_1..xi_i, with the same bound on the xi part and on lambda separately.

    Args:
        ctx: Nilpotent context
        max_class: Largest class accepted
        box_radius: Random fitting and validation points lie in [-r, r]
        validation_size: Number of held-out points checked against the collector
        seed: Random seed

    Returns:
        GroupLaw reproducing collector arithmetic on the validation points

    Raises:
        FitError: If a coordinate cannot be fitted or fails validation
    """
    if ctx.c > max_class:
        raise PreconditionError(f"Group law fitting is limited to class <= {max_class}, got c={ctx.c}")
    rng = np.random.default_rng(seed)
    collector = ctx.collector
    weights = ctx.basis.weights
    N = ctx.rank

    def padded(values: Sequence[int], i: int) -> Tuple[int, ...]:
        return tuple(values) + (0,) * (N - i)

    mul_polys = []
    pow_polys = []
    for i in range(1, N + 1):
        bound = weights[i - 1]
        head = list(weights[:i])

        names = [xi(j) for j in range(1, i + 1)] + [eta(j) for j in range(1, i + 1)]
        indices = _weighted_indices(head + head, bound)

        def mul_oracle(point, i=i):
            a = padded(point[:i], i)
            b = padded(point[i:], i)
            return collector.multiply(a, b)[i - 1]

        extra = _random_points(rng, len(indices), 2 * i, box_radius, set(indices))
        mul_polys.append(_Fitter(names, indices, mul_oracle, i).fit(extra))

        names = [LAMBDA] + [xi(j) for j in range(1, i + 1)]
        indices = [
            (r,) + rest
            for r in range(bound + 1)
            for rest in _weighted_indices(head, bound)
        ]

        def pow_oracle(point, i=i):
            return collector.power(padded(point[1:], i), point[0])[i - 1]

        extra = _random_points(rng, len(indices), i + 1, box_radius, set(indices))
        pow_polys.append(_Fitter(names, indices, pow_oracle, i).fit(extra))
        logger.debug(f"Fitted coordinate {i} of q={ctx.q}, c={ctx.c}")

    law = GroupLaw(ctx=ctx, mul_polys=tuple(mul_polys), pow_polys=tuple(pow_polys))
    _validate(law, rng, validation_size, box_radius)
    logger.info(f"Fitted and validated group law for q={ctx.q}, c={ctx.c} ({N} coordinates)")
    return law


def _validate(law: GroupLaw, rng: np.random.Generator, size: int, radius: int) -> None:
    collector = law.ctx.collector
    N = law.rank
    # fitting points have zero tails; validation points are full random vectors
    for _ in range(size):
        a = tuple(int(v) for v in rng.integers(-radius, radius + 1, size=N))
        b = tuple(int(v) for v in rng.integers(-radius, radius + 1, size=N))
        n = int(rng.integers(-radius, radius + 1))
        expected_mul = collector.multiply(a, b)
        expected_pow = collector.power(a, n)
        got_mul = law_mul(law, a, b)
        got_pow = law_pow(law, a, n)
        for i in range(N):
            if got_mul[i] != expected_mul[i] or got_pow[i] != expected_pow[i]:
                raise FitError("Fitted law disagrees with the collector on a held-out point", i + 1)


# ============ Evaluation ============

def _check_length(law: GroupLaw, *vectors: Sequence) -> None:
    for vector in vectors:
        if len(vector) != law.rank:
            raise PreconditionError(f"Coordinate vector must have length {law.rank}, got {len(vector)}")


def law_mul(law: GroupLaw, a: Sequence, b: Sequence) -> Tuple[Fraction, ...]:
    _check_length(law, a, b)
    values: Dict[str, Fraction] = {}
    for j, (x, y) in enumerate(zip(a, b), start=1):
        values[xi(j)] = Fraction(x)
        values[eta(j)] = Fraction(y)
    return tuple(Fraction(poly.evaluate(values)) for poly in law.mul_polys)


def law_pow(law: GroupLaw, a: Sequence, exponent) -> Tuple[Fraction, ...]:
    _check_length(law, a)
    values: Dict[str, Fraction] = {LAMBDA: Fraction(exponent)}
    for j, x in enumerate(a, start=1):
        values[xi(j)] = Fraction(x)
    return tuple(Fraction(poly.evaluate(values)) for poly in law.pow_polys)


def law_inverse(law: GroupLaw, a: Sequence) -> Tuple[Fraction, ...]:
    return law_pow(law, a, -1)


def law_commutator(law: GroupLaw, a: Sequence, b: Sequence) -> Tuple[Fraction, ...]:
    """[a, b] = a^-1 b^-1 a b in coordinates"""
    return law_mul(law, law_mul(law, law_inverse(law, a), law_inverse(law, b)), law_mul(law, a, b))


def dependency_ok(law: GroupLaw) -> bool:
    """zeta_i and omega_i mention no coordinate above i"""
    for i, (zeta, omega) in enumerate(zip(law.mul_polys, law.pow_polys), start=1):
        allowed = {xi(j) for j in range(1, i + 1)} | {eta(j) for j in range(1, i + 1)} | {LAMBDA}
        if not zeta.variables() <= allowed or not omega.variables() <= allowed:
            return False
        if LAMBDA in zeta.variables() or any(v.startswith('eta_') for v in omega.variables()):
            return False
    return True
