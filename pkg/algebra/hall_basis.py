"""
Hall Basis
Basic sequences of weight <= c on q generators, Witt numbers and basic products.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import divisors, factorint

from .errors import PreconditionError
from .words import Bracket, CommutatorExpr, Leaf, structural_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasicCommutator:
    """Entry b_index of a basic sequence"""
    expr: CommutatorExpr
    weight: int
    index: int

    def render(self) -> str:
        return str(self.expr)

    def to_dict(self) -> Dict:
        return {'index': self.index, 'weight': self.weight, 'expr': self.render()}


@dataclass(frozen=True)
class HallBasis:
    """
    Basic sequence b_1..b_N truncated at weight c.

    Besides the entries it keeps the bracket links produced while the
    working sets were built: (i, k) -> j whenever b_j = [b_i, b_k] arose
    as an iterated bracket with b_k. The collector walks these links.
    """
    q: int
    c: int
    entries: Tuple[BasicCommutator, ...]
    links: Mapping[Tuple[int, int], int] = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index: int) -> BasicCommutator:
        """1-based access, matching the b_1..b_N numbering"""
        if index < 1 or index > len(self.entries):
            raise IndexError(f"Basis index {index} out of range 1..{len(self.entries)}")
        return self.entries[index - 1]

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(entry.weight for entry in self.entries)

    def entries_of_weight(self, w: int) -> List[BasicCommutator]:
        return [entry for entry in self.entries if entry.weight == w]

    def bracket_link(self, i: int, k: int) -> Optional[int]:
        """
        Index of [b_i, b_k] for b_i in the working set at stage k.

        Returns None when the bracket has weight above c and therefore
        vanishes in F / gamma_(c+1)(F).
        """
        if self.entries[i - 1].weight + self.entries[k - 1].weight > self.c:
            return None
        return self.links[(i, k)]

    def to_list(self) -> List[Dict]:
        return [entry.to_dict() for entry in self.entries]


@lru_cache(maxsize=64)
def generate_basis(q: int, c: int) -> HallBasis:
    """
    Generate the basic sequence in x_1..x_q up to weight c.

    Starting from X_0 = {x_1, ..., x_q}, repeatedly pick the least element
    b_k of the working set (by weight, then structurally) and replace the
    working set by all [a, b_k, ..., b_k] for a != b_k, truncated at weight c.

    Args:
        q: Number of generators (>= 2)
        c: Class bound (>= 1)

    Returns:
        HallBasis with sum(witt_number(w, q) for w <= c) entries
    """
    if q < 2:
        raise PreconditionError(f"Hall basis needs at least 2 generators, got q={q}")
    if c < 1:
        raise PreconditionError(f"Class bound must be at least 1, got c={c}")

    working: List[CommutatorExpr] = [Leaf(i) for i in range(1, q + 1)]
    chosen: List[CommutatorExpr] = []
    raw_links: Dict[Tuple[CommutatorExpr, CommutatorExpr], CommutatorExpr] = {}

    while working:
        least = min(working, key=structural_key)
        chosen.append(least)
        next_working = []
        for element in working:
            if element == least:
                continue
            current = element
            while current.weight <= c:
                next_working.append(current)
                extended = Bracket(current, least)
                if extended.weight <= c:
                    raw_links[(current, least)] = extended
                current = extended
        working = next_working

    position = {expr: k for k, expr in enumerate(chosen, start=1)}
    entries = tuple(
        BasicCommutator(expr=expr, weight=expr.weight, index=k)
        for k, expr in enumerate(chosen, start=1)
    )
    links = {
        (position[left], position[right]): position[result]
        for (left, right), result in raw_links.items()
    }
    logger.debug(f"Generated Hall basis q={q} c={c} with {len(entries)} entries")
    return HallBasis(q=q, c=c, entries=entries, links=links)


def moebius(d: int) -> int:
    """Moebius function: (-1)^r for squarefree d with r prime factors, else 0"""
    if d < 1:
        raise PreconditionError(f"Moebius function needs d >= 1, got {d}")
    factors = factorint(d)
    if any(exponent > 1 for exponent in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def witt_number(w: int, q: int) -> int:
    """
    Rank of gamma_w / gamma_(w+1) of the free group of rank q.

    n(w, q) = (1/w) * sum over d | w of mu(d) q^(w/d); the division is exact.
    """
    if w < 1 or q < 1:
        raise PreconditionError(f"Witt number needs w >= 1 and q >= 1, got w={w}, q={q}")
    total = sum(moebius(d) * q ** (w // d) for d in divisors(w))
    return total // w


def euler_product(multiplicities: Mapping[int, int], jmax: int) -> List[int]:
    """
    Coefficients t^0..t^jmax of prod_i (1 - t^i)^(-m_i), exact.

    Args:
        multiplicities: Mapping degree i -> exponent m_i
        jmax: Highest coefficient wanted

    Returns:
        List of jmax + 1 integers
    """
    coeffs = [1] + [0] * jmax
    for degree, count in sorted(multiplicities.items()):
        for _ in range(count):
            # multiply in place by 1 / (1 - t^degree)
            for j in range(degree, jmax + 1):
                coeffs[j] += coeffs[j - degree]
    return coeffs


def basic_products(basis: HallBasis, w: int) -> List[Tuple[int, ...]]:
    """
    All basic products b_i1 b_i2 ... b_ik (i1 <= i2 <= ... <= ik) of weight w.

    There are exactly q^w of them whenever w <= c.
    """
    if w > basis.c:
        raise PreconditionError(f"Weight {w} exceeds the class bound {basis.c}")
    weights = basis.weights
    products: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], start: int, remaining: int) -> None:
        if remaining == 0:
            products.append(prefix)
            return
        for index in range(start, len(weights) + 1):
            weight = weights[index - 1]
            if weight > remaining:
                break
            extend(prefix + (index,), index, remaining - weight)

    extend((), 1, w)
    return products


def weight_profile(basis: HallBasis) -> Dict[int, int]:
    """Number of basis entries per weight"""
    profile: Dict[int, int] = {}
    for entry in basis.entries:
        profile[entry.weight] = profile.get(entry.weight, 0) + 1
    return profile


def check_prefix_stable(smaller: Sequence[BasicCommutator], larger: Sequence[BasicCommutator]) -> bool:
    """True if the entries of `larger` with weight <= max weight of `smaller` reproduce `smaller`"""
    limit = max((entry.weight for entry in smaller), default=0)
    restricted = [entry.expr for entry in larger if entry.weight <= limit]
    return restricted == [entry.expr for entry in smaller]
