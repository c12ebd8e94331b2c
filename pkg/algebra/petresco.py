"""
Petresco Words
Hall-Petresco words tau_w computed from the recurrence

    x_1^w x_2^w ... x_n^w = tau_1^w tau_2^C(w,2) ... tau_(w-1)^C(w,w-1) tau_w
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Sequence

from .collector import GroupElement, inv, lcs_weight, mul, power
from .errors import ContextMismatchError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PetrescoResult:
    inputs: tuple
    taus: tuple

    @property
    def ctx(self):
        return self.inputs[0].ctx

    def tau(self, w: int) -> GroupElement:
        """tau_w, 1-based"""
        return self.taus[w - 1]

    def to_dict(self) -> Dict:
        return {
            'q': self.ctx.q,
            'c': self.ctx.c,
            'inputs': [[str(e) for e in x.exponents] for x in self.inputs],
            'taus': [[str(e) for e in t.exponents] for t in self.taus],
        }


def _product(elements: Sequence[GroupElement]) -> GroupElement:
    result = elements[0].ctx.identity()
    for element in elements:
        result = mul(result, element)
    return result


def petresco(ctx, xs: Sequence[GroupElement], W: int) -> PetrescoResult:
    """
    Compute tau_1..tau_W for the elements xs.

    Args:
        ctx: Nilpotent context all xs belong to
        xs: Nonempty list of group elements
        W: Number of Petresco words wanted (may exceed c)

    Returns:
        PetrescoResult
    """
    if not xs:
        raise PreconditionError("petresco needs at least one element")
    if W < 1:
        raise PreconditionError(f"petresco needs W >= 1, got {W}")
    for x in xs:
        if x.ctx != ctx:
            raise ContextMismatchError("All inputs to petresco must share one context")

    taus: List[GroupElement] = [_product(xs)]
    for w in range(2, W + 1):
        left = _product([power(x, w) for x in xs])
        prefix = ctx.identity()
        for k in range(1, w):
            prefix = mul(prefix, power(taus[k - 1], comb(w, k)))
        taus.append(mul(inv(prefix), left))
    logger.debug(f"Computed {W} Petresco words for {len(xs)} elements in q={ctx.q}, c={ctx.c}")
    return PetrescoResult(inputs=tuple(xs), taus=tuple(taus))


def verify_tau_weight(result: PetrescoResult) -> bool:
    """True iff every tau_w lies in gamma_w, i.e. lcs_weight(tau_w) >= min(w, c + 1)"""
    bound = result.ctx.c + 1
    return all(lcs_weight(tau) >= min(w, bound) for w, tau in enumerate(result.taus, start=1))


def verify_recurrence(result: PetrescoResult) -> bool:
    """Recompute both sides of the defining identity for every w"""
    xs = result.inputs
    ctx = result.ctx
    for w in range(1, len(result.taus) + 1):
        left = _product([power(x, w) for x in xs])
        right = ctx.identity()
        for k in range(1, w + 1):
            right = mul(right, power(result.taus[k - 1], comb(w, k)))
        if left != right:
            return False
    return True
