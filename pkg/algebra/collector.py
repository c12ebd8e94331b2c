"""
Collector
Normal forms and group arithmetic in the free nilpotent group F / gamma_(c+1)(F).

Words are brought to normal form b_1^mu_1 ... b_N^mu_N by the collection
process: at stage k every occurrence of b_k^(+-1) is moved to the left,
each letter it passes being conjugated, and brackets of weight above c
are dropped as soon as they would be created.

Products of normal forms use collection from the left over a table of
conjugates b_i^(b_j^e); the table entries themselves come from collecting
words, and the results are cross-checked against the Magnus embedding.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ContextMismatchError, GeneratorRangeError, PreconditionError
from .hall_basis import HallBasis, generate_basis
from .words import Leaf, Word, concat, expand_commutator, invert

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class NilpotentContext:
    """Free nilpotent group of class c on q generators, with its Hall basis"""
    q: int
    c: int
    basis: HallBasis = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'basis', generate_basis(self.q, self.c))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def collector(self) -> 'Collector':
        return Collector(self)

    def identity(self) -> 'GroupElement':
        return GroupElement(self, (0,) * self.rank)

    def element(self, exponents: Sequence[int]) -> 'GroupElement':
        return GroupElement(self, tuple(int(e) for e in exponents))

    def unit(self, index: int) -> 'GroupElement':
        """Normal form of the basis entry b_index (1-based)"""
        exponents = [0] * self.rank
        exponents[index - 1] = 1
        return GroupElement(self, tuple(exponents))


@lru_cache(maxsize=32)
def nilpotent_context(q: int, c: int) -> NilpotentContext:
    """Shared context instance, so collector tables are built once per (q, c)"""
    return NilpotentContext(q, c)


@dataclass(frozen=True)
class GroupElement:
    """Exponent vector mu_1..mu_N over the Hall basis of its context"""
    ctx: NilpotentContext
    exponents: Exponents

    def __post_init__(self):
        if len(self.exponents) != self.ctx.rank:
            raise PreconditionError(
                f"Expected {self.ctx.rank} exponents for q={self.ctx.q}, c={self.ctx.c}, "
                f"got {len(self.exponents)}"
            )

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        return mul(self, other)

    def __pow__(self, n: int) -> 'GroupElement':
        return power(self, n)

    def __invert__(self) -> 'GroupElement':
        return inv(self)

    def __str__(self) -> str:
        return '(' + ','.join(str(e) for e in self.exponents) + ')'


class Collector:
    """Collection machinery bound to one context; internal tables are pure memos"""

    def __init__(self, ctx: NilpotentContext):
        self.ctx = ctx
        self.basis = ctx.basis
        self.rank = len(ctx.basis)
        self.c = ctx.c
        self.weights = ctx.basis.weights
        # (i, j, e) -> normal form of b_i^(b_j^e), 0-based i, j, e = +-2^k
        self._conjugates: Dict[Tuple[int, int, int], Exponents] = {}

    # ============ Collection of words ============

    def collect_word(self, word: Word) -> Exponents:
        """Collect a word in the generators into its exponent vector"""
        letters: List[int] = []
        for gen, exp in word.letters:
            if gen > self.ctx.q:
                raise GeneratorRangeError(gen, self.ctx.q)
            letter = gen if exp > 0 else -gen
            letters.extend([letter] * abs(exp))
        return self._collect_letters(letters)

    def _collect_letters(self, string: List[int]) -> Exponents:
        """
        Run the stages k = 1..N over a string of signed unit letters.

        Letters are signed 1-based basis indices. Before stage k every
        letter has index >= k; afterwards every remaining letter has index > k.
        """
        exponents = [0] * self.rank
        for k in range(1, self.rank + 1):
            if not string:
                break
            memo: Dict[Tuple[int, int], Tuple[int, ...]] = {}
            total = 0
            collected: List[int] = []
            # walking right to left, `total` is the b_k exponent to the right
            for letter in reversed(string):
                if letter == k or letter == -k:
                    total += 1 if letter > 0 else -1
                elif total == 0:
                    collected.append(letter)
                else:
                    collected.extend(reversed(self._conjugate_letter(letter, k, total, memo)))
            collected.reverse()
            exponents[k - 1] = total
            string = _cancel(collected)
        return tuple(exponents)

    def _conjugate_letter(self, letter: int, k: int, m: int,
                          memo: Dict[Tuple[int, int], Tuple[int, ...]]) -> Tuple[int, ...]:
        """letter^(b_k^m) as a string of letters with indices > k"""
        key = (letter, m)
        if key in memo:
            return memo[key]
        step = 1 if m > 0 else -1
        current = self._conjugate_once(letter, k, step)
        memo[(letter, step)] = current
        t = step
        while t != m:
            t += step
            cached = memo.get((letter, t))
            if cached is None:
                expanded: List[int] = []
                for x in current:
                    single = memo.get((x, step))
                    if single is None:
                        single = self._conjugate_once(x, k, step)
                        memo[(x, step)] = single
                    expanded.extend(single)
                cached = tuple(_cancel(expanded))
                memo[(letter, t)] = cached
            current = cached
        return current

    def _conjugate_once(self, letter: int, k: int, step: int) -> Tuple[int, ...]:
        """
        One conjugation by b_k^step, with c_i = [c, b_k, ..., b_k] (i copies):

            c^b          = c c_1
            (c^-1)^b     = c_1^-1 c^-1
            c^(b^-1)     = c c_2 c_4 ... c_5^-1 c_3^-1 c_1^-1
            (c^-1)^(b^-1) = c_1 c_3 c_5 ... c_4^-1 c_2^-1 c^-1
        """
        base = abs(letter)
        chain: List[int] = []
        nxt = self.basis.bracket_link(base, k)
        while nxt is not None:
            chain.append(nxt)
            nxt = self.basis.bracket_link(nxt, k)
        if step > 0:
            if letter > 0:
                return (base,) + tuple(chain[:1])
            return tuple(-x for x in chain[:1]) + (-base,)
        odd = chain[0::2]
        even = chain[1::2]
        if letter > 0:
            return (base,) + tuple(even) + tuple(-x for x in reversed(odd))
        return tuple(odd) + tuple(-x for x in reversed(even)) + (-base,)

    # ============ Collection from the left ============

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> Exponents:
        v = list(a)
        for index, exponent in enumerate(b):
            if exponent:
                self._times_power(v, index, exponent)
        return tuple(v)

    def inverse(self, a: Sequence[int]) -> Exponents:
        v = [0] * self.rank
        for index in range(self.rank - 1, -1, -1):
            if a[index]:
                self._times_power(v, index, -a[index])
        return tuple(v)

    def power(self, a: Sequence[int], n: int) -> Exponents:
        if n < 0:
            return self.power(self.inverse(a), -n)
        support = [i for i, e in enumerate(a) if e]
        if len(support) == 1:
            v = [0] * self.rank
            v[support[0]] = a[support[0]] * n
            return tuple(v)
        result: Exponents = (0,) * self.rank
        base = tuple(a)
        while n:
            if n & 1:
                result = self.multiply(result, base)
            n >>= 1
            if n:
                base = self.multiply(base, base)
        return result

    def _times_power(self, v: List[int], j: int, e: int) -> None:
        """
        v := v * b_j^e in place (0-based j).

        With v = P b_j^v_j T, where T is the part above j, this is
        P b_j^(v_j + e) (T conjugated by b_j^e).
        """
        limit = self.c - self.weights[j]
        if not any(v[i] and self.weights[i] <= limit for i in range(j + 1, self.rank)):
            v[j] += e
            return
        tail = [0] * (j + 1) + v[j + 1:]
        v[j] += e
        sign = 1 if e > 0 else -1
        magnitude = abs(e)
        bit = 0
        while magnitude:
            if magnitude & 1:
                tail = self._apply_conjugation(tail, j, sign * (1 << bit))
            magnitude >>= 1
            bit += 1
        v[j + 1:] = tail[j + 1:]

    def _apply_conjugation(self, element: List[int], j: int, e: int) -> List[int]:
        """Image of an element supported above j under x -> x^(b_j^e), e = +-2^k"""
        limit = self.c - self.weights[j]
        result = [0] * self.rank
        for i in range(j + 1, self.rank):
            exponent = element[i]
            if not exponent:
                continue
            if self.weights[i] > limit:
                self._times_power(result, i, exponent)
            else:
                image = self._conjugate(i, j, e)
                result = list(self.multiply(result, self.power(image, exponent)))
        return result

    def _conjugate(self, i: int, j: int, e: int) -> Exponents:
        """Normal form of b_i^(b_j^e) for i > j, e = +-2^k (0-based indices)"""
        key = (i, j, e)
        cached = self._conjugates.get(key)
        if cached is not None:
            return cached
        if abs(e) == 1:
            b_i = expand_commutator(self.basis.entries[i].expr)
            b_j = expand_commutator(self.basis.entries[j].expr)
            if e < 0:
                b_j = invert(b_j)
            result = self.collect_word(concat(invert(b_j), b_i, b_j))
        else:
            half = self._conjugate(i, j, e // 2)
            result = tuple(self._apply_conjugation(list(half), j, e // 2))
        self._conjugates[key] = result
        logger.debug(f"Conjugate table q={self.ctx.q} c={self.c}: {len(self._conjugates)} entries")
        return result


def _cancel(letters: Sequence[int]) -> List[int]:
    """Cancel adjacent inverse letters"""
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return stack


# ============ Public operations ============

def _same_context(*elements: GroupElement) -> NilpotentContext:
    ctx = elements[0].ctx
    for element in elements[1:]:
        if element.ctx != ctx:
            raise ContextMismatchError(
                f"Elements from contexts (q={ctx.q}, c={ctx.c}) and "
                f"(q={element.ctx.q}, c={element.ctx.c}) cannot be combined"
            )
    return ctx


def collect(ctx: NilpotentContext, word: Word) -> GroupElement:
    """
    Normal form of the image of a word in F / gamma_(c+1)(F).

    Args:
        ctx: Nilpotent context
        word: Word whose generators lie in 1..q

    Returns:
        GroupElement holding the unique exponent vector
    """
    word.check_generators(ctx.q)
    return GroupElement(ctx, ctx.collector.collect_word(word))


def mul(a: GroupElement, b: GroupElement) -> GroupElement:
    ctx = _same_context(a, b)
    return GroupElement(ctx, ctx.collector.multiply(a.exponents, b.exponents))


def inv(a: GroupElement) -> GroupElement:
    return GroupElement(a.ctx, a.ctx.collector.inverse(a.exponents))


def power(a: GroupElement, n: int) -> GroupElement:
    """a^n; negative n means (a^-1)^(-n)"""
    return GroupElement(a.ctx, a.ctx.collector.power(a.exponents, int(n)))


def commutator(a: GroupElement, b: GroupElement) -> GroupElement:
    """[a, b] = a^-1 b^-1 a b"""
    _same_context(a, b)
    return mul(mul(inv(a), inv(b)), mul(a, b))


def lcs_weight(g: GroupElement) -> int:
    """Least weight of a basis entry with nonzero exponent; c + 1 for the identity"""
    weights = g.ctx.basis.weights
    return min((w for w, e in zip(weights, g.exponents) if e), default=g.ctx.c + 1)


def representative_word(g: GroupElement) -> Word:
    """The word prod_j expand(b_j)^mu_j"""
    parts = []
    for entry, exponent in zip(g.ctx.basis.entries, g.exponents):
        if exponent:
            parts.append(expand_commutator(entry.expr) ** exponent)
    return concat(*parts) if parts else Word.identity()


def substitute(g: GroupElement, images: Sequence[Word], target: Optional[NilpotentContext] = None) -> GroupElement:
    """
    Apply the endomorphism x_i -> images[i-1] to g.

    The image of every basis entry is computed bracket by bracket inside
    the target context (default: the context of g).
    """
    target = target or g.ctx
    if len(images) != g.ctx.q:
        raise PreconditionError(f"Need {g.ctx.q} substitution words, got {len(images)}")
    generator_images = [collect(target, word) for word in images]
    cache: Dict = {}

    def image_of(expr) -> GroupElement:
        if expr in cache:
            return cache[expr]
        if isinstance(expr, Leaf):
            result = generator_images[expr.gen - 1]
        else:
            result = commutator(image_of(expr.left), image_of(expr.right))
        cache[expr] = result
        return result

    result = target.identity()
    for entry, exponent in zip(g.ctx.basis.entries, g.exponents):
        if exponent:
            result = mul(result, power(image_of(entry.expr), exponent))
    return result
