"""
Free Group Words
Freely reduced words, commutator expressions and their expansion.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Tuple, Union

from .errors import GeneratorRangeError

GeneratorId = int
Letter = Tuple[GeneratorId, int]


def free_reduce(letters: Iterable[Letter]) -> 'Word':
    """
    Freely reduce a raw letter sequence.

    Adjacent letters on the same generator are merged and zero exponents
    dropped, repeatedly, using a single stack pass.

    Args:
        letters: Iterable of (generator, exponent) pairs

    Returns:
        The reduced Word
    """
    stack = []
    for gen, exp in letters:
        gen, exp = int(gen), int(exp)
        if gen < 1:
            raise GeneratorRangeError(gen)
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return Word(tuple(stack), _reduced=True)


@dataclass(frozen=True)
class Word:
    """Freely reduced word in the generators x_1, x_2, ...; the empty word is 1"""
    letters: Tuple[Letter, ...] = ()
    _reduced: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not self._reduced:
            reduced = free_reduce(self.letters)
            object.__setattr__(self, 'letters', reduced.letters)
        object.__setattr__(self, '_reduced', True)

    @classmethod
    def identity(cls) -> 'Word':
        return cls((), _reduced=True)

    @classmethod
    def generator(cls, index: GeneratorId, exponent: int = 1) -> 'Word':
        return free_reduce([(index, exponent)])

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: 'Word') -> 'Word':
        return concat(self, other)

    def __invert__(self) -> 'Word':
        return invert(self)

    def __pow__(self, n: int) -> 'Word':
        if n < 0:
            return invert(self) ** (-n)
        result, base = Word.identity(), self
        while n:
            if n & 1:
                result = concat(result, base)
            base = concat(base, base)
            n >>= 1
        return result

    def max_generator(self) -> int:
        return max((gen for gen, _ in self.letters), default=0)

    def check_generators(self, q: int) -> None:
        """Raise GeneratorRangeError if some letter uses a generator above q"""
        for gen, _ in self.letters:
            if gen > q:
                raise GeneratorRangeError(gen, q)

    def render(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return render(self)


def invert(w: Word) -> Word:
    return Word(tuple((gen, -exp) for gen, exp in reversed(w.letters)), _reduced=True)


def concat(*words: Word) -> Word:
    letters = []
    for w in words:
        letters.extend(w.letters)
    return free_reduce(letters)


def commutator_word(u: Word, v: Word) -> Word:
    """[u, v] = u^-1 v^-1 u v"""
    return concat(invert(u), invert(v), u, v)


def conjugate_word(u: Word, v: Word) -> Word:
    """u^v = v^-1 u v"""
    return concat(invert(v), u, v)


def render(w: Word) -> str:
    """Canonical text form accepted back by the parser; the identity renders as 1"""
    if not w.letters:
        return '1'
    parts = []
    for gen, exp in w.letters:
        parts.append(f"x{gen}" if exp == 1 else f"x{gen}^{exp}")
    return '*'.join(parts)


# ============ Commutator expressions ============

@dataclass(frozen=True)
class Leaf:
    gen: GeneratorId

    @property
    def weight(self) -> int:
        return 1

    def __str__(self) -> str:
        return f"x{self.gen}"


@dataclass(frozen=True)
class Bracket:
    left: 'CommutatorExpr'
    right: 'CommutatorExpr'
    weight: int = field(init=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, 'weight', self.left.weight + self.right.weight)

    def __str__(self) -> str:
        return f"[{self.left},{self.right}]"


CommutatorExpr = Union[Leaf, Bracket]


def bracket(*exprs: CommutatorExpr) -> CommutatorExpr:
    """Left-normed bracket [e1, e2, ..., en] = [[e1, ..., e(n-1)], en]"""
    result = exprs[0]
    for expr in exprs[1:]:
        result = Bracket(result, expr)
    return result


@lru_cache(maxsize=None)
def structural_key(expr: CommutatorExpr) -> tuple:
    """
    Total order used to break ties between commutators of equal weight.

    Leaves compare by generator index; brackets by (weight, left, right).
    Weight always comes first, so a leaf is never compared with a bracket
    of the same weight.
    """
    if isinstance(expr, Leaf):
        return (1, 0, expr.gen)
    return (expr.weight, 1, structural_key(expr.left), structural_key(expr.right))


def leaves(expr: CommutatorExpr) -> Iterator[GeneratorId]:
    if isinstance(expr, Leaf):
        yield expr.gen
    else:
        yield from leaves(expr.left)
        yield from leaves(expr.right)


@lru_cache(maxsize=4096)
def expand_commutator(expr: CommutatorExpr) -> Word:
    """
    Expand a commutator expression into a freely reduced word.

    Bracket(u, v) becomes u^-1 v^-1 u v, recursively.
    """
    if isinstance(expr, Leaf):
        return Word.generator(expr.gen)
    return commutator_word(expand_commutator(expr.left), expand_commutator(expr.right))


def check_expr_generators(expr: CommutatorExpr, q: Optional[int]) -> None:
    for gen in leaves(expr):
        if gen < 1 or (q is not None and gen > q):
            raise GeneratorRangeError(gen, q)
