"""
Coefficient Rings
The integers, the rationals and prime fields, with exact element arithmetic.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from sympy import isprime

from .errors import PreconditionError, RingMismatchError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class CoeffRing:
    """Coefficient ring tag: 'Z', 'Q' or 'Fp' with a prime p"""
    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ('Z', 'Q', 'Fp'):
            raise PreconditionError(f"Unknown coefficient ring '{self.kind}'")
        if self.kind == 'Fp':
            if self.p is None or not isprime(self.p):
                raise PreconditionError(f"Prime field needs a prime modulus, got {self.p}")
        elif self.p is not None:
            raise PreconditionError(f"Ring {self.kind} takes no modulus")

    @property
    def tag(self) -> str:
        return f"Fp:{self.p}" if self.kind == 'Fp' else self.kind

    def normalize(self, value) -> Scalar:
        """Bring a value into the canonical representation of this ring"""
        if self.kind == 'Q':
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                if self.kind == 'Z':
                    raise PreconditionError(f"{value} is not an integer")
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            value = value.numerator
        value = int(value)
        return value % self.p if self.kind == 'Fp' else value

    def inverse(self, value: Scalar) -> Scalar:
        value = self.normalize(value)
        if not value:
            raise PreconditionError("Zero has no inverse")
        if self.kind == 'Q':
            return 1 / value
        if self.kind == 'Fp':
            return pow(value, -1, self.p)
        if value in (1, -1):
            return value
        raise PreconditionError(f"{value} is not a unit of Z")

    def parse(self, text: str) -> Scalar:
        """Parse a decimal integer, or a/b over the rationals"""
        text = str(text).strip()
        try:
            if '/' in text:
                if self.kind == 'Z':
                    raise PreconditionError(f"'{text}' is not an integer")
                return self.normalize(Fraction(text))
            return self.normalize(int(text))
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(f"Cannot read '{text}' as an element of {self.tag}")

    def render(self, value: Scalar) -> str:
        value = self.normalize(value)
        if isinstance(value, Fraction) and value.denominator != 1:
            return f"{value.numerator}/{value.denominator}"
        return str(int(value))

    def check_same(self, other: 'CoeffRing') -> None:
        if self != other:
            raise RingMismatchError(f"Ring {self.tag} does not match {other.tag}")

    def __str__(self) -> str:
        return self.tag


INTEGERS = CoeffRing('Z')
RATIONALS = CoeffRing('Q')


def prime_field(p: int) -> CoeffRing:
    return CoeffRing('Fp', int(p))


def from_tag(tag: str) -> CoeffRing:
    """Read 'Z', 'Q' or 'Fp:<p>'"""
    tag = str(tag).strip()
    if tag in ('Z', 'Q'):
        return CoeffRing(tag)
    if tag.startswith('Fp:'):
        try:
            p = int(tag[3:])
        except ValueError:
            raise PreconditionError(f"Bad prime in ring tag '{tag}'")
        return prime_field(p)
    raise PreconditionError(f"Unknown ring tag '{tag}', expected Z, Q or Fp:<p>")


def generalized_binomial(x: Scalar, r: int) -> Scalar:
    """C(x, r) = x (x-1) ... (x-r+1) / r! for any rational x"""
    if r < 0:
        return 0
    result = Fraction(1)
    for i in range(r):
        result = result * (x - i) / (i + 1)
    if isinstance(x, int):
        return int(result)
    return result
