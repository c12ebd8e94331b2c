"""
Algebra Errors
Exception hierarchy shared by every computational module.
"""
from typing import Optional


class AlgebraError(ValueError):
    """Base class for all domain errors raised by the algebra package"""


class WordSyntaxError(AlgebraError):
    """Raised when a word or bracket expression does not match the grammar"""

    def __init__(self, message: str, position: int, text: str = ''):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class GeneratorRangeError(AlgebraError):
    """Raised when a generator index falls outside 1..q"""

    def __init__(self, index: int, q: Optional[int] = None):
        self.index = index
        self.q = q
        if q is None:
            message = f"Generator index must be positive, got x{index}"
        else:
            message = f"Generator x{index} out of range 1..{q}"
        super().__init__(message)


class ContextMismatchError(AlgebraError):
    """Raised when group elements from different contexts are combined"""


class RingMismatchError(AlgebraError):
    """Raised when series or matrices over different rings or shapes are combined"""


class PreconditionError(AlgebraError):
    """Raised when an operation's documented precondition does not hold"""


class TrivialWordError(AlgebraError):
    """Raised when a nontrivial word is required but the input reduces to 1"""


class FitError(AlgebraError):
    """Raised when the group law cannot be interpolated within the degree bound"""

    def __init__(self, message: str, coordinate: int):
        self.coordinate = coordinate
        super().__init__(f"{message} (coordinate {coordinate})")


class DeserializationError(AlgebraError):
    """Raised when a JSON document does not match the expected schema"""
