"""
Input Validators
Validation of numeric command and request parameters.

Each validator returns (valid, value_or_error_message).
"""
from fractions import Fraction
from typing import Any, Optional, Tuple

from sympy import isprime

from algebra.rings import from_tag


def validate_positive(value: Any, name: str, minimum: int = 1,
                      maximum: Optional[int] = None) -> Tuple[bool, Any]:
    """
    Validate an integer parameter within [minimum, maximum].

    Args:
        value: Raw value (int or numeric string)
        name: Parameter name for the error message
        minimum: Smallest accepted value
        maximum: Largest accepted value, or None

    Returns:
        Tuple of (valid, parsed_value or error_message)
    """
    if isinstance(value, bool):
        return False, f"{name} must be an integer"
    try:
        parsed = int(value)
    except (ValueError, TypeError):
        return False, f"{name} must be an integer, got '{value}'"
    if isinstance(value, float) and value != parsed:
        return False, f"{name} must be an integer, got '{value}'"
    if parsed < minimum:
        return False, f"{name} must be at least {minimum}, got {parsed}"
    if maximum is not None and parsed > maximum:
        return False, f"{name} must be at most {maximum}, got {parsed}"
    return True, parsed


def validate_gens(value: Any, minimum: int = 2) -> Tuple[bool, Any]:
    """Generator count q; most constructions need q >= 2"""
    return validate_positive(value, 'gens', minimum=minimum)


def validate_class(value: Any) -> Tuple[bool, Any]:
    return validate_positive(value, 'class', minimum=1)


def validate_integer(value: Any, name: str) -> Tuple[bool, Any]:
    """Any integer, negative included"""
    if isinstance(value, bool):
        return False, f"{name} must be an integer"
    try:
        return True, int(str(value).strip())
    except ValueError:
        return False, f"{name} must be an integer, got '{value}'"


def validate_prime(value: Any) -> Tuple[bool, Any]:
    valid, parsed = validate_positive(value, 'p', minimum=2)
    if not valid:
        return valid, parsed
    if not isprime(parsed):
        return False, f"p must be prime, got {parsed}"
    return True, parsed


def validate_ring(value: Any) -> Tuple[bool, Any]:
    """Ring tag Z, Q or Fp:p"""
    try:
        return True, from_tag(str(value))
    except ValueError as e:
        return False, str(e)


def validate_rational(value: Any, name: str = 'value') -> Tuple[bool, Any]:
    """Integer or fraction a/b"""
    if isinstance(value, bool):
        return False, f"{name} must be rational"
    try:
        return True, Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        return False, f"{name} must be an integer or a fraction a/b, got '{value}'"


def validate_vector(value: Any, name: str = 'vector') -> Tuple[bool, Any]:
    """Comma-separated list or JSON list of integers"""
    items = value.strip('()[] ').split(',') if isinstance(value, str) else value
    if not isinstance(items, (list, tuple)):
        return False, f"{name} must be a list of integers"
    parsed = []
    for item in items:
        valid, result = validate_integer(item, name)
        if not valid:
            return valid, result
        parsed.append(result)
    return True, tuple(parsed)


def validate_rational_vector(value: Any, name: str = 'vector') -> Tuple[bool, Any]:
    """Comma-separated list or JSON list of rationals"""
    items = value.strip('()[] ').split(',') if isinstance(value, str) else value
    if not isinstance(items, (list, tuple)):
        return False, f"{name} must be a list of rationals"
    parsed = []
    for item in items:
        valid, result = validate_rational(item, name)
        if not valid:
            return valid, result
        parsed.append(result)
    return True, tuple(parsed)
