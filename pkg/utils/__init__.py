"""
Utilities Package
"""
from .logger import setup_logger
from .validators import (
    validate_class,
    validate_gens,
    validate_integer,
    validate_prime,
    validate_rational,
    validate_rational_vector,
    validate_ring,
    validate_vector,
)

__all__ = [
    'setup_logger', 'validate_class', 'validate_gens', 'validate_integer', 'validate_prime',
    'validate_rational', 'validate_rational_vector', 'validate_ring', 'validate_vector'
]
