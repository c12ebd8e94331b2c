"""
API Routes Module
Blueprints for the computation and check endpoints.
"""
from flask import jsonify

from algebra.errors import AlgebraError, DeserializationError, GeneratorRangeError, WordSyntaxError
from operations import ParameterError

BAD_INPUT = (ParameterError, WordSyntaxError, GeneratorRangeError, DeserializationError)


def error_response(error: Exception):
    """Map a failed request to 400 (bad input), 422 (domain error) or 500"""
    if isinstance(error, BAD_INPUT):
        return jsonify({'error': type(error).__name__, 'message': str(error)}), 400
    if isinstance(error, AlgebraError):
        return jsonify({'error': type(error).__name__, 'message': str(error)}), 422
    return jsonify({'error': 'Internal server error', 'message': str(error)}), 500


from . import check_routes, compute_routes  # noqa: E402

__all__ = ['check_routes', 'compute_routes', 'error_response']
