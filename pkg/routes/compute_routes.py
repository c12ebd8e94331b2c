"""
Compute Routes
POST /api/compute/<op> with the operation parameters as a JSON object.
"""
import logging

from flask import Blueprint, current_app, jsonify, request

from operations import OPERATIONS, run_operation
from routes import error_response

bp = Blueprint('compute', __name__)
logger = logging.getLogger(__name__)


@bp.route('/', methods=['GET'])
def list_operations():
    """List operations and their parameters"""
    operations = []
    for operation in OPERATIONS.values():
        operations.append({
            'name': operation.name,
            'description': operation.help,
            'parameters': [
                {'name': p.name, 'required': p.required, 'description': p.help,
                 'default': p.default if isinstance(p.default, (int, str)) else None}
                for p in operation.params
            ]
        })
    return jsonify({'success': True, 'operations': operations})


@bp.route('/<op>', methods=['POST'])
def compute(op):
    """Run one operation"""
    if op not in OPERATIONS:
        return jsonify({'error': 'Not found', 'message': f"Unknown operation: {op}"}), 404

    data = request.get_json(silent=True)
    if data is None:
        data = {}
    if not isinstance(data, dict):
        return jsonify({'error': 'Bad request', 'message': 'Body must be a JSON object'}), 400

    if op == 'rep' and 'max_dim' not in data:
        data = {**data, 'max_dim': current_app.config['MAX_REP_DIMENSION']}

    try:
        output = run_operation(op, data)
    except Exception as e:
        logger.warning(f"Operation {op} failed: {e}")
        return error_response(e)

    return jsonify({'success': True, 'operation': op, 'result': output.document})
