"""
Check Routes
Endpoints for listing and running the registered property checks.
"""
import logging

from flask import Blueprint, jsonify, request

from check_engine import create_check, get_available_checks

bp = Blueprint('checks', __name__)
logger = logging.getLogger(__name__)


@bp.route('/', methods=['GET'])
def list_checks():
    """List all available checks"""
    try:
        return jsonify({
            'success': True,
            'checks': get_available_checks()
        })
    except Exception as e:
        logger.error(f"Failed to list checks: {e}")
        return jsonify({'error': str(e)}), 500


@bp.route('/run', methods=['POST'])
def run_checks():
    """Run the requested checks"""
    data = request.get_json(silent=True) or {}
    checks_config = data.get('checks', [])

    if not checks_config:
        return jsonify({'error': 'At least one check is required'}), 400

    results = []
    all_passed = True

    for check_config in checks_config:
        check_id = check_config.get('check_id')
        config = check_config.get('config', {})

        if not check_id:
            results.append({
                'error': 'check_id is required for each check',
                'passed': False
            })
            all_passed = False
            continue

        try:
            check = create_check(check_id)
            result = check.execute(config)
            results.append(result.to_dict())

            if not result.passed:
                all_passed = False

        except Exception as e:
            logger.error(f"Check {check_id} failed: {e}")
            results.append({
                'check_name': check_id,
                'passed': False,
                'error': str(e)
            })
            all_passed = False

    return jsonify({
        'success': True,
        'passed': all_passed,
        'total_checks': len(results),
        'passed_count': sum(1 for r in results if r.get('passed', False)),
        'failed_count': sum(1 for r in results if not r.get('passed', True)),
        'results': results
    })
