"""
Nilpotent Toolkit - HTTP Service
JSON API over the same operations as the command line.
"""
import logging
import os

from flask import Flask, jsonify
from flask_cors import CORS
from werkzeug.exceptions import HTTPException

from algebra.errors import AlgebraError
from check_engine import CHECK_REGISTRY
from config import config, load_service_environment
from operations import OPERATIONS, ParameterError
from routes import check_routes, compute_routes, error_response
from utils.logger import setup_logger

LOGGED_PACKAGES = ('algebra', 'check_engine', 'operations', 'routes')


def create_app(config_name=None):
    """Application factory pattern"""
    if config_name is None:
        load_service_environment()
        config_name = os.getenv('FLASK_ENV', 'development')

    app = Flask(__name__)
    app.config.from_object(config[config_name])
    CORS(app)
    setup_logging(app)

    app.register_blueprint(compute_routes.bp, url_prefix='/api/compute')
    app.register_blueprint(check_routes.bp, url_prefix='/api/checks')

    @app.route('/api/health')
    def health():
        return {'status': 'ok'}

    @app.route('/api/')
    def index():
        return jsonify({
            'operations': sorted(OPERATIONS),
            'checks': sorted(CHECK_REGISTRY),
            'max_rep_dimension': app.config['MAX_REP_DIMENSION'],
        })

    @app.errorhandler(ParameterError)
    @app.errorhandler(AlgebraError)
    def algebra_error(error):
        return error_response(error)

    @app.errorhandler(HTTPException)
    def http_error(error):
        return jsonify({'error': error.name, 'message': error.description}), error.code

    @app.errorhandler(Exception)
    def internal_error(error):
        app.logger.exception(f'Unhandled error: {error}')
        return error_response(error)

    return app


def setup_logging(app):
    """Configure application and library logging"""
    level = app.config.get('LOG_LEVEL', 'INFO')
    log_file = app.config.get('LOG_FILE') or None

    for name in LOGGED_PACKAGES:
        setup_logger(name, log_file=log_file, level=level)

    app.logger.setLevel(getattr(logging, level.upper()))


if __name__ == '__main__':
    app = create_app()
    app.run(host='0.0.0.0', port=5000, debug=app.config.get('DEBUG', False))
