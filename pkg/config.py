"""
Nilpotent Toolkit Configuration
Computation defaults shared by the CLI and the service; service settings are
loaded from environment variables.
"""
import os
from dotenv import load_dotenv


class Defaults:
    """Computation defaults; the CLI overrides them with flags only"""
    # Largest dense regular-representation matrix
    MAX_REP_DIMENSION = 10000

    # Group-law fitting
    GROUP_LAW_MAX_CLASS = 4
    FIT_BOX_RADIUS = 3
    FIT_VALIDATION_SIZE = 100

    # Residual witnesses above this degree are skipped by the checks
    WITNESS_MAX_DEGREE = 12

    SEED = 0


class Config(Defaults):
    """Base service configuration"""
    SECRET_KEY = os.getenv('SECRET_KEY', 'dev-secret-key-change-in-production')

    # Largest JSON request body
    MAX_CONTENT_LENGTH = 1 * 1024 * 1024

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FILE = os.getenv('LOG_FILE', '')


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False


class TestingConfig(Config):
    """Configuration used by the test suite"""
    TESTING = True
    LOG_FILE = ''


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def load_service_environment() -> None:
    """Read a .env file into the environment before building the service config"""
    load_dotenv()
    Config.SECRET_KEY = os.getenv('SECRET_KEY', Config.SECRET_KEY)
    Config.LOG_LEVEL = os.getenv('LOG_LEVEL', Config.LOG_LEVEL)
    Config.LOG_FILE = os.getenv('LOG_FILE', Config.LOG_FILE)
