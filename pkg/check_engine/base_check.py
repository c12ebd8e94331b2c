"""
Base Check Abstract Class
Defines the interface for all property and oracle checks.
"""
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from config import Defaults

MAX_REPORTED_FAILURES = 20


@dataclass
class CheckResult:
    """Result of a check execution"""
    check_name: str
    passed: bool
    message: str
    details: Dict[str, Any] = field(default_factory=dict)
    failures: Optional[pd.DataFrame] = None
    statistics: Dict[str, Any] = field(default_factory=dict)

    @staticmethod
    def _convert_to_serializable(obj):
        """Convert numpy and exact-arithmetic values to JSON-friendly types"""
        if isinstance(obj, dict):
            return {str(k): CheckResult._convert_to_serializable(v) for k, v in obj.items()}
        elif isinstance(obj, (list, tuple)):
            return [CheckResult._convert_to_serializable(item) for item in obj]
        elif isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, np.ndarray):
            return CheckResult._convert_to_serializable(obj.tolist())
        elif isinstance(obj, Fraction):
            return str(obj)
        elif isinstance(obj, int) and not isinstance(obj, bool) and abs(obj) > 2 ** 53:
            return str(obj)
        return obj

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        result = {
            'check_name': self.check_name,
            'passed': bool(self.passed),
            'message': self.message,
            'details': self._convert_to_serializable(self.details),
            'statistics': self._convert_to_serializable(self.statistics),
        }

        if self.failures is not None and not self.failures.empty:
            failed_data = self.failures.head(MAX_REPORTED_FAILURES).astype(str).to_dict('records')
            result['failures'] = failed_data
            result['failure_count'] = len(self.failures)

        return result


class BaseCheck(ABC):
    """Abstract base class for checks"""

    name: str = "Base Check"
    description: str = "Base check"

    @abstractmethod
    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Execute the check.

        Args:
            config: Check configuration parameters

        Returns:
            CheckResult with pass/fail status and details
        """
        pass

    @abstractmethod
    def get_config_schema(self) -> Dict[str, Any]:
        """
        Get the configuration schema for this check.

        Returns:
            Dictionary describing the configuration parameters
        """
        pass

    def validate_config(self, config: Dict[str, Any]) -> bool:
        """Validate configuration against schema"""
        schema = self.get_config_schema()
        required = schema.get('required', [])

        for name in required:
            if name not in config:
                raise ValueError(f"Missing required config field: {name}")

        for name, value in config.items():
            field_schema = schema.get('properties', {}).get(name)
            if field_schema is None:
                raise ValueError(f"Unknown config field: {name}")
            if field_schema.get('type') == 'integer':
                if not isinstance(value, int) or isinstance(value, bool):
                    raise ValueError(f"Config field {name} must be an integer")
                if 'minimum' in field_schema and value < field_schema['minimum']:
                    raise ValueError(f"Config field {name} must be at least {field_schema['minimum']}")

        return True

    def rng(self, config: Dict[str, Any]) -> np.random.Generator:
        return np.random.default_rng(config.get('seed', Defaults.SEED))

    def finish(self, started: float, trials: int, failures: List[Dict[str, Any]],
               details: Dict[str, Any], skipped: int = 0, subject: str = 'cases') -> CheckResult:
        """Assemble a CheckResult from collected counterexamples"""
        passed = not failures
        if passed:
            message = f"All {trials} {subject} pass"
        else:
            message = f"{len(failures)} of {trials} {subject} fail"
        if skipped:
            message += f" ({skipped} skipped)"
        return CheckResult(
            check_name=self.name,
            passed=passed,
            message=message,
            details=details,
            failures=pd.DataFrame(failures) if failures else pd.DataFrame(),
            statistics={
                'trials': trials,
                'failures': len(failures),
                'skipped': skipped,
                'elapsed_seconds': round(time.perf_counter() - started, 3),
            },
        )


def seed_schema(description: str = 'Random seed') -> Dict[str, Any]:
    return {'type': 'integer', 'minimum': 0, 'default': Defaults.SEED, 'description': description}


def trials_schema(default: int, description: str = 'Number of random trials') -> Dict[str, Any]:
    return {'type': 'integer', 'minimum': 1, 'default': default, 'description': description}
