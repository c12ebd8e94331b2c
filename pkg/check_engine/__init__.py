"""
Check Engine Module
Randomized property checks and the dual-oracle comparator.
"""
from .base_check import BaseCheck, CheckResult
from .comparator import ComparisonResult, OracleComparator
from .checks import (
    WittCountsCheck,
    DualOracleCheck,
    IdentitySuiteCheck,
    LieCongruenceCheck,
    PetrescoCheck,
    GroupLawCheck,
    RadicabilityCheck,
    ResidualWitnessCheck,
    UnitriangularCheck,
    DimensionFiltrationCheck,
    LcsFiltrationCheck
)

# Check registry for lookup by id
CHECK_REGISTRY = {
    'witt_counts': WittCountsCheck,
    'dual_oracle': DualOracleCheck,
    'identity_suite': IdentitySuiteCheck,
    'lie_congruence': LieCongruenceCheck,
    'petresco': PetrescoCheck,
    'group_law': GroupLawCheck,
    'radicability': RadicabilityCheck,
    'residual_witness': ResidualWitnessCheck,
    'unitriangular': UnitriangularCheck,
    'dimension_filtration': DimensionFiltrationCheck,
    'lcs_filtration': LcsFiltrationCheck
}


def get_available_checks():
    """List registered checks with their configuration schemas"""
    checks = []
    for check_id, check_class in CHECK_REGISTRY.items():
        check = check_class()
        checks.append({
            'id': check_id,
            'name': check.name,
            'description': check.description,
            'config_schema': check.get_config_schema()
        })
    return checks


def create_check(check_id: str) -> BaseCheck:
    """Create a check instance by id"""
    if check_id not in CHECK_REGISTRY:
        raise ValueError(f"Unknown check: {check_id}")
    return CHECK_REGISTRY[check_id]()


__all__ = [
    'BaseCheck', 'CheckResult', 'ComparisonResult', 'OracleComparator',
    'WittCountsCheck', 'DualOracleCheck', 'IdentitySuiteCheck',
    'LieCongruenceCheck', 'PetrescoCheck', 'GroupLawCheck',
    'RadicabilityCheck', 'ResidualWitnessCheck', 'UnitriangularCheck',
    'DimensionFiltrationCheck', 'LcsFiltrationCheck',
    'CHECK_REGISTRY', 'get_available_checks', 'create_check'
]
