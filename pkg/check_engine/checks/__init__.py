"""
Checks Package
Contains all property checks over the nilpotent-group toolkit.
"""
from .witt_counts import WittCountsCheck
from .dual_oracle import DualOracleCheck
from .identity_suite import IdentitySuiteCheck
from .lie_congruence import LieCongruenceCheck
from .petresco_check import PetrescoCheck
from .group_law_check import GroupLawCheck
from .radicability import RadicabilityCheck
from .residual_witness_check import ResidualWitnessCheck
from .unitriangular import UnitriangularCheck
from .dimension_filtration import DimensionFiltrationCheck
from .lcs_filtration import LcsFiltrationCheck

__all__ = [
    'WittCountsCheck',
    'DualOracleCheck',
    'IdentitySuiteCheck',
    'LieCongruenceCheck',
    'PetrescoCheck',
    'GroupLawCheck',
    'RadicabilityCheck',
    'ResidualWitnessCheck',
    'UnitriangularCheck',
    'DimensionFiltrationCheck',
    'LcsFiltrationCheck'
]
