"""
Radicability Check
Roots taken with rational exponents undo integer powers, in coordinates and
in unitriangular matrices over Q.
"""
import time
from fractions import Fraction
from typing import Any, Dict, List

from algebra.collector import nilpotent_context
from algebra.group_law import fit_group_law, law_pow
from algebra.matrix_rep import binomial_pow, mat_pow, random_unitriangular
from algebra.rings import RATIONALS

from config import Defaults

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema
from ..sampling import random_rational_vector


class RadicabilityCheck(BaseCheck):
    """Unique m-th roots in Mal'cev coordinates and in T_n(Q)"""

    name = "Radicability"
    description = "law_pow and binomial matrix powers with exponent 1/m invert m-th powers"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Random cases
            max_root: Largest m
            max_dimension: Largest matrix size n
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 50)
        max_root = config.get('max_root', 5)
        max_dimension = config.get('max_dimension', 5)
        seed = config.get('seed', Defaults.SEED)

        law = fit_group_law(nilpotent_context(2, 3), validation_size=20, seed=seed)
        failures: List[Dict[str, Any]] = []
        for _ in range(trials):
            m = int(rng.integers(1, max_root + 1))
            a = random_rational_vector(rng, law.rank)
            root = law_pow(law, a, Fraction(1, m))
            if law_pow(law, root, m) != a:
                failures.append({'kind': 'coordinates', 'm': m, 'case': [str(v) for v in a]})

            n = int(rng.integers(2, max_dimension + 1))
            matrix = random_unitriangular(n, RATIONALS, rng)
            matrix_root = binomial_pow(matrix, Fraction(1, m))
            if binomial_pow(matrix_root, m) != matrix or mat_pow(matrix_root, m) != matrix:
                failures.append({'kind': 'matrix', 'm': m, 'case': repr(matrix)})

        return self.finish(started, trials, failures, {'max_root': max_root, 'max_dimension': max_dimension})

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(50, 'Random cases'),
                'max_root': {'type': 'integer', 'minimum': 1, 'default': 5, 'description': 'Largest m'},
                'max_dimension': {'type': 'integer', 'minimum': 2, 'default': 5, 'description': 'Largest n'},
                'seed': seed_schema(),
            },
            'required': []
        }
