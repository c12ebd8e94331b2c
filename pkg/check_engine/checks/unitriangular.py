"""
Unitriangular Check
The level filtration K_i of T_n satisfies [K_i, K_j] <= K_(i+j), each K_i is
a subgroup, and T_n(F_2) has class exactly n - 1.
"""
import time
from typing import Any, Dict, List

from algebra.matrix_rep import (
    UniTriMatrix,
    class_witness,
    left_normed_commutator,
    level,
    mat_commutator,
    mat_inv,
    random_unitriangular,
)
from algebra.rings import INTEGERS, prime_field

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema


class UnitriangularCheck(BaseCheck):
    """Filtration and class of unitriangular groups"""

    name = "Unitriangular Groups"
    description = "Commutator levels add up and T_n(F_2) is nilpotent of class exactly n - 1"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Random matrix pairs
            max_dimension: Largest n for the filtration test
            max_class_dimension: Largest n for the class test
            class_trials: Random commutator tuples per dimension in the class test
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 200)
        max_dimension = config.get('max_dimension', 6)
        max_class_dimension = config.get('max_class_dimension', 5)
        class_trials = config.get('class_trials', 20)

        failures: List[Dict[str, Any]] = []
        for k in range(trials):
            ring = INTEGERS if k % 2 == 0 else prime_field(2)
            n = int(rng.integers(2, max_dimension + 1))
            a = random_unitriangular(n, ring, rng, min_level=int(rng.integers(1, n)))
            b = random_unitriangular(n, ring, rng, min_level=int(rng.integers(1, n)))
            la, lb = level(a), level(b)
            lc = level(mat_commutator(a, b))
            if lc < min(n, la + lb):
                failures.append({'kind': 'filtration', 'ring': ring.tag, 'n': n, 'levels': (la, lb, lc)})
            if level(a @ b) < min(la, lb) or level(mat_inv(a)) < la:
                failures.append({'kind': 'subgroup', 'ring': ring.tag, 'n': n, 'levels': (la, lb, lc)})

        for n in range(2, max_class_dimension + 1):
            generators = class_witness(n, 2)
            top = left_normed_commutator(generators)
            expected = UniTriMatrix.elementary(n, 1, n, prime_field(2))
            if top != expected:
                failures.append({'kind': 'class witness', 'ring': 'Fp:2', 'n': n, 'levels': level(top)})

            for k in range(class_trials):
                ring = INTEGERS if k % 2 == 0 else prime_field(2)
                # n-fold commutators land in K_n = {I}
                factors = [random_unitriangular(n, ring, rng) for _ in range(n)]
                found = level(left_normed_commutator(factors))
                if found < n:
                    failures.append({'kind': 'class bound', 'ring': ring.tag, 'n': n, 'levels': found})

                size = int(rng.integers(2, n + 1))
                shorter = [random_unitriangular(n, ring, rng, min_level=int(rng.integers(1, n)))
                           for _ in range(size)]
                levels = [level(m) for m in shorter]
                found = level(left_normed_commutator(shorter))
                if found < min(n, sum(levels)):
                    failures.append({'kind': 'iterated filtration', 'ring': ring.tag, 'n': n,
                                     'levels': (*levels, found)})

        class_cases = (max_class_dimension - 1) * (1 + class_trials)
        return self.finish(started, trials + class_cases, failures,
                           {'max_dimension': max_dimension, 'max_class_dimension': max_class_dimension})

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(200, 'Random matrix pairs'),
                'max_dimension': {'type': 'integer', 'minimum': 2, 'default': 6, 'description': 'Largest n'},
                'max_class_dimension': {'type': 'integer', 'minimum': 2, 'default': 5,
                                        'description': 'Largest n for the class test'},
                'class_trials': {'type': 'integer', 'minimum': 0, 'default': 20,
                                 'description': 'Random commutator tuples per dimension'},
                'seed': seed_schema(),
            },
            'required': []
        }
