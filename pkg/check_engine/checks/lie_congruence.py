"""
Lie Congruence Check
Magnus images of basic commutators agree with their Lie elements up to their
weight; same-weight Lie elements are independent and the basic products of
each weight form a basis of the degree-w monomials.
"""
import time
from typing import Any, Dict

from algebra.hall_basis import generate_basis
from algebra.linalg import exact_rank, integer_det
from algebra.magnus import basic_product_matrix, lie_coefficient_rows, magnus_congruence_defect

from ..base_check import BaseCheck, CheckResult


class LieCongruenceCheck(BaseCheck):
    """Leading terms of Magnus images and independence of Lie elements"""

    name = "Lie Congruence"
    description = "Magnus image minus 1 minus the Lie element vanishes up to the weight; Lie elements have full rank"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            gens: Generator count
            max_weight: Largest weight examined
        """
        self.validate_config(config)
        started = time.perf_counter()
        q = config.get('gens', 2)
        max_weight = config.get('max_weight', 5)
        basis = generate_basis(q, max_weight)

        failures = []
        trials = 0
        ranks = {}
        determinants = {}
        for entry in basis.entries:
            trials += 1
            defect = magnus_congruence_defect(entry.expr, q)
            if not defect.is_zero():
                failures.append({'kind': 'congruence', 'weight': entry.weight, 'entry': entry.render(),
                                 'value': str(defect)})

        for w in range(1, max_weight + 1):
            trials += 2
            exprs = [entry.expr for entry in basis.entries_of_weight(w)]
            rank = exact_rank(lie_coefficient_rows(exprs, q, w))
            ranks[w] = rank
            if rank != len(exprs):
                failures.append({'kind': 'rank', 'weight': w, 'entry': len(exprs), 'value': rank})
            det = integer_det(basic_product_matrix(basis, w))
            determinants[w] = det
            if abs(det) != 1:
                failures.append({'kind': 'basic products', 'weight': w, 'entry': q ** w, 'value': det})

        return self.finish(started, trials, failures,
                           {'q': q, 'max_weight': max_weight, 'ranks': ranks, 'determinants': determinants})

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'gens': {'type': 'integer', 'minimum': 2, 'default': 2, 'description': 'Generator count'},
                'max_weight': {'type': 'integer', 'minimum': 1, 'default': 5,
                               'description': 'Largest weight examined'},
                'seed': {'type': 'integer', 'minimum': 0, 'default': 0, 'description': 'Unused'},
            },
            'required': []
        }
