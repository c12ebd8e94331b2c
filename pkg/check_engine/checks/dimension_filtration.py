"""
Dimension Filtration Check
Dimension weights over Q equal lower-central weights, and Hilbert
coefficients match brute-force counts of weighted monomials.
"""
import time
from typing import Any, Dict, List

from algebra.collector import collect, lcs_weight, nilpotent_context
from algebra.hall_basis import generate_basis
from algebra.magnus import dimension_weight, hilbert_coeffs
from algebra.rings import RATIONALS
from algebra.words import render

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema
from ..sampling import random_word


def brute_force_count(weights: List[int], j: int) -> int:
    """Number of exponent vectors r >= 0 with sum(r_i * weights[i]) == j, by enumeration"""
    def count(index: int, remaining: int) -> int:
        if index == len(weights):
            return int(remaining == 0)
        total = 0
        r = 0
        while r * weights[index] <= remaining:
            total += count(index + 1, remaining - r * weights[index])
            r += 1
        return total
    return count(0, j)


class DimensionFiltrationCheck(BaseCheck):
    """Jennings consistency and Hilbert coefficients"""

    name = "Dimension Filtration"
    description = "dimension_weight equals lcs_weight; Hilbert coefficients count weighted monomials"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Random words
            class_bound: Class of the context (two generators)
            max_length: Longest random word
            max_terms: Highest Hilbert coefficient compared
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 100)
        c = config.get('class_bound', 4)
        max_length = config.get('max_length', 10)
        max_terms = config.get('max_terms', 10)
        ctx = nilpotent_context(2, c)

        failures: List[Dict[str, Any]] = []
        for _ in range(trials):
            word = random_word(rng, 2, max_length)
            expected = lcs_weight(collect(ctx, word))
            found = dimension_weight(word, 2, c, RATIONALS)
            found = c + 1 if found is None else found
            if found != expected:
                failures.append({'kind': 'dimension', 'case': render(word), 'expected': expected, 'found': found})

        for hc in range(1, 4):
            weights = list(generate_basis(2, hc).weights)
            coeffs = hilbert_coeffs(2, hc, max_terms)
            for j, value in enumerate(coeffs):
                expected = brute_force_count(weights, j)
                if value != expected:
                    failures.append({'kind': 'hilbert', 'case': f"c={hc}, j={j}", 'expected': expected,
                                     'found': value})

        return self.finish(started, trials, failures,
                           {'class_bound': c, 'hilbert_q2_c2': hilbert_coeffs(2, 2, 4)}, subject='words')

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(100, 'Random words'),
                'class_bound': {'type': 'integer', 'minimum': 1, 'default': 4, 'description': 'Class'},
                'max_length': {'type': 'integer', 'minimum': 1, 'default': 10, 'description': 'Longest word'},
                'max_terms': {'type': 'integer', 'minimum': 0, 'default': 10,
                              'description': 'Highest Hilbert coefficient compared'},
                'seed': seed_schema(),
            },
            'required': []
        }
