"""
Lower Central Filtration Check
lcs_weight([g, h]) >= min(c + 1, lcs_weight(g) + lcs_weight(h)).
"""
import time
from typing import Any, Dict, List

from algebra.collector import GroupElement, commutator, lcs_weight, nilpotent_context

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema
from ..sampling import random_element


class LcsFiltrationCheck(BaseCheck):
    """Commutators raise lower-central weight additively"""

    name = "Lower Central Filtration"
    description = "Commutator weights are at least the sum of the weights of their arguments"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Random element pairs
            class_bound: Class of the context (two generators)
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 200)
        c = config.get('class_bound', 5)
        ctx = nilpotent_context(2, c)

        failures: List[Dict[str, Any]] = []
        for _ in range(trials):
            g = self._deep_element(rng, ctx)
            h = self._deep_element(rng, ctx)
            bound = min(c + 1, lcs_weight(g) + lcs_weight(h))
            found = lcs_weight(commutator(g, h))
            if found < bound:
                failures.append({'g': str(g), 'h': str(h), 'bound': bound, 'found': found})

        return self.finish(started, trials, failures, {'class_bound': c}, subject='pairs')

    @staticmethod
    def _deep_element(rng, ctx) -> GroupElement:
        """Random element with every coordinate below a random weight cutoff set to zero"""
        cutoff = int(rng.integers(1, ctx.c + 1))
        g = random_element(rng, ctx)
        return ctx.element(0 if w < cutoff else e for w, e in zip(ctx.basis.weights, g.exponents))

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(200, 'Random element pairs'),
                'class_bound': {'type': 'integer', 'minimum': 1, 'default': 5, 'description': 'Class'},
                'seed': seed_schema(),
            },
            'required': []
        }
