"""
Petresco Check
The Petresco recurrence holds exactly and tau_w lies in gamma_w.
"""
import time
from typing import Any, Dict

from algebra.collector import collect, nilpotent_context, substitute
from algebra.petresco import petresco, verify_recurrence, verify_tau_weight
from algebra.words import render

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema
from ..sampling import random_element, random_word


class PetrescoCheck(BaseCheck):
    """Hall-Petresco words on random inputs"""

    name = "Petresco Words"
    description = "Recurrence identity, weight bound and substitution invariance of Petresco words"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Random configurations
            max_class: Largest class drawn
            max_gens: Largest generator count drawn
            bound: Exponent vector entries lie in [-bound, bound]
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 50)
        max_class = config.get('max_class', 4)
        max_gens = config.get('max_gens', 3)
        bound = config.get('bound', 3)

        failures = []
        for _ in range(trials):
            q = int(rng.integers(2, max_gens + 1))
            c = int(rng.integers(2, max_class + 1))
            n = int(rng.integers(1, 4))
            ctx = nilpotent_context(q, c)
            xs = [random_element(rng, ctx, bound) for _ in range(n)]
            result = petresco(ctx, xs, c)
            label = {'q': q, 'c': c, 'inputs': ' '.join(str(x) for x in xs)}
            if not verify_recurrence(result):
                failures.append({**label, 'kind': 'recurrence'})
            if not verify_tau_weight(result):
                failures.append({**label, 'kind': 'weight'})

            if n >= 2:
                # tau_w is verbal: compute on free generators, then substitute words
                words = [random_word(rng, q, 3) for _ in range(n)]
                free = nilpotent_context(n, c)
                generic = petresco(free, [free.unit(i) for i in range(1, n + 1)], c)
                direct = petresco(ctx, [collect(ctx, w) for w in words], c)
                for w in range(1, c + 1):
                    if substitute(generic.tau(w), words, ctx) != direct.tau(w):
                        failures.append({**label, 'kind': f'substitution tau_{w}',
                                         'inputs': ' '.join(render(x) for x in words)})

        return self.finish(started, trials, failures, {'max_class': max_class, 'max_gens': max_gens},
                           subject='configurations')

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(50, 'Random configurations'),
                'max_class': {'type': 'integer', 'minimum': 2, 'default': 4, 'description': 'Largest class'},
                'max_gens': {'type': 'integer', 'minimum': 2, 'default': 3, 'description': 'Largest q'},
                'bound': {'type': 'integer', 'minimum': 1, 'default': 3, 'description': 'Exponent bound'},
                'seed': seed_schema(),
            },
            'required': []
        }
