"""
Identity Suite Check
Commutator identities collect to the identity under random substitutions.
"""
import time
from typing import Any, Callable, Dict, List, Tuple

from algebra.collector import GroupElement, collect, commutator, inv, mul, nilpotent_context
from algebra.words import Word, commutator_word, concat, conjugate_word, invert, render

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema
from ..sampling import random_word


def _conj(a: GroupElement, b: GroupElement) -> GroupElement:
    return mul(mul(inv(b), a), b)


# (name, word form, group form); each side is expected to be the identity
IDENTITIES: List[Tuple[str, Callable[..., Word], Callable[..., GroupElement]]] = [
    (
        '[x,yz] = [x,z][x,y]^z',
        lambda x, y, z: concat(commutator_word(x, concat(y, z)),
                               invert(concat(commutator_word(x, z), conjugate_word(commutator_word(x, y), z)))),
        lambda x, y, z: mul(commutator(x, mul(y, z)),
                            inv(mul(commutator(x, z), _conj(commutator(x, y), z)))),
    ),
    (
        '[xy,z] = [x,z]^y[y,z]',
        lambda x, y, z: concat(commutator_word(concat(x, y), z),
                               invert(concat(conjugate_word(commutator_word(x, z), y), commutator_word(y, z)))),
        lambda x, y, z: mul(commutator(mul(x, y), z),
                            inv(mul(_conj(commutator(x, z), y), commutator(y, z)))),
    ),
    (
        'Hall-Witt',
        lambda x, y, z: concat(
            conjugate_word(commutator_word(commutator_word(x, invert(y)), z), y),
            conjugate_word(commutator_word(commutator_word(y, invert(z)), x), z),
            conjugate_word(commutator_word(commutator_word(z, invert(x)), y), x),
        ),
        lambda x, y, z: mul(mul(
            _conj(commutator(commutator(x, inv(y)), z), y),
            _conj(commutator(commutator(y, inv(z)), x), z)),
            _conj(commutator(commutator(z, inv(x)), y), x)),
    ),
]


class IdentitySuiteCheck(BaseCheck):
    """Classical commutator identities in a free nilpotent group"""

    name = "Identity Suite"
    description = "Commutator expansion identities and the Hall-Witt identity hold for substituted words"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Random substitutions
            gens: Generator count of the context
            class_bound: Class of the context
            max_length: Longest substituted word
            literal_trials: Substitutions whose full identity word is collected letter by letter
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 100)
        q = config.get('gens', 3)
        c = config.get('class_bound', 5)
        max_length = config.get('max_length', 3)
        literal_trials = config.get('literal_trials', 3)
        ctx = nilpotent_context(q, c)

        failures = []
        for k in range(trials):
            words = [random_word(rng, q, max_length) for _ in range(3)]
            elements = [collect(ctx, w) for w in words]
            for name, word_form, group_form in IDENTITIES:
                results = {'group': group_form(*elements)}
                if k < literal_trials:
                    results['literal'] = collect(ctx, word_form(*words))
                for route, value in results.items():
                    if not value.is_identity():
                        failures.append({
                            'identity': name,
                            'route': route,
                            'words': ', '.join(render(w) for w in words),
                            'normal_form': str(value),
                        })

        return self.finish(started, trials, failures, {'q': q, 'c': c, 'identities': [i[0] for i in IDENTITIES]},
                           subject='substitutions')

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(100, 'Random substitutions'),
                'gens': {'type': 'integer', 'minimum': 2, 'default': 3, 'description': 'Generator count'},
                'class_bound': {'type': 'integer', 'minimum': 1, 'default': 5, 'description': 'Class'},
                'max_length': {'type': 'integer', 'minimum': 1, 'default': 3,
                               'description': 'Longest substituted word'},
                'literal_trials': {'type': 'integer', 'minimum': 0, 'default': 3,
                                   'description': 'Substitutions collected as literal words'},
                'seed': seed_schema(),
            },
            'required': []
        }
