"""
Dual Oracle Check
Collector equality agrees with Magnus-embedding equality on random word pairs.
"""
import time
from typing import Any, Dict, List, Tuple

from algebra.collector import collect, nilpotent_context, representative_word
from algebra.words import Leaf, Word, bracket, concat, expand_commutator

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema
from ..comparator import OracleComparator
from ..sampling import random_word


class DualOracleCheck(BaseCheck):
    """Faithfulness of the normal form against the Magnus embedding"""

    name = "Dual Oracle"
    description = "Random word pairs: equal normal forms exactly when Magnus images agree"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Word pairs per class
            max_length: Longest random word
            max_class: Classes 2..max_class are tested with two generators
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 200)
        max_length = config.get('max_length', 12)
        max_class = config.get('max_class', 5)

        comparator = OracleComparator()
        failures = []
        summaries = {}
        for c in range(2, max_class + 1):
            ctx = nilpotent_context(2, c)
            # above class c every bracket of weight c + 1 vanishes
            vanishing = expand_commutator(bracket(*([Leaf(2), Leaf(1)] + [Leaf(1)] * (c - 1))))
            pairs: List[Tuple[Word, Word]] = []
            for k in range(trials):
                u = random_word(rng, 2, max_length)
                if k % 3 == 0:
                    v = representative_word(collect(ctx, u))
                elif k % 3 == 1:
                    v = concat(u, vanishing) if k % 2 else concat(vanishing, u)
                else:
                    v = random_word(rng, 2, max_length)
                pairs.append((u, v))
            result = comparator.compare_words(pairs, ctx)
            summaries[f"c={c}"] = result.summary
            for record in result.mismatches.to_dict('records'):
                failures.append({'class': c, **record})
            homomorphism = comparator.compare_homomorphism(pairs[: max(1, trials // 4)], ctx)
            for record in homomorphism.mismatches.to_dict('records'):
                failures.append({'class': c, 'kind': 'homomorphism', **record})

        return self.finish(started, trials * (max_class - 1), failures, {'summaries': summaries},
                           subject='word pairs')

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(200, 'Word pairs per class'),
                'max_length': {'type': 'integer', 'minimum': 1, 'default': 12,
                               'description': 'Longest random word'},
                'max_class': {'type': 'integer', 'minimum': 2, 'default': 5,
                              'description': 'Largest class tested'},
                'seed': seed_schema(),
            },
            'required': []
        }
