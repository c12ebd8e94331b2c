"""
Residual Witness Check
Every nontrivial word survives in a finite p-group quotient.
"""
import logging
import time
from typing import Any, Dict, List

from algebra.magnus import residual_witness, witness_degree
from algebra.matrix_rep import RegularRepresentation, p_power_order
from algebra.rings import prime_field
from algebra.words import render

from config import Defaults

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema
from ..sampling import random_nontrivial_word

logger = logging.getLogger(__name__)


class ResidualWitnessCheck(BaseCheck):
    """Residual finiteness certificates over F_p"""

    name = "Residual Witness"
    description = "Witness coefficients are nonzero and the regular representation over F_p has p-power order"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Random words per prime
            max_length: Longest random word
            max_degree: Words whose witness degree exceeds this are skipped
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 50)
        max_length = config.get('max_length', 8)
        max_degree = config.get('max_degree', Defaults.WITNESS_MAX_DEGREE)
        primes = (2, 3, 5)

        failures: List[Dict[str, Any]] = []
        skipped = 0
        for p in primes:
            for _ in range(trials):
                word = random_nontrivial_word(rng, 2, max_length)
                if witness_degree(word, p) > max_degree:
                    skipped += 1
                    logger.info(f"Skipping {render(word)} at p={p}: witness degree above {max_degree}")
                    continue
                witness = residual_witness(word, p, q=2)
                label = {'word': render(word), 'p': p, 'N': witness.N}
                if not witness.coeff:
                    failures.append({**label, 'kind': 'zero coefficient'})
                if witness.closed_form_coeff is not None and witness.closed_form_coeff != witness.coeff:
                    failures.append({**label, 'kind': 'closed form'})
                image = RegularRepresentation(2, witness.N, prime_field(p)).image(word)
                if image.is_identity():
                    failures.append({**label, 'kind': 'identity image'})
                elif p_power_order(image, p, witness.N) is None:
                    failures.append({**label, 'kind': 'order not a power of p'})

        return self.finish(started, trials * len(primes), failures,
                           {'primes': list(primes), 'max_degree': max_degree},
                           skipped=skipped, subject='words')

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(50, 'Random words per prime'),
                'max_length': {'type': 'integer', 'minimum': 1, 'default': 8, 'description': 'Longest word'},
                'max_degree': {'type': 'integer', 'minimum': 1, 'default': Defaults.WITNESS_MAX_DEGREE,
                               'description': 'Witness degree cap'},
                'seed': seed_schema(),
            },
            'required': []
        }
