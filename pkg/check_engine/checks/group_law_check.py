"""
Group Law Check
Fitted Mal'cev polynomials match known closed forms and satisfy the group
and exponent laws at rational points.
"""
import time
from typing import Any, Dict, List

from algebra.collector import nilpotent_context
from algebra.group_law import dependency_ok, fit_group_law, law_mul, law_pow

from config import Defaults

from ..base_check import BaseCheck, CheckResult, seed_schema, trials_schema
from ..sampling import random_rational, random_rational_vector

# zeta_3 = xi_3 + eta_3 + xi_2*eta_1 and omega_3 = lambda*xi_3 + C(lambda,2)*xi_1*xi_2
HEISENBERG_ZETA_3 = {
    (1, (('xi_3', 1),)),
    (1, (('eta_3', 1),)),
    (1, (('xi_2', 1), ('eta_1', 1))),
}
HEISENBERG_OMEGA_3 = {
    (1, (('lambda', 1), ('xi_3', 1))),
    (1, (('lambda', 2), ('xi_1', 1), ('xi_2', 1))),
}


class GroupLawCheck(BaseCheck):
    """Interpolated group laws against closed forms and group axioms"""

    name = "Group Law"
    description = "Fitted multiplication and power polynomials reproduce the collector and the group axioms"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            trials: Held-out integer points and random rational points per context
        """
        self.validate_config(config)
        started = time.perf_counter()
        rng = self.rng(config)
        trials = config.get('trials', 100)
        seed = config.get('seed', Defaults.SEED)

        failures: List[Dict[str, Any]] = []
        heisenberg = fit_group_law(nilpotent_context(2, 2), validation_size=trials, seed=seed)
        if set(heisenberg.mul_polys[2].terms) != HEISENBERG_ZETA_3:
            failures.append({'context': '(2,2)', 'kind': 'zeta_3', 'value': str(heisenberg.mul_polys[2])})
        if set(heisenberg.pow_polys[2].terms) != HEISENBERG_OMEGA_3:
            failures.append({'context': '(2,2)', 'kind': 'omega_3', 'value': str(heisenberg.pow_polys[2])})

        fitted = {}
        for q, c in ((2, 3), (3, 2)):
            # fit_group_law raises FitError if a held-out point disagrees with the collector
            law = fit_group_law(nilpotent_context(q, c), validation_size=trials, seed=seed)
            fitted[f"({q},{c})"] = [str(p) for p in law.mul_polys]
            label = f"({q},{c})"
            if not dependency_ok(law):
                failures.append({'context': label, 'kind': 'triangularity', 'value': ''})
            identity = tuple(0 for _ in range(law.rank))
            for _ in range(trials):
                a, b, d = (random_rational_vector(rng, law.rank) for _ in range(3))
                lam, mu = random_rational(rng), random_rational(rng)
                checks = {
                    'associativity': law_mul(law, law_mul(law, a, b), d) == law_mul(law, a, law_mul(law, b, d)),
                    'identity': law_mul(law, a, identity) == a and law_mul(law, identity, a) == a,
                    'inverse': law_mul(law, a, law_pow(law, a, -1)) == identity,
                    'sum of exponents': law_pow(law, a, lam + mu) == law_mul(law, law_pow(law, a, lam),
                                                                            law_pow(law, a, mu)),
                    'product of exponents': law_pow(law, a, lam * mu) == law_pow(law, law_pow(law, a, lam), mu),
                }
                for kind, ok in checks.items():
                    if not ok:
                        failures.append({'context': label, 'kind': kind,
                                         'value': f"a={[str(v) for v in a]} lambda={lam} mu={mu}"})

        return self.finish(started, 1 + 2 * trials, failures,
                           {'heisenberg_zeta': [str(p) for p in heisenberg.mul_polys],
                            'heisenberg_omega': [str(p) for p in heisenberg.pow_polys],
                            'fitted_zeta': fitted},
                           subject='points')

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'trials': trials_schema(100, 'Held-out and rational points per context'),
                'seed': seed_schema(),
            },
            'required': []
        }
