"""
Witt Counts Check
Generated Hall bases have witt_number(w, q) entries of each weight.
"""
import time
from typing import Any, Dict

from algebra.hall_basis import (
    check_prefix_stable,
    euler_product,
    generate_basis,
    weight_profile,
    witt_number,
)

from ..base_check import BaseCheck, CheckResult


class WittCountsCheck(BaseCheck):
    """Compare basis sizes per weight with the Witt formula"""

    name = "Witt Counts"
    description = "Counts basic commutators per weight and compares them with the necklace formula"

    def execute(self, config: Dict[str, Any]) -> CheckResult:
        """
        Config:
            max_class_q2: Largest class generated for two generators
            max_class_q3: Largest class generated for three generators
        """
        self.validate_config(config)
        started = time.perf_counter()
        bounds = {2: config.get('max_class_q2', 8), 3: config.get('max_class_q3', 6)}

        failures = []
        counts = {}
        trials = 0
        for q, c in bounds.items():
            basis = generate_basis(q, c)
            profile = weight_profile(basis)
            for w in range(1, c + 1):
                trials += 1
                expected = witt_number(w, q)
                counts[f"q={q},w={w}"] = profile.get(w, 0)
                if profile.get(w, 0) != expected:
                    failures.append({'q': q, 'weight': w, 'generated': profile.get(w, 0), 'expected': expected})

            trials += 1
            if c > 1 and not check_prefix_stable(generate_basis(q, c - 1).entries, basis.entries):
                failures.append({'q': q, 'weight': c, 'generated': 'prefix', 'expected': 'stable'})

            # prod (1 - t^w)^-n(w,q) = 1 / (1 - qt) through degree c
            trials += 1
            series = euler_product({w: witt_number(w, q) for w in range(1, c + 1)}, c)
            if series != [q ** j for j in range(c + 1)]:
                failures.append({'q': q, 'weight': c, 'generated': series, 'expected': 'powers of q'})

        return self.finish(started, trials, failures, {'counts': counts, 'bounds': bounds})

    def get_config_schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'max_class_q2': {'type': 'integer', 'minimum': 1, 'default': 8,
                                 'description': 'Largest class for q = 2'},
                'max_class_q3': {'type': 'integer', 'minimum': 1, 'default': 6,
                                 'description': 'Largest class for q = 3'},
                'seed': {'type': 'integer', 'minimum': 0, 'default': 0, 'description': 'Unused'},
            },
            'required': []
        }
