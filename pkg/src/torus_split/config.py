"""Default search budgets.

Setting the environment variable ``TORUS_SPLIT_BUDGET`` to an integer
replaces every default below with that value.
"""

import os

TORUS_BUDGET = 10**6
NORMALIZER_BUDGET = 5 * 10**6
BRUTE_FORCE_BUDGET = 2 * 10**5


def budget(default: int) -> int:
    override = os.environ.get("TORUS_SPLIT_BUDGET")
    if override:
        try:
            return int(override)
        except ValueError:
            pass
    return default
