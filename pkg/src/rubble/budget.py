"""Work budgets for the exponential searches.

A budget caps the number of pebble distributions whose reachability gets
decided.  One unit is charged per distribution examined, whether by the
depth-first engine or by the level-by-level solvability table, so a single
limit bounds the total work of a rubbling-number scan or a survey run.
"""

import os
from dataclasses import dataclass

from .errors import BudgetExceededError

ENV_VAR = "RUBBLE_BUDGET"


@dataclass
class WorkBudget:
    limit: int | None = None
    used: int = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceededError(
                f"work budget of {self.limit} distribution evaluations exceeded"
            )


def budget_from_env() -> WorkBudget:
    """Budget from the RUBBLE_BUDGET environment variable (unlimited if unset)."""
    raw = os.environ.get(ENV_VAR)
    return WorkBudget(limit=int(raw)) if raw else WorkBudget()
