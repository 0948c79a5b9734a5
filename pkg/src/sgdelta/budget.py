"""Explicit resource budgets for the exact engines.

Exceeding a budget raises BudgetExceeded, which is a distinct outcome from a
falsified claim: it means "unknown at this cost", never "false".
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Budget:
    max_element: int
    max_factorizations: int = 10_000_000
    max_seconds: float | None = None


# The max-norm engine walks every element up to its certificate horizon, so
# its default is tighter than the 0-norm scan (a few vector ops per element).
DEFAULT_INF_BUDGET = Budget(max_element=300_000)
DEFAULT_ZERO_BUDGET = Budget(max_element=5_000_000)
