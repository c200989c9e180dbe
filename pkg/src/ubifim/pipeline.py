"""filter -> mine -> rules, timed as one unit."""

from __future__ import annotations

import time
from typing import Optional

from .apriori import MiningResult, mine_frequent
from .core import MiningParams, TransactionDatabase
from .fimi_io import MiningReport
from .rules import AssociationRule, generate_rules


def run(
    db: TransactionDatabase,
    params: MiningParams,
    time_budget: Optional[float] = None,
) -> tuple[MiningResult, list[AssociationRule], MiningReport]:
    """Mine ``db`` and derive rules; ``time_budget`` is in seconds.

    Raises ``MiningTimeout`` once the budget is spent.
    """
    start = time.perf_counter()
    deadline = None if time_budget is None else start + time_budget
    result = mine_frequent(db, params, deadline=deadline)
    rules = generate_rules(result.frequent, params.confidence, n=db.n, deadline=deadline)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    report = MiningReport(
        params=params,
        ignored_items=result.ignored,
        n_transactions=db.n,
        levels=tuple(result.levels),
        rule_count=len(rules),
        frequent_count=len(result.frequent),
        wall_time_ms=elapsed_ms,
    )
    return result, rules, report
