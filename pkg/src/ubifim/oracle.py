"""Brute-force references and closed-form basket counts.

Nothing here reuses the mining code path: subsets are enumerated as
bitmasks, counted by scanning every transaction, and thresholds are
compared as ``Fraction`` values rather than precomputed integer cutoffs.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .apriori import FrequentItemset
from .core import MiningParams, TransactionDatabase
from .rules import AssociationRule

BRUTE_FORCE_MAX_ITEMS = 20
_UINT64_LIMIT = 2**64


@dataclass(frozen=True)
class UbiquityCountInputs:
    x: int  # frequent baskets of size >= 2 over the regular items
    m: int  # frequent single regular items
    l: int  # items present in every transaction

    def __post_init__(self):
        if min(self.x, self.m, self.l) < 0:
            raise ValueError("counts must be non-negative")


def _universe(db: TransactionDatabase, params: MiningParams) -> list[int]:
    items = sorted(db.census)
    if params.ubiquitousness is not None and db.n:
        items = [i for i in items if Fraction(db.census[i], db.n) <= params.ubiquitousness]
    if len(items) > BRUTE_FORCE_MAX_ITEMS:
        raise ValueError(
            f"brute force is capped at {BRUTE_FORCE_MAX_ITEMS} items, database has {len(items)}"
        )
    return items


def _subset_counts(db: TransactionDatabase, items: list[int]) -> dict[int, int]:
    position = {item: i for i, item in enumerate(items)}
    rows = Counter()
    for t in db.transactions:
        mask = 0
        for item in t:
            if item in position:
                mask |= 1 << position[item]
        rows[mask] += 1
    counts = {}
    for subset in range(1, 1 << len(items)):
        counts[subset] = sum(c for row, c in rows.items() if row & subset == subset)
    return counts


def _is_frequent(count: int, n: int, s: Fraction) -> bool:
    if n == 0:
        return False
    return Fraction(count, n) >= s


def _decode(mask: int, items: list[int]) -> tuple[int, ...]:
    return tuple(items[i] for i in range(len(items)) if mask >> i & 1)


def brute_force_frequent(db: TransactionDatabase, params: MiningParams) -> list[FrequentItemset]:
    items = _universe(db, params)
    counts = _subset_counts(db, items)
    out = [
        FrequentItemset(_decode(mask, items), count)
        for mask, count in counts.items()
        if _is_frequent(count, db.n, params.support)
    ]
    if params.max_itemset_len is not None:
        out = [f for f in out if f.level <= params.max_itemset_len]
    out.sort(key=lambda f: f.itemset)
    return out


def brute_force_rules(db: TransactionDatabase, params: MiningParams) -> list[AssociationRule]:
    items = _universe(db, params)
    counts = _subset_counts(db, items)
    rules = []
    for mask, count in counts.items():
        size = bin(mask).count("1")
        if size < 2 or count == 0 or not _is_frequent(count, db.n, params.support):
            continue
        if params.max_itemset_len is not None and size > params.max_itemset_len:
            continue
        # every proper non-empty submask is a left-hand side
        lhs = (mask - 1) & mask
        while lhs:
            rhs = mask ^ lhs
            confidence = Fraction(count, counts[lhs])
            if confidence >= params.confidence:
                lift = float(Fraction(count * db.n, counts[lhs] * counts[rhs]))
                rules.append(
                    AssociationRule(_decode(lhs, items), _decode(rhs, items), count, confidence, lift)
                )
            lhs = (lhs - 1) & mask
    rules.sort(key=lambda r: (r.lhs, r.rhs))
    return rules


def possible_basket_count(item_count: int) -> int:
    """Number of baskets with at least two items: 2^I - I - 1 (0 below two items)."""
    if item_count < 0:
        raise ValueError("item count must be non-negative")
    if item_count < 2:
        return 0
    result = 2**item_count - item_count - 1
    if result >= _UINT64_LIMIT:
        raise OverflowError(f"2^{item_count} - {item_count} - 1 does not fit in 64 bits")
    return result


def expected_level_count(item_count: int, level: int, avg_support: float) -> float:
    """C(n, k) * s^k: expected number of k-item baskets present at average support s."""
    if not 0 <= level <= item_count:
        raise ValueError("level must lie in [0, item_count]")
    if not 0 <= avg_support <= 1:
        raise ValueError("average support must lie in [0, 1]")
    return math.comb(item_count, level) * float(avg_support) ** level


def ubiquitous_basket_count(inputs: UbiquityCountInputs) -> int:
    """Frequent baskets of size >= 2 after adding ``l`` always-present items."""
    x, m, l = inputs.x, inputs.m, inputs.l
    result = (x + m + 1) * 2**l - m - l - 1
    if result >= _UINT64_LIMIT:
        raise OverflowError("basket count does not fit in 64 bits")
    return result
