"""Association rules from frequent itemsets, plus lift diagnostics."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .apriori import FrequentItemset, MiningTimeout
from .core import ItemSet, TransactionDatabase, basket_support_count


@dataclass(frozen=True)
class AssociationRule:
    lhs: ItemSet
    rhs: ItemSet
    support_count: int
    confidence: Fraction
    lift: float

    @property
    def itemset(self) -> ItemSet:
        return tuple(sorted(self.lhs + self.rhs))


def splits(itemset: ItemSet) -> Iterator[tuple[ItemSet, ItemSet]]:
    """All 2^n - 2 ordered (lhs, rhs) partitions with both sides non-empty."""
    size = len(itemset)
    for mask in range(1, (1 << size) - 1):
        lhs = tuple(itemset[i] for i in range(size) if mask >> i & 1)
        rhs = tuple(itemset[i] for i in range(size) if not mask >> i & 1)
        yield lhs, rhs


def generate_rules(
    frequent: Iterable[FrequentItemset],
    c: Fraction,
    n: Optional[int] = None,
    deadline: Optional[float] = None,
) -> list[AssociationRule]:
    """Emit every split ``L => R`` of a frequent itemset with count(X)/count(L) >= c.

    ``n`` (the transaction count) is needed for lift; without it lift is NaN.
    """
    frequent = list(frequent)
    counts = {f.itemset: f.count for f in frequent}
    rules = []
    for f in frequent:
        if len(f.itemset) < 2 or f.count == 0:
            continue
        if deadline is not None and time.perf_counter() > deadline:
            raise MiningTimeout("rule generation exceeded its time budget")
        for lhs, rhs in splits(f.itemset):
            try:
                lhs_count = counts[lhs]
                rhs_count = counts[rhs]
            except KeyError as exc:
                raise RuntimeError(f"frequent set is not downward closed: missing {exc}") from None
            if f.count * c.denominator < c.numerator * lhs_count:
                continue
            if n:
                lift = _lift(f.count, n, lhs_count, rhs_count)
            else:
                lift = float("nan")
            rules.append(AssociationRule(lhs, rhs, f.count, Fraction(f.count, lhs_count), lift))
    rules.sort(key=lambda r: (r.lhs, r.rhs))
    return rules


def rule_lift(rule: AssociationRule, db_n: int, lhs_count: int, rhs_count: int) -> float:
    """support(L u R) / (support(L) * support(R)), supports as fractions of ``db_n``."""
    return _lift(rule.support_count, db_n, lhs_count, rhs_count)


def _lift(joint_count: int, db_n: int, lhs_count: int, rhs_count: int) -> float:
    if db_n <= 0 or lhs_count <= 0 or rhs_count <= 0:
        raise ValueError("lift needs positive transaction, lhs and rhs counts")
    return joint_count * db_n / (lhs_count * rhs_count)


def lift_ratio_without_ubiquitous(db: TransactionDatabase, u_item: int, basket: ItemSet) -> float:
    """support{U} * support{B} / support{U, B}.

    Above 1 means the basket's lift improves once the ubiquitous item is dropped.
    """
    if u_item in basket:
        raise ValueError("the ubiquitous item must not be part of the basket")
    joint = basket_support_count(db, tuple(basket) + (u_item,))
    if joint == 0:
        raise ValueError("basket never occurs together with the ubiquitous item")
    u_count = basket_support_count(db, (u_item,))
    b_count = basket_support_count(db, basket)
    return float(Fraction(u_count * b_count, joint * db.n))
