"""Frequent itemset mining with a ubiquitousness cutoff on very frequent items."""

from .apriori import FrequentItemset, LevelSummary, MiningResult, MiningTimeout, mine_frequent
from .core import (
    MiningParams,
    TransactionDatabase,
    basket_support_count,
    build_database,
    filter_ubiquitous,
    item_entropy,
    min_support_count,
    parse_fraction,
)
from .rules import AssociationRule, generate_rules, lift_ratio_without_ubiquitous, rule_lift

__all__ = [
    "AssociationRule",
    "FrequentItemset",
    "LevelSummary",
    "MiningParams",
    "MiningResult",
    "MiningTimeout",
    "TransactionDatabase",
    "basket_support_count",
    "build_database",
    "filter_ubiquitous",
    "generate_rules",
    "item_entropy",
    "lift_ratio_without_ubiquitous",
    "mine_frequent",
    "min_support_count",
    "parse_fraction",
    "rule_lift",
]
