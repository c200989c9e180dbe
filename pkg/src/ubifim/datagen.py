"""Seeded generator of uncorrelated transactions with exact item supports."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import TransactionDatabase, build_database, parse_fraction

RNG_ALGORITHM = "numpy-PCG64/SeedSequence(seed, spawn_key=(item_index,))"
DEFAULT_TRANSACTIONS = 10_000

_REGULAR = ((10, Fraction(3, 10)), (5, Fraction(1, 2)))
PRESETS = {
    "FIM1": _REGULAR,
    "FIM2": _REGULAR + ((2, Fraction(1)),),
    "FIM3": _REGULAR + ((4, Fraction(1)),),
    "FIM4": _REGULAR + ((6, Fraction(1)),),
    "FIM5": _REGULAR + ((2, Fraction(4, 5)), (2, Fraction(9, 10)), (2, Fraction(1))),
}


@dataclass(frozen=True)
class GeneratorSpec:
    groups: tuple[tuple[int, Fraction], ...]
    n_transactions: int = DEFAULT_TRANSACTIONS
    seed: int = 0

    def __post_init__(self):
        if self.n_transactions < 1:
            raise ValueError("n_transactions must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for count, support in self.groups:
            if count < 1:
                raise ValueError(f"group item count must be positive, got {count}")
            if not 0 < support <= 1:
                raise ValueError(f"target support must lie in (0, 1], got {support}")

    @property
    def item_count(self) -> int:
        return sum(count for count, _ in self.groups)

    def item_targets(self) -> list[int]:
        """Exact occurrence count for each item, in item order."""
        targets = []
        for count, support in self.groups:
            occurrences = math.floor(support * self.n_transactions + Fraction(1, 2))
            if occurrences == 0:
                raise ValueError(
                    f"support {support} rounds to zero occurrences in {self.n_transactions} transactions"
                )
            targets.extend([occurrences] * count)
        return targets


def parse_spec(text: str) -> tuple[tuple[int, Fraction], ...]:
    """Parse ``"10:0.3,5:0.5"`` into (item count, support) groups."""
    groups = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            count_text, support_text = token.split(":")
            count = int(count_text)
            support = parse_fraction(support_text)
        except ValueError:
            raise ValueError(f"bad group {token!r}, expected COUNT:SUPPORT") from None
        if count < 1 or not 0 < support <= 1:
            raise ValueError(f"bad group {token!r}, expected COUNT>=1 and 0<SUPPORT<=1")
        groups.append((count, support))
    if not groups:
        raise ValueError("empty generator spec")
    return tuple(groups)


def experiment_spec(name: str, n_transactions: int = DEFAULT_TRANSACTIONS, seed: int = 0) -> GeneratorSpec:
    try:
        groups = PRESETS[name.upper()]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
    return GeneratorSpec(groups, n_transactions, seed)


def generate(spec: GeneratorSpec) -> TransactionDatabase:
    """Place item ``k`` (ids start at 1) in exactly its target number of transactions.

    Each item draws from its own substream keyed by (seed, item index), so
    appending groups leaves earlier items' placements untouched.  Transactions
    nobody lands in stay in the database as empty rows.
    """
    n = spec.n_transactions
    rows: list[list[int]] = [[] for _ in range(n)]
    for index, occurrences in enumerate(spec.item_targets()):
        item = index + 1
        if occurrences == n:
            chosen = range(n)
        else:
            rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(spec.seed, spawn_key=(index,))))
            chosen = rng.choice(n, size=occurrences, replace=False).tolist()
        for tid in chosen:
            rows[tid].append(item)
    return build_database(rows)
