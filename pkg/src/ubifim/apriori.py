"""Level-wise frequent itemset mining with downward-closure pruning.

Support counting is vertical: a single pass over the transactions builds a
transaction-id bitset (a Python int) per item, and the count of a candidate
is the popcount of the AND of its items' bitsets.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, groupby
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .core import ItemSet, MiningParams, TransactionDatabase, filter_ubiquitous, min_support_count


class MiningTimeout(RuntimeError):
    """Raised when a run passes its deadline."""


@dataclass(frozen=True, order=True)
class FrequentItemset:
    itemset: ItemSet
    count: int

    @property
    def level(self) -> int:
        return len(self.itemset)


@dataclass(frozen=True)
class LevelSummary:
    level: int
    candidate_count: int
    frequent_count: int


class MiningResult(NamedTuple):
    frequent: list[FrequentItemset]
    levels: list[LevelSummary]
    ignored: ItemSet


def candidate_join(prev_level: Sequence[ItemSet]) -> list[ItemSet]:
    """Join (k-1)-itemsets sharing their first k-2 items into k-itemsets."""
    out: list[ItemSet] = []
    for prefix, group in groupby(prev_level, key=lambda s: s[:-1]):
        tails = [s[-1] for s in group]
        for a, b in combinations(tails, 2):
            if a < b:
                out.append(prefix + (a, b))
            elif b < a:
                out.append(prefix + (b, a))
    out.sort()
    return out


def candidate_prune(candidates: Iterable[ItemSet], prev_frequent: set[ItemSet] | frozenset[ItemSet]) -> list[ItemSet]:
    kept = []
    for cand in candidates:
        # the two generating subsets (dropping one of the last two items) are frequent by construction,
        # but checking all of them keeps this usable on arbitrary input
        if all(cand[:i] + cand[i + 1:] in prev_frequent for i in range(len(cand))):
            kept.append(cand)
    return kept


def item_bitsets(db: TransactionDatabase, items: Optional[Iterable[int]] = None) -> dict[int, int]:
    """One pass over ``db``: item -> bitset of the transactions containing it."""
    wanted = None if items is None else set(items)
    tids: dict[int, list[int]] = {}
    for tid, row in enumerate(db.transactions):
        for item in row:
            if wanted is None or item in wanted:
                tids.setdefault(item, []).append(tid)
    bits = {item: _pack(tid_list, db.n) for item, tid_list in tids.items()}
    if wanted is not None:
        for item in wanted:
            bits.setdefault(item, 0)
    return bits


def _pack(tids: list[int], n: int) -> int:
    # setting bits one at a time on a Python int is quadratic in n
    flags = np.zeros(n, dtype=bool)
    flags[tids] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def count_candidates(db: TransactionDatabase, candidates: Sequence[ItemSet]) -> list[int]:
    if not candidates:
        return []
    bits = item_bitsets(db, {i for c in candidates for i in c})
    return _count_sorted(candidates, bits, (1 << db.n) - 1)


def _count_sorted(
    candidates: Sequence[ItemSet],
    bits: dict[int, int],
    everything: int,
    deadline: Optional[float] = None,
) -> list[int]:
    """Popcount of each candidate's AND, caching only the current prefix path.

    Sorted candidates share prefixes with their neighbours, so most cost one
    AND, and memory stays at one bitset per itemset level.
    """
    path: list[int] = []
    prev: ItemSet = ()
    counts = []
    for index, cand in enumerate(candidates):
        if index % 4096 == 4095:
            _check(deadline)
        common = 0
        limit = min(len(prev), len(cand)) - 1
        while common < limit and prev[common] == cand[common]:
            common += 1
        del path[common:]
        acc = path[-1] if path else everything
        for item in cand[common:]:
            acc &= bits[item]
            path.append(acc)
        counts.append(acc.bit_count())
        prev = cand
    return counts


def mine_frequent(
    db: TransactionDatabase,
    params: MiningParams,
    deadline: Optional[float] = None,
) -> MiningResult:
    """Every itemset over non-ubiquitous items whose count meets the support threshold.

    ``deadline`` is a ``time.perf_counter()`` value; passing it raises
    ``MiningTimeout``.
    """
    params.validate()
    ignored: ItemSet = ()
    if params.ubiquitousness is not None:
        db, ignored = filter_ubiquitous(db, params.ubiquitousness)

    minsup = min_support_count(db.n, params.support)
    max_len = params.max_itemset_len
    item_bits = item_bitsets(db)

    everything = (1 << db.n) - 1
    level = [(item,) for item in sorted(item_bits) if item_bits[item].bit_count() >= minsup]
    frequent = [FrequentItemset(s, item_bits[s[0]].bit_count()) for s in level]
    levels = [LevelSummary(1, len(item_bits), len(level))]

    k = 1
    while level and (max_len is None or k < max_len):
        _check(deadline)
        k += 1
        candidates = candidate_prune(candidate_join(level), set(level))
        if not candidates:
            break
        counts = _count_sorted(candidates, item_bits, everything, deadline)
        level = []
        for cand, count in zip(candidates, counts):
            if count >= minsup:
                level.append(cand)
                frequent.append(FrequentItemset(cand, count))
        levels.append(LevelSummary(k, len(candidates), len(level)))

    frequent.sort(key=lambda f: f.itemset)
    return MiningResult(frequent, levels, ignored)


def _check(deadline: Optional[float]) -> None:
    if deadline is not None and time.perf_counter() > deadline:
        raise MiningTimeout("mining exceeded its time budget")
