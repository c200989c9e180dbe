import math
import random
import statistics
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import MILK, SUGAR, small_databases, hundredths
from ubifim.apriori import mine_frequent
from ubifim.core import MiningParams, build_database
from ubifim.oracle import (
    BRUTE_FORCE_MAX_ITEMS,
    UbiquityCountInputs,
    brute_force_frequent,
    brute_force_rules,
    expected_level_count,
    possible_basket_count,
    ubiquitous_basket_count,
)


def test_brute_force_supermarket(supermarket):
    found = brute_force_frequent(supermarket, MiningParams("2/3", "0"))
    assert [(f.itemset, f.count) for f in found] == [((MILK,), 2), ((MILK, SUGAR), 2), ((SUGAR,), 2)]


def test_brute_force_zero_support_reports_everything(supermarket):
    found = brute_force_frequent(supermarket, MiningParams("0", "0"))
    assert len(found) == 2**7 - 1
    assert sum(1 for f in found if f.count == 0) > 0


def test_brute_force_empty_and_cap():
    assert brute_force_frequent(build_database([]), MiningParams("0.1", "0")) == []
    wide = build_database([list(range(BRUTE_FORCE_MAX_ITEMS + 1))])
    with pytest.raises(ValueError, match=str(BRUTE_FORCE_MAX_ITEMS)):
        brute_force_frequent(wide, MiningParams("1", "0"))


def test_brute_force_rules_examples(supermarket):
    rules = brute_force_rules(build_database([[1, 2]]), MiningParams("1", "1"))
    assert [(r.lhs, r.rhs, r.confidence) for r in rules] == [((1,), (2,), 1), ((2,), (1,), 1)]
    rules = brute_force_rules(supermarket, MiningParams("2/3", "1"))
    assert [(r.lhs, r.rhs) for r in rules] == [((MILK,), (SUGAR,)), ((SUGAR,), (MILK,))]
    db = build_database([[1, 2], [1], [2]])
    # best achievable confidence is 1/2
    assert brute_force_rules(db, MiningParams("0", "0.51")) == []


def test_possible_basket_count():
    by_enumeration = sum(1 for k in range(2, 8) for _ in combinations(range(7), k))
    assert possible_basket_count(7) == by_enumeration == 120
    assert possible_basket_count(2) == 1
    assert possible_basket_count(1) == 0 and possible_basket_count(0) == 0
    assert possible_basket_count(64) == 2**64 - 65
    with pytest.raises(OverflowError):
        possible_basket_count(65)


def test_expected_level_count_values():
    assert expected_level_count(4, 4, 1.0) == 1
    assert expected_level_count(9, 0, 0.37) == 1
    assert expected_level_count(10, 3, 0.3) == pytest.approx(3.24, abs=1e-12)


def test_expected_level_count_statistical():
    """Mean number of k-baskets found in one random transaction of i.i.d. items."""
    n_items, level, p = 10, 3, 0.3
    rng = random.Random(20240601)
    observed = []
    for _ in range(400):
        row = [i for i in range(n_items) if rng.random() < p]
        if not row:
            observed.append(0)
            continue
        db = build_database([row])
        found = mine_frequent(db, MiningParams("1", "0")).frequent
        observed.append(sum(1 for f in found if f.level == level))
    mean = statistics.fmean(observed)
    stderr = statistics.stdev(observed) / math.sqrt(len(observed))
    assert abs(mean - expected_level_count(n_items, level, p)) < 3 * stderr


def _append_always(db, extra):
    return build_database([list(t) + extra for t in db.transactions])


def _multi_item_count(frequent):
    return sum(1 for f in frequent if f.level >= 2)


def test_ubiquitous_basket_count_examples():
    assert ubiquitous_basket_count(UbiquityCountInputs(0, 0, 4)) == 11 == 6 + 4 + 1
    assert ubiquitous_basket_count(UbiquityCountInputs(17, 5, 0)) == 17
    # x=3 pairs, m=5 singletons at s=1/4
    base = build_database([[1, 2], [1, 3], [1, 4], [5]])
    params = MiningParams("0.25", "0")
    found = brute_force_frequent(base, params)
    assert _multi_item_count(found) == 3 and sum(f.level == 1 for f in found) == 5
    augmented = _append_always(base, [100, 101])
    assert _multi_item_count(brute_force_frequent(augmented, params)) == 28
    assert ubiquitous_basket_count(UbiquityCountInputs(3, 5, 2)) == 28
    with pytest.raises(ValueError):
        UbiquityCountInputs(-1, 0, 0)


@settings(max_examples=80, deadline=None)
@given(small_databases(max_items=6, max_transactions=20), hundredths(1, 100), st.integers(0, 4))
def test_eq3_by_construction(db, s, l):
    params = MiningParams(s, "0")
    before = brute_force_frequent(db, params)
    x = _multi_item_count(before)
    m = sum(1 for f in before if f.level == 1)
    augmented = _append_always(db, [1000 + j for j in range(l)])
    after = brute_force_frequent(augmented, params)
    assert _multi_item_count(after) == ubiquitous_basket_count(UbiquityCountInputs(x, m, l))
    # a ubiquitousness cutoff below 1 strips the appended items again
    if l and all(db.census[i] < db.n for i in db.census) and s < 1:
        u = max(s, max(Fraction(c, db.n) for c in db.census.values()))
        filtered = mine_frequent(augmented, MiningParams(s, "0", u))
        assert _multi_item_count(filtered.frequent) == x
