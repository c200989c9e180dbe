from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import MILK, SUGAR, EGGS, SALT, small_databases, hundredths
from ubifim.core import (
    MiningParams,
    basket_support_count,
    build_database,
    filter_ubiquitous,
    fraction_text,
    item_entropy,
    min_support_count,
    parse_fraction,
)


def test_build_database_counts():
    db = build_database([[1, 2, 3], [2, 3], [1]])
    assert db.n == 3
    assert dict(db.census) == {1: 2, 2: 2, 3: 2}


def test_build_database_dedups():
    db = build_database([[5, 5, 5]])
    assert db.transactions == ((5,),)
    assert dict(db.census) == {5: 1}


def test_build_database_empty():
    db = build_database([])
    assert db.n == 0 and not db.census


def test_supermarket_census(supermarket):
    assert supermarket.census[MILK] == 2
    assert supermarket.census[SUGAR] == 2
    assert all(c == 1 for i, c in supermarket.census.items() if i not in (MILK, SUGAR))


def test_basket_support_count(supermarket):
    assert basket_support_count(supermarket, (EGGS, SUGAR)) == 1
    assert basket_support_count(supermarket, (EGGS, SALT)) == 0
    assert basket_support_count(supermarket, supermarket.transactions[1]) >= 1
    with pytest.raises(ValueError):
        basket_support_count(supermarket, ())


def _scan_min_count(n, s):
    return next(m for m in range(n + 1) if Fraction(m, n) >= s) if n else 0


@pytest.mark.parametrize("n, s, expected", [(100, "0.3", 30), (0, "0.7", 0), (7, "0.5", 4)])
def test_min_support_count(n, s, expected):
    assert min_support_count(n, parse_fraction(s)) == expected
    assert _scan_min_count(n, parse_fraction(s)) == expected


@given(st.integers(0, 1000), st.integers(0, 1000))
def test_min_support_count_matches_scan(n, thousandths):
    s = parse_fraction(f"{thousandths / 1000:.3f}")
    assert min_support_count(n, s) == _scan_min_count(n, s)


def test_parse_fraction_is_exact():
    assert parse_fraction("0.3") == Fraction(3, 10)
    assert parse_fraction("2/3") == Fraction(2, 3)
    with pytest.raises(TypeError):
        parse_fraction(0.3)
    with pytest.raises(ValueError):
        parse_fraction("abc")


@pytest.mark.parametrize("text", ["0", "1", "0.3", "0.05", "0.125", "2/3"])
def test_fraction_text_roundtrip(text):
    assert parse_fraction(fraction_text(parse_fraction(text))) == parse_fraction(text)


def _db_with_item_count(count, n=100):
    return build_database([[1, 2] if i < count else [2] for i in range(n)])


def test_filter_strictly_above_threshold():
    _, ignored = filter_ubiquitous(_db_with_item_count(71), Fraction(7, 10))
    assert 1 in ignored
    _, ignored = filter_ubiquitous(_db_with_item_count(70), Fraction(7, 10))
    assert 1 not in ignored


def test_filter_keeps_emptied_transactions():
    db = build_database([[1], [1, 2], [1]])
    filtered, ignored = filter_ubiquitous(db, Fraction(1, 2))
    assert ignored == (1,)
    assert filtered.n == 3
    assert filtered.transactions == ((), (2,), ())


@given(small_databases(), hundredths(1, 100), hundredths(1, 100))
def test_filter_properties(db, u1, u2):
    lo, hi = min(u1, u2), max(u1, u2)
    filtered, ignored_lo = filter_ubiquitous(db, lo)
    _, ignored_hi = filter_ubiquitous(db, hi)
    assert set(ignored_hi) <= set(ignored_lo)
    assert filtered.n == db.n
    again, ignored_again = filter_ubiquitous(filtered, lo)
    assert ignored_again == ()
    for item, count in db.census.items():
        assert basket_support_count(db, (item,)) == count
        assert 1 <= count <= db.n


def test_entropy_values():
    assert item_entropy(0.5) == 1.0
    assert item_entropy(0.0) == 0.0 and item_entropy(1.0) == 0.0
    assert item_entropy(0.2) == pytest.approx(0.7219280948873623, abs=1e-9)
    assert item_entropy(0.2) == pytest.approx(item_entropy(0.8), abs=1e-9)
    with pytest.raises(ValueError):
        item_entropy(1.5)


@given(st.floats(0, 1))
def test_entropy_symmetry(p):
    assert abs(item_entropy(p) - item_entropy(1 - p)) < 1e-12


def test_params_validation():
    MiningParams("0.3", "0.7", "0.65")
    with pytest.raises(ValueError):
        MiningParams("0.8", "0.7", "0.65")
    with pytest.raises(ValueError):
        MiningParams("1.1", "0.7")
    with pytest.raises(ValueError):
        MiningParams("0.1", "0.7", "0")
