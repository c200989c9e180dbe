import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from ubifim.core import build_database

DATA = Path(__file__).parent / "data"

# alphabetical ids for the supermarket example
BREAD, COFFEE, EGGS, MEAT, MILK, SALT, SUGAR = range(1, 8)
SUPERMARKET = [[BREAD, MILK, SUGAR], [COFFEE, EGGS, MILK, SUGAR], [MEAT, SALT]]

_acceptance_lines: list[str] = []


@pytest.fixture
def supermarket():
    return build_database(SUPERMARKET)


@pytest.fixture
def acceptance_log():
    def log(criterion: str, passed: bool | None, detail: str = "") -> None:
        status = "SKIP" if passed is None else "PASS" if passed else "FAIL"
        _acceptance_lines.append(f"[{status}] {criterion}" + (f": {detail}" if detail else ""))

    return log


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def random_database(rng: random.Random, max_items: int = 12, max_transactions: int = 200):
    """Random db whose items get individual presence rates, so some run ubiquitous."""
    n_items = rng.randint(1, max_items)
    n_tx = rng.randint(1, max_transactions)
    rates = [rng.uniform(0.05, 1.0) for _ in range(n_items)]
    rows = []
    for _ in range(n_tx):
        row = [i for i in range(n_items) if rng.random() < rates[i]]
        rows.append(row or [rng.randrange(n_items)])
    return build_database(rows)


@st.composite
def small_databases(draw, max_items=8, max_transactions=40):
    n_items = draw(st.integers(1, max_items))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, n_items - 1), min_size=1, max_size=n_items),
            min_size=1,
            max_size=max_transactions,
        )
    )
    return build_database(rows)


def hundredths(lo: int, hi: int):
    return st.integers(lo, hi).map(lambda k: Fraction(k, 100))
