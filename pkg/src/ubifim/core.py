"""Transaction databases, exact thresholds and the ubiquitous-item filter."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

ItemSet = tuple[int, ...]

MAX_ITEM_ID = 2**32 - 1


def canonical(items: Iterable[int]) -> ItemSet:
    """Sorted, duplicate-free tuple form of an item collection."""
    return tuple(sorted(set(items)))


def parse_fraction(text: str | int | Fraction) -> Fraction:
    """Parse a decimal threshold exactly ("0.3" -> 3/10).

    Floats are refused: their binary expansion would leak into the
    threshold comparisons.
    """
    if isinstance(text, float):
        raise TypeError("thresholds must be given as decimal strings, not floats")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a decimal number: {text!r}") from exc


@dataclass(frozen=True)
class TransactionDatabase:
    transactions: tuple[ItemSet, ...]
    census: Mapping[int, int] = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.transactions)

    @property
    def items(self) -> ItemSet:
        return tuple(sorted(self.census))

    def support(self, item: int) -> Fraction:
        if self.n == 0:
            return Fraction(0)
        return Fraction(self.census.get(item, 0), self.n)


def build_database(transactions: Iterable[Iterable[int]]) -> TransactionDatabase:
    rows = []
    census: Counter[int] = Counter()
    for raw in transactions:
        row = canonical(raw)
        for item in row:
            if item < 0 or item > MAX_ITEM_ID:
                raise ValueError(f"item id out of range: {item}")
        census.update(row)
        rows.append(row)
    return TransactionDatabase(tuple(rows), MappingProxyType(dict(census)))


def basket_support_count(db: TransactionDatabase, basket: Iterable[int]) -> int:
    wanted = set(basket)
    if not wanted:
        raise ValueError("support count of an empty basket is undefined")
    return sum(1 for t in db.transactions if wanted.issubset(t))


def min_support_count(n: int, s: Fraction) -> int:
    """Smallest m with m/n >= s, computed with integers only."""
    if n < 0:
        raise ValueError("n must be non-negative")
    # ceil(s.num * n / s.den)
    return -((-s.numerator * n) // s.denominator)


def is_ubiquitous(count: int, n: int, u: Fraction) -> bool:
    return count * u.denominator > u.numerator * n


def filter_ubiquitous(db: TransactionDatabase, u: Fraction) -> tuple[TransactionDatabase, ItemSet]:
    """Drop every item whose support is strictly above ``u``.

    Transactions left empty stay in the database so ``n`` is unchanged.
    """
    if not 0 < u <= 1:
        raise ValueError(f"ubiquitousness must lie in (0, 1], got {u}")
    ignored = tuple(i for i in sorted(db.census) if is_ubiquitous(db.census[i], db.n, u))
    if not ignored:
        return db, ()
    drop = set(ignored)
    rows = tuple(tuple(i for i in t if i not in drop) for t in db.transactions)
    census = {i: c for i, c in db.census.items() if i not in drop}
    return TransactionDatabase(rows, MappingProxyType(census)), ignored


def item_entropy(p: float) -> float:
    """Binary entropy in bits of an item present with probability ``p``."""
    p = float(p)
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ValueError(f"probability out of range: {p}")
    h = 0.0
    for q in (p, 1.0 - p):
        if q > 0.0:
            h -= q * math.log2(q)
    return h


@dataclass(frozen=True)
class MiningParams:
    support: Fraction
    confidence: Fraction
    ubiquitousness: Optional[Fraction] = None
    max_itemset_len: Optional[int] = None

    def __post_init__(self):
        for name in ("support", "confidence", "ubiquitousness"):
            value = getattr(self, name)
            if value is not None and not isinstance(value, Fraction):
                object.__setattr__(self, name, parse_fraction(value))
        self.validate()

    def validate(self) -> None:
        if not 0 <= self.support <= 1:
            raise ValueError(f"support must lie in [0, 1], got {self.support}")
        if not 0 <= self.confidence <= 1:
            raise ValueError(f"confidence must lie in [0, 1], got {self.confidence}")
        u = self.ubiquitousness
        if u is not None:
            if not 0 < u <= 1:
                raise ValueError(f"ubiquitousness must lie in (0, 1], got {u}")
            if self.support > u:
                raise ValueError(f"support {self.support} exceeds ubiquitousness {u}")
        if self.max_itemset_len is not None and self.max_itemset_len < 1:
            raise ValueError("max_itemset_len must be positive")


def fraction_text(value: Optional[Fraction]) -> str:
    """Render a threshold as decimal text, or ``a/b`` when it does not terminate."""
    if value is None:
        return ""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    places = max(twos, fives)
    scaled = value * 10**places
    text = str(scaled.numerator).rjust(places + 1, "0")
    if places == 0:
        return text
    return f"{text[:-places]}.{text[-places:]}"
