"""FIMI transaction files, rule CSVs and flat ``key=value`` run reports."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Optional, TextIO

from .apriori import LevelSummary
from .core import ItemSet, MiningParams, TransactionDatabase, build_database, fraction_text, parse_fraction
from .rules import AssociationRule

RULES_HEADER = "lhs,rhs,support_count,support,confidence,lift"


class FimiParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class MiningReport:
    params: MiningParams
    ignored_items: ItemSet
    n_transactions: int
    levels: tuple[LevelSummary, ...]
    rule_count: int
    frequent_count: int
    wall_time_ms: float


def parse_fimi(stream: Iterable[str]) -> TransactionDatabase:
    rows = []
    for line_no, line in enumerate(stream, start=1):
        tokens = line.split()
        if not tokens:
            continue
        row = []
        for token in tokens:
            try:
                item = int(token)
            except ValueError:
                raise FimiParseError(line_no, f"item id is not an integer: {token!r}") from None
            if item < 0:
                raise FimiParseError(line_no, f"negative item id: {item}")
            row.append(item)
        rows.append(row)
    return build_database(rows)


def read_fimi(path) -> TransactionDatabase:
    with open(path, encoding="utf-8") as fh:
        return parse_fimi(fh)


def write_fimi(db: TransactionDatabase, writer: TextIO) -> None:
    for row in db.transactions:
        writer.write(" ".join(map(str, row)))
        writer.write("\n")


def decimal6(value) -> str:
    """Fixed six-place decimal, independent of locale and float rounding."""
    if isinstance(value, float):
        return f"{value:.6f}"
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = 60
        return format(Decimal(value.numerator) / Decimal(value.denominator), ".6f")


def _items(itemset: ItemSet) -> str:
    return "|".join(map(str, itemset))


def write_rules_csv(rules: Iterable[AssociationRule], writer: TextIO, n: int) -> None:
    writer.write(RULES_HEADER + "\n")
    for r in rules:
        support = Fraction(r.support_count, n) if n else Fraction(0)
        writer.write(
            f"{_items(r.lhs)},{_items(r.rhs)},{r.support_count},"
            f"{decimal6(support)},{decimal6(r.confidence)},{decimal6(r.lift)}\n"
        )


def write_report(report: MiningReport, writer: TextIO) -> None:
    p = report.params
    lines = [
        ("support", fraction_text(p.support)),
        ("confidence", fraction_text(p.confidence)),
        ("ubiquitousness", fraction_text(p.ubiquitousness)),
        ("max_itemset_len", "" if p.max_itemset_len is None else str(p.max_itemset_len)),
        ("n_transactions", str(report.n_transactions)),
        ("ignored_items", _items(report.ignored_items)),
        ("ignored_items_count", str(len(report.ignored_items))),
        ("frequent_count", str(report.frequent_count)),
        ("rule_count", str(report.rule_count)),
        ("wall_time_ms", repr(float(report.wall_time_ms))),
    ]
    for lv in report.levels:
        lines.append((f"level.{lv.level}.candidates", str(lv.candidate_count)))
        lines.append((f"level.{lv.level}.frequent", str(lv.frequent_count)))
    for key, value in lines:
        writer.write(f"{key}={value}\n")


def parse_report(stream: Iterable[str]) -> MiningReport:
    fields: dict[str, str] = {}
    for line in stream:
        line = line.rstrip("\n")
        if line:
            key, _, value = line.partition("=")
            fields[key] = value

    def optional(key: str) -> Optional[str]:
        return fields.get(key) or None

    levels = {}
    for key, value in fields.items():
        if key.startswith("level."):
            _, k, kind = key.split(".")
            levels.setdefault(int(k), {})[kind] = int(value)
    u = optional("ubiquitousness")
    max_len = optional("max_itemset_len")
    params = MiningParams(
        support=parse_fraction(fields["support"]),
        confidence=parse_fraction(fields["confidence"]),
        ubiquitousness=None if u is None else parse_fraction(u),
        max_itemset_len=None if max_len is None else int(max_len),
    )
    ignored = optional("ignored_items")
    return MiningReport(
        params=params,
        ignored_items=() if ignored is None else tuple(int(i) for i in ignored.split("|")),
        n_transactions=int(fields["n_transactions"]),
        levels=tuple(
            LevelSummary(k, v["candidates"], v["frequent"]) for k, v in sorted(levels.items())
        ),
        rule_count=int(fields["rule_count"]),
        frequent_count=int(fields["frequent_count"]),
        wall_time_ms=float(fields["wall_time_ms"]),
    )
