"""Command-line entry point: ``ubifim {mine,generate,stats,bench}``."""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .apriori import MiningTimeout
from .core import MiningParams, filter_ubiquitous, fraction_text, item_entropy, parse_fraction
from .datagen import DEFAULT_TRANSACTIONS, PRESETS, RNG_ALGORITHM, GeneratorSpec, experiment_spec, generate, parse_spec
from .fimi_io import FimiParseError, read_fimi, write_fimi, write_report, write_rules_csv
from .pipeline import run

EXIT_OK, EXIT_USAGE, EXIT_IO = 0, 1, 2
LONG_ITEMSET_WARNING = 20

BENCH_COLUMNS = [
    "ubiquitousness",
    "support",
    "confidence",
    "ignored_items",
    "frequent_count",
    "rule_count",
    "wall_time_ms",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threshold(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _threshold_list(text: str) -> list[Optional[Fraction]]:
    values = []
    for token in text.split(","):
        token = token.strip()
        if token.lower() == "none":
            values.append(None)
        elif token:
            values.append(_threshold(token))
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _params(flag_values: dict) -> MiningParams:
    """Build params, naming the offending flag on failure."""
    for flag in ("support", "confidence"):
        if flag_values[flag] is None:
            raise UsageError(f"--{flag} needs a value")
    for flag, value, low_open in (
        ("--support", flag_values["support"], False),
        ("--confidence", flag_values["confidence"], False),
        ("--ubiquitousness", flag_values.get("ubiquitousness"), True),
    ):
        if value is None:
            continue
        if value > 1 or value < 0 or (low_open and value == 0):
            bounds = "(0, 1]" if low_open else "[0, 1]"
            raise UsageError(f"{flag} must lie in {bounds}, got {fraction_text(value)}")
    max_len = flag_values.get("max_len")
    if max_len is not None and max_len < 1:
        raise UsageError("--max-len must be positive")
    try:
        return MiningParams(
            flag_values["support"],
            flag_values["confidence"],
            flag_values.get("ubiquitousness"),
            max_len,
        )
    except ValueError as exc:
        raise UsageError(f"--support/--ubiquitousness: {exc}") from None


def _load(path: str):
    try:
        return read_fimi(path)
    except FimiParseError as exc:
        raise OSError(f"{path}: {exc}") from None


def cmd_mine(args) -> int:
    params = _params(vars(args))
    db = _load(args.input)
    result, rules, report = run(db, params)
    deepest = max((lv.level for lv in result.levels if lv.frequent_count), default=0)
    if deepest >= LONG_ITEMSET_WARNING:
        print(
            f"warning: frequent itemsets reach {deepest} items; rule generation is exponential in itemset size",
            file=sys.stderr,
        )
    with open(args.rules_out, "w", encoding="utf-8", newline="\n") as fh:
        write_rules_csv(rules, fh, db.n)
    with open(args.report_out, "w", encoding="utf-8", newline="\n") as fh:
        write_report(report, fh)
    print(
        f"{db.n} transactions, {len(report.ignored_items)} ignored items, "
        f"{report.frequent_count} frequent itemsets, {report.rule_count} rules"
    )
    return EXIT_OK


def _generator_spec(args) -> GeneratorSpec:
    if (args.spec is None) == (args.preset is None):
        raise UsageError("give exactly one of --spec or --preset")
    try:
        if args.preset is not None:
            spec = experiment_spec(args.preset, args.transactions, args.seed)
        else:
            spec = GeneratorSpec(parse_spec(args.spec), args.transactions, args.seed)
        spec.item_targets()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return spec


def cmd_generate(args) -> int:
    spec = _generator_spec(args)
    db = generate(spec)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        write_fimi(db, fh)
    print(f"# rng={RNG_ALGORITHM} seed={spec.seed} transactions={db.n} items={len(db.census)}")
    for item in db.items:
        print(f"{item}\t{db.census[item]}\t{float(db.support(item)):.3f}")
    empty = sum(1 for t in db.transactions if not t)
    if empty:
        print(
            f"warning: {empty} transactions received no item and are written as blank lines, "
            "which FIMI readers skip",
            file=sys.stderr,
        )
    return EXIT_OK


def support_histogram(supports: Sequence[Fraction], buckets: int) -> list[int]:
    """Counts of supports in ``buckets`` equal-width bins over [0, 1]; 1.0 lands in the last bin."""
    hist = [0] * buckets
    for s in supports:
        hist[min(int(s * buckets), buckets - 1)] += 1
    return hist


def cmd_stats(args) -> int:
    if args.buckets < 1:
        raise UsageError("--buckets must be positive")
    db = _load(args.input)
    ranked = sorted(db.census.items(), key=lambda kv: (-kv[1], kv[0]))
    print(f"# transactions={db.n} items={len(ranked)}")
    print("item\tcount\tsupport\tentropy")
    for item, count in ranked:
        support = db.support(item)
        print(f"{item}\t{count}\t{float(support):.3f}\t{item_entropy(support):.3f}")
    print("# support histogram")
    hist = support_histogram([db.support(i) for i, _ in ranked], args.buckets)
    for k, count in enumerate(hist):
        lo, hi = k / args.buckets, (k + 1) / args.buckets
        close = "]" if k == args.buckets - 1 else ")"
        print(f"[{lo:.3f},{hi:.3f}{close}\t{count}\t{'#' * count}")
    return EXIT_OK


def bench_rows(db, ubiquitousness, supports, confidences, repeat=1, time_budget=None):
    """Yield one dict per (u, s, c) cell, u outermost as in the experiment tables."""
    for u in ubiquitousness:
        ignored = 0 if u is None else len(filter_ubiquitous(db, u)[1])
        for s in supports:
            for c in confidences:
                params = MiningParams(s, c, u)
                row = {
                    "ubiquitousness": "none" if u is None else fraction_text(u),
                    "support": fraction_text(s),
                    "confidence": fraction_text(c),
                    "ignored_items": ignored,
                }
                times = []
                try:
                    for _ in range(repeat):
                        _, _, report = run(db, params, time_budget)
                        times.append(report.wall_time_ms)
                except MiningTimeout:
                    row.update(
                        frequent_count="TIMEOUT",
                        rule_count="TIMEOUT",
                        wall_time_ms=f"{time_budget * 1000.0:.3f}",
                    )
                else:
                    row.update(
                        frequent_count=report.frequent_count,
                        rule_count=report.rule_count,
                        wall_time_ms=f"{statistics.median(times):.3f}",
                    )
                yield row


def cmd_bench(args) -> int:
    if (args.input is None) == (args.preset is None):
        raise UsageError("give exactly one of --input or --preset")
    if args.repeat < 1:
        raise UsageError("--repeat must be positive")
    for u in args.ubiquitousness:
        for s in args.supports:
            for c in args.confidence:
                _params({"support": s, "confidence": c, "ubiquitousness": u})
    if args.preset is not None:
        try:
            db = generate(experiment_spec(args.preset, args.transactions, args.seed))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        db = _load(args.input)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in bench_rows(
            db, args.ubiquitousness, args.supports, args.confidence, args.repeat, args.time_budget
        ):
            writer.writerow(row)
            fh.flush()
            print(",".join(str(row[k]) for k in BENCH_COLUMNS))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ubifim", description="Frequent itemset mining with a ubiquitousness cutoff.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mine", help="mine rules from a FIMI file")
    p.add_argument("--input", required=True)
    p.add_argument("--support", required=True, type=_threshold)
    p.add_argument("--confidence", required=True, type=_threshold)
    p.add_argument("--ubiquitousness", type=_threshold)
    p.add_argument("--max-len", type=int)
    p.add_argument("--rules-out", required=True)
    p.add_argument("--report-out", required=True)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("generate", help="write a synthetic FIMI dataset")
    p.add_argument("--spec", help='comma-separated COUNT:SUPPORT groups, e.g. "10:0.3,5:0.5"')
    p.add_argument("--preset", choices=sorted(PRESETS), type=str.upper)
    p.add_argument("--transactions", type=int, default=DEFAULT_TRANSACTIONS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("stats", help="item support table and histogram")
    p.add_argument("--input", required=True)
    p.add_argument("--buckets", type=int, default=10)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bench", help="run a (u, s, c) grid and write one CSV row per cell")
    p.add_argument("--input")
    p.add_argument("--preset", choices=sorted(PRESETS), type=str.upper)
    p.add_argument("--transactions", type=int, default=DEFAULT_TRANSACTIONS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--supports", required=True, type=_threshold_list)
    p.add_argument("--ubiquitousness", required=True, type=_threshold_list)
    p.add_argument("--confidence", required=True, type=_threshold_list)
    p.add_argument("--out", required=True)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--time-budget", type=float, default=300.0, help="seconds per cell before TIMEOUT")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ubifim {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ubifim {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
