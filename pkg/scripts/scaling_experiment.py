#!/usr/bin/env python3
"""Measure how the determinant engines scale on a doubling ladder of shapes.

Runs the fast cubic route (and the minor-expansion oracle while it stays
affordable) on random matrices whose dimensions double rung by rung, writes
the raw rows as CSV, and prints ratio columns: doubling both dimensions of a
cubic-cost algorithm should multiply the operation count by roughly eight,
while the oracle's cost explodes combinatorially and drops out of the table.

Usage:
    python3 scripts/scaling_experiment.py
    python3 scripts/scaling_experiment.py --rungs 6 --domain float --out scaling.csv
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from random import Random

from cullis.bench import BENCH_CAP, MethodReport, method_cost, run_sizes, to_csv
from cullis.scalars import DOMAINS


@dataclass(frozen=True)
class ExperimentConfig:
    base_rows: int = 8
    base_cols: int = 4
    rungs: int = 5
    domain: str = "int"
    seed: int = 2024
    repeats: int = 3
    out: str | None = None

    @property
    def sizes(self) -> list[tuple[int, int]]:
        return [(self.base_rows << i, self.base_cols << i) for i in range(self.rungs)]


@dataclass
class Ladder:
    """Reports for one method, in rung order, plus derived ratios."""
    method: str
    rows: list[MethodReport] = field(default_factory=list)

    def ratio_lines(self) -> list[str]:
        lines = []
        for prev, cur in zip(self.rows, self.rows[1:]):
            mult_ratio = cur.mults / prev.mults if prev.mults else float("inf")
            time_ratio = (cur.median_seconds / prev.median_seconds
                          if prev.median_seconds > 0 else float("inf"))
            lines.append(f"  {prev.n}x{prev.k} -> {cur.n}x{cur.k}: "
                         f"mults x{mult_ratio:.2f}, time x{time_ratio:.2f}")
        return lines


def parse_args(argv: list[str] | None = None) -> ExperimentConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--base", default="8x4", metavar="NxK",
                        help="shape of the first rung (default 8x4)")
    parser.add_argument("--rungs", type=int, default=5,
                        help="number of doublings to climb (default 5)")
    parser.add_argument("--domain", choices=sorted(DOMAINS), default="int")
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed repetitions per engine per shape")
    parser.add_argument("--out", default=None,
                        help="write the CSV here instead of stdout")
    args = parser.parse_args(argv)
    try:
        rows_text, cols_text = args.base.lower().split("x")
        base_rows, base_cols = int(rows_text), int(cols_text)
        if base_rows <= 0 or base_cols <= 0:
            raise ValueError
    except ValueError:
        parser.error(f"--base must look like 8x4, got {args.base!r}")
    if args.rungs <= 0:
        parser.error("--rungs must be positive")
    return ExperimentConfig(base_rows=base_rows, base_cols=base_cols,
                            rungs=args.rungs, domain=args.domain,
                            seed=args.seed, repeats=args.repeat, out=args.out)


def main(argv: list[str] | None = None) -> int:
    config = parse_args(argv)
    domain = DOMAINS[config.domain]
    rng = Random(config.seed)

    print(f"# domain={config.domain} seed={config.seed} "
          f"repeats={config.repeats}", file=sys.stderr)
    for n, k in config.sizes:
        oracle = method_cost("minors", n, k)
        note = "" if oracle <= BENCH_CAP else "  (oracle skipped: too costly)"
        print(f"#   rung {n}x{k}: predicted oracle cost {oracle:.3g}{note}",
              file=sys.stderr)

    def progress(row: MethodReport) -> None:
        print(f"#   done {row.n}x{row.k} {row.method}: "
              f"{row.mults} mults, {row.median_seconds:.4f}s", file=sys.stderr)

    reports = run_sizes(config.sizes, domain, rng,
                        repeats=config.repeats, report=progress)

    csv_text = to_csv(reports)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(csv_text)
        print(f"# wrote {config.out}", file=sys.stderr)
    else:
        sys.stdout.write(csv_text)

    ladders: dict[str, Ladder] = {}
    for row in reports:
        ladders.setdefault(row.method, Ladder(row.method)).rows.append(row)
    print("# growth ratios per doubling (cubic cost predicts ~8x):",
          file=sys.stderr)
    for ladder in ladders.values():
        print(f"# {ladder.method}:", file=sys.stderr)
        for line in ladder.ratio_lines():
            print(f"#{line}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
