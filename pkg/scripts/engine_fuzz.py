#!/usr/bin/env python3
"""Differential fuzzing of the determinant and pfaffian engines.

Throws seeded random matrices at every engine and demands agreement: the
four determinant routes must coincide on each instance (exactly over the
integer and rational domains, within float tolerance otherwise), and the
pfaffian engines must coincide on random skew-symmetric matrices. Any
disagreement prints the offending instance and flips the exit code to 1,
so the script doubles as a quick regression gate after engine changes.

Usage:
    python3 scripts/engine_fuzz.py
    python3 scripts/engine_fuzz.py --trials 500 --max-rows 8 --seed 7
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from cullis.bench import random_matrix
from cullis.determinant import (
    det_by_column_laplace,
    det_by_injections,
    det_by_minors,
    det_by_pfaffian,
)
from cullis.matrix import Matrix, transpose
from cullis.pfaffian import SkewMatrix, pfaffian
from cullis.scalars import DOMAINS

DET_ROUTES = {
    "minors": det_by_minors,
    "injections": det_by_injections,
    "laplace": det_by_column_laplace,
    "fast": det_by_pfaffian,
}

PF_ENGINES = ("definition", "laplace", "fraction-free")


@dataclass(frozen=True)
class FuzzConfig:
    trials: int = 200
    max_rows: int = 7
    seed: int = 2024
    domains: tuple[str, ...] = ("int", "rational", "float")


def fuzz_determinants(config: FuzzConfig, rng: Random) -> list[str]:
    """Cross-check the four determinant routes; returns mismatch reports."""
    failures = []
    for tag in config.domains:
        domain = DOMAINS[tag]
        for trial in range(config.trials):
            n = rng.randint(1, config.max_rows)
            k = rng.randint(1, n)
            x = random_matrix(rng, n, k, domain)
            if rng.random() < 0.5:
                x = transpose(x)  # exercise the wide orientation too
            tall = x if x.rows >= x.cols else transpose(x)
            values = {
                "minors": det_by_minors(x),
                "injections": det_by_injections(tall),
                "laplace": det_by_column_laplace(tall),
                "fast": det_by_pfaffian(x),
            }
            baseline = values["minors"]
            for name, value in values.items():
                if not domain.eq(value, baseline):
                    failures.append(
                        f"det mismatch [{tag} {x.rows}x{x.cols} trial {trial}]: "
                        f"{name}={domain.format(value)} "
                        f"minors={domain.format(baseline)}")
    return failures


def _random_skew(rng: Random, size: int, domain) -> SkewMatrix:
    if domain.tag == "int":
        draw = lambda: rng.randint(-9, 9)
    elif domain.tag == "rational":
        draw = lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    else:
        draw = lambda: rng.uniform(-1.0, 1.0)
    data = [[domain.zero for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = draw()
            data[i][j] = v
            data[j][i] = domain.neg(v)
    return SkewMatrix(Matrix(domain, data))


def fuzz_pfaffians(config: FuzzConfig, rng: Random) -> list[str]:
    """Cross-check the pfaffian engines on random skew matrices."""
    failures = []
    for tag in config.domains:
        domain = DOMAINS[tag]
        engines = PF_ENGINES + (("eliminate",) if domain.tag != "int" else ())
        for trial in range(config.trials):
            size = 2 * rng.randint(1, max(1, config.max_rows // 2))
            a = _random_skew(rng, size, domain)
            values = {engine: pfaffian(a, engine) for engine in engines}
            baseline = values["definition"]
            for name, value in values.items():
                if not domain.eq(value, baseline):
                    failures.append(
                        f"pfaffian mismatch [{tag} {size}x{size} trial {trial}]: "
                        f"{name}={domain.format(value)} "
                        f"definition={domain.format(baseline)}")
    return failures


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=200,
                        help="instances per domain per family (default 200)")
    parser.add_argument("--max-rows", type=int, default=7,
                        help="largest matrix dimension to draw (default 7)")
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args(argv)
    if args.trials <= 0 or args.max_rows <= 0:
        parser.error("--trials and --max-rows must be positive")

    config = FuzzConfig(trials=args.trials, max_rows=args.max_rows,
                        seed=args.seed)
    rng = Random(config.seed)

    failures = fuzz_determinants(config, rng)
    det_count = config.trials * len(config.domains)
    print(f"determinant routes: {det_count} instances, "
          f"{len(failures)} mismatches")

    pf_failures = fuzz_pfaffians(config, rng)
    print(f"pfaffian engines:   {det_count} instances, "
          f"{len(pf_failures)} mismatches")
    failures += pf_failures

    for line in failures:
        print(line, file=sys.stderr)
    print("FAIL" if failures else "OK")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
