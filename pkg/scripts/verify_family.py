#!/usr/bin/env python3
"""Sweep the axiom verifier across members of the coproduct family.

Checks the fully symbolic member (which subsumes every specialisation)
and a grid of rational parameter points, for both the symmetric algebra
and the ordered variant.

Example:

    python3 scripts/verify_family.py --n 2 --max-degree 3 --grid -1 0 1
"""

import argparse
import itertools
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from treehopf.hopf import HopfContext, verify_bialgebra
from treehopf.planar import verify_planar


@dataclass
class Config:
    n: int = 1
    max_degree: int = 4
    planar_max_degree: int = 3
    grid: list = field(default_factory=lambda: [Fraction(0), Fraction(1)])


def parse_args(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=1, help="number of colours")
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--planar-max-degree", type=int, default=3)
    parser.add_argument(
        "--grid",
        nargs="+",
        default=["0", "1"],
        help="rational values each parameter ranges over, e.g. --grid -1 0 1/2",
    )
    args = parser.parse_args(argv)
    return Config(
        n=args.n,
        max_degree=args.max_degree,
        planar_max_degree=args.planar_max_degree,
        grid=[Fraction(v) for v in args.grid],
    )


def run_member(label, ctx, cfg) -> bool:
    start = time.perf_counter()
    sym = verify_bialgebra(ctx, cfg.max_degree)
    pla = verify_planar(ctx, cfg.planar_max_degree)
    elapsed = time.perf_counter() - start
    ok = sym.passed and pla.passed
    status = "ok" if ok else "FAILED"
    print(f"  {label:<40} {status:>6}  ({elapsed:.1f}s)")
    for report in (sym, pla):
        if not report.passed:
            print(f"    {report.first_failure.name}: {report.first_failure.failure}")
    return ok


def main(argv=None) -> int:
    cfg = parse_args(argv)
    print(
        f"axiom sweep: n={cfg.n}, forests <= {cfg.max_degree} vertices, "
        f"planar words <= {cfg.planar_max_degree}"
    )
    all_ok = run_member("symbolic (generic member)", HopfContext.symbolic(cfg.n), cfg)

    points = list(itertools.product(cfg.grid, repeat=2 * cfg.n))
    print(f"rational grid: {len(points)} parameter points")
    for values in points:
        label = "q = (" + ", ".join(str(v) for v in values) + ")"
        all_ok &= run_member(label, HopfContext.rational(cfg.n, values), cfg)

    print("all members passed" if all_ok else "FAILURES FOUND")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
