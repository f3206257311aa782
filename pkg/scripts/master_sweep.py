"""Sweep the master character identity over a grid of (n, i).

    python3 scripts/master_sweep.py --max-n 7 --order-per-n 5
"""
import argparse
import time
from dataclasses import dataclass

from sldecomp.identities import propmod_classify, verify_master


@dataclass
class SweepConfig:
    min_n: int = 2
    max_n: int = 6
    order_per_n: int = 4


def sweep(cfg: SweepConfig) -> int:
    failures = 0
    for n in range(cfg.min_n, cfg.max_n + 1):
        for i in range(n):
            start = time.perf_counter()
            rep = verify_master(n, i, cfg.order_per_n * n)
            dt = time.perf_counter() - start
            tag = "cramer" if propmod_classify(n, i) else "enum-only"
            print(f"{'ok  ' if rep.ok else 'FAIL'} n={n} i={i} order={rep.order:<3d} {tag:<9s} {dt:6.2f}s")
            failures += not rep.ok
    return failures


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--order-per-n", type=int, default=4)
    args = p.parse_args()
    bad = sweep(SweepConfig(args.min_n, args.max_n, args.order_per_n))
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
