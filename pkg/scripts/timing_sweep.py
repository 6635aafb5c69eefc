#!/usr/bin/env python3
"""Time exact q-sum verification (eq14) as the root order grows.

Reports median microseconds per verification for each order, with the
inverse cache cleared first so the numbers include the extended gcd work.
"""
import argparse
import statistics
from dataclasses import dataclass

from cyclident import cyclotomic
from cyclident.identities import verify_theorem1_exact
from cyclident.cyclotomic import multiplicative_order


@dataclass
class Config:
    n: int = 7
    orders: tuple = (8, 16, 24, 32, 48, 64, 96)
    roots: int = 5


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--orders", type=lambda s: tuple(int(x) for x in s.split(",")), default=Config.orders)
    p.add_argument("--roots", type=int, default=Config.roots)
    args = p.parse_args(argv)
    cfg = Config(args.n, args.orders, args.roots)
    print(f"{'order':>6} {'roots':>6} {'median_us':>10} status")
    for order in cfg.orders:
        exps = [a for a in range(1, order) if multiplicative_order(order, a) > cfg.n][: cfg.roots]
        if not exps:
            continue
        cyclotomic._INVERSES.clear()
        reports = [verify_theorem1_exact(cfg.n, order, a) for a in exps]
        statuses = sorted({r.status for r in reports})
        median = statistics.median(r.micros for r in reports)
        print(f"{order:>6} {len(exps):>6} {median:>10.0f} {','.join(statuses)}")


if __name__ == "__main__":
    main()
