#!/usr/bin/env python3
"""Tabulate the imaginary part of the eq18 sum over n and primitive roots.

The real part is pinned to -(n+1)/2; this script looks at what the
imaginary part does.  Rational values are printed exactly, everything else
as a decimal.  Output is CSV on stdout.
"""
import argparse
import csv
import math
import sys
from dataclasses import dataclass

from cyclident.identities import corollary12_sum_exact, imag_part, real_part


@dataclass
class Config:
    n_max: int = 6
    roots_per_n: int = 4


def rows(cfg: Config):
    for n in range(cfg.n_max + 1):
        order = 6 * n + 4
        exps = [a for a in range(1, order) if math.gcd(a, order) == 1][: cfg.roots_per_n]
        for a in exps:
            s = corollary12_sum_exact(n, a)
            yield n, order, a, real_part(s), imag_part(s)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--roots-per-n", type=int, default=Config.roots_per_n)
    args = p.parse_args(argv)
    cfg = Config(args.n_max, args.roots_per_n)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "order", "a", "real", "imag"])
    for n, order, a, re, im in rows(cfg):
        w.writerow([n, order, a, re, im])


if __name__ == "__main__":
    main()
