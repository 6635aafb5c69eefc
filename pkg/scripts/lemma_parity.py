#!/usr/bin/env python3
"""Show which n make the double-sum cancellation (lemma21) vanish.

For each n the script prints the number of surviving monomials and, for
small n, the surviving Laurent polynomial itself.  Odd n always cancel;
even n leave terms behind because the pairing k <-> n-2j-k then matches
terms of equal sign.
"""
import argparse
from dataclasses import dataclass

from cyclident.identities import lemma21_polynomial


@dataclass
class Config:
    n_max: int = 20
    show_up_to: int = 8


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--show-up-to", type=int, default=Config.show_up_to)
    args = p.parse_args(argv)
    cfg = Config(args.n_max, args.show_up_to)
    print(f"{'n':>4} {'terms':>6}  residue")
    for n in range(1, cfg.n_max + 1):
        poly = lemma21_polynomial(n)
        terms = list(poly.terms())
        shown = poly if n <= cfg.show_up_to and terms else ""
        print(f"{n:>4} {len(terms):>6}  {shown}")


if __name__ == "__main__":
    main()
