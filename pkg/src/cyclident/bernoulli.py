"""Bernoulli numbers (B_1 = -1/2) and Bernoulli polynomials over Q."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

_TABLE: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_TABLE_LOCK = threading.Lock()


@dataclass(frozen=True)
class BernoulliTable:
    values: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class BernoulliPolynomial:
    degree: int
    coeffs: tuple[Fraction, ...]  # ascending powers of x

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _extend(max_index: int) -> None:
    # Recurrence: sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
    with _TABLE_LOCK:
        while len(_TABLE) <= max_index:
            n = len(_TABLE)
            if n % 2 == 1:
                _TABLE.append(Fraction(0))
                continue
            s = sum(comb(n + 1, k) * _TABLE[k] for k in range(n))
            _TABLE.append(-s / (n + 1))


def bernoulli_numbers(max_index: int) -> BernoulliTable:
    if max_index < 0:
        raise ValueError(f"max_index must be nonnegative, got {max_index}")
    if len(_TABLE) <= max_index:
        _extend(max_index)
    return BernoulliTable(tuple(_TABLE[: max_index + 1]))


def bernoulli_number(j: int) -> Fraction:
    if len(_TABLE) <= j:
        _extend(j)
    return _TABLE[j]


@lru_cache(maxsize=None)
def bernoulli_polynomial(j: int) -> BernoulliPolynomial:
    """B_j(x) = sum_i C(j, i) B_i x^(j-i), as ascending coefficients."""
    if j < 0:
        raise ValueError(f"degree must be nonnegative, got {j}")
    table = bernoulli_numbers(j)
    coeffs = [comb(j, j - p) * table[j - p] for p in range(j + 1)]
    return BernoulliPolynomial(j, tuple(coeffs))


def eval_bernoulli(j: int, x) -> Fraction:
    return bernoulli_polynomial(j)(x)
