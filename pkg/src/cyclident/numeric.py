"""Multiprecision evaluation helpers for the numeric verification mode.

Every :class:`PrecisionContext` owns a private mpmath context, so two
contexts at different precisions never disturb each other (or the global
``mpmath.mp``).
"""
from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from mpmath.ctx_mp import MPContext

from .report import Inapplicable

DEFAULT_PRECISION_BITS = 192
DEFAULT_POLE_MARGIN = Fraction(1, 2**16)  # in units of pi
_SAMPLE_BITS = 64


class PoleProximityError(Inapplicable):
    """A numeric sample lies inside the pole margin of a singular term."""


@dataclass(frozen=True)
class PrecisionContext:
    precision_bits: int = DEFAULT_PRECISION_BITS
    pole_margin_pi: Fraction = DEFAULT_POLE_MARGIN

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError(f"precision_bits must be >= 64, got {self.precision_bits}")
        if self.pole_margin_pi <= 0:
            raise ValueError("pole margin must be positive")

    @cached_property
    def mp(self) -> MPContext:
        ctx = MPContext()
        ctx.prec = self.precision_bits
        return ctx

    @property
    def pole_margin(self):
        return self.mp.pi * self.to_mpf(self.pole_margin_pi)

    def tolerance(self, n: int) -> Fraction:
        """Residual bound n^2 * 2^-(P-16)."""
        return Fraction(n * n, 2 ** (self.precision_bits - 16))

    def to_mpf(self, value):
        """Convert str/int/Fraction/float/mpf to this context's real type.

        Strings may carry a trailing ``pi`` factor: ``"2/7pi"``, ``"0.5*pi"``.
        """
        mp = self.mp
        if isinstance(value, Fraction):
            return mp.mpf(value.numerator) / value.denominator
        if isinstance(value, str):
            value = value.strip()
            if value.endswith("pi"):
                coef = value[:-2].strip().rstrip("*").strip()
                return mp.pi * (self.to_mpf(coef) if coef else 1)
            if "/" in value:
                return self.to_mpf(Fraction(value))
            return mp.mpf(value)
        return mp.mpf(value)

    def decimal(self, value, digits: int | None = None) -> str:
        """Decimal string at (roughly) full working precision."""
        if digits is None:
            digits = max(15, int(self.precision_bits * math.log10(2)))
        return self.mp.nstr(value, digits)


@lru_cache(maxsize=32)
def context(precision_bits: int = DEFAULT_PRECISION_BITS) -> PrecisionContext:
    return PrecisionContext(precision_bits)


def distance_to_multiple(t, period, ctx: PrecisionContext):
    """|t - period*round(t/period)| at working precision."""
    mp = ctx.mp
    return abs(t - period * mp.nint(t / period))


def unit_exp(theta, ctx: PrecisionContext):
    """cos(theta) + i sin(theta)."""
    mp = ctx.mp
    theta = ctx.to_mpf(theta)
    return mp.mpc(mp.cos(theta), mp.sin(theta))


def cot_mp(t, ctx: PrecisionContext):
    mp = ctx.mp
    t = ctx.to_mpf(t)
    if distance_to_multiple(t, mp.pi, ctx) < ctx.pole_margin:
        raise PoleProximityError(f"cot argument {mp.nstr(t, 20)} is within the pole margin of a multiple of pi")
    return mp.cos(t) / mp.sin(t)


@dataclass(frozen=True)
class SamplePlan:
    """Seeded draws from ``domain`` (endpoints in units of pi).

    ``exclusions`` are the singular angles, also as rational multiples of pi.
    """

    seed: int
    count: int
    domain: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1))
    exclusions: tuple[Fraction, ...] = field(default=())

    @classmethod
    def for_cot_argument(cls, n: int, seed: int, count: int) -> "SamplePlan":
        """Points x in (0, pi) away from every m*pi/k, k <= n."""
        excl = sorted({Fraction(m, k) for k in range(1, n + 1) for m in range(0, k + 1)})
        return cls(seed, count, (Fraction(0), Fraction(1)), tuple(excl))

    @classmethod
    def for_unit_circle(cls, n: int, seed: int, count: int) -> "SamplePlan":
        """Angles theta in (0, 2pi) with k*theta away from 2*pi*Z for k <= n."""
        excl = sorted({Fraction(2 * m, k) for k in range(1, n + 1) for m in range(0, k + 1)})
        return cls(seed, count, (Fraction(0), Fraction(2)), tuple(excl))


def _admissible(t: Fraction, exclusions: Sequence[Fraction], margin: Fraction) -> bool:
    return all(abs(t - r) >= margin for r in exclusions)


def draw_sample_points(plan: SamplePlan, margin: Fraction = DEFAULT_POLE_MARGIN) -> list[Fraction]:
    """Admissible points as exact rational multiples of pi.

    Uses Python's Mersenne Twister seeded with ``plan.seed``; only
    ``getrandbits`` is used, whose output is fixed across platforms.
    """
    if plan.count < 1:
        raise ValueError(f"sample count must be >= 1, got {plan.count}")
    lo, hi = plan.domain
    if hi <= lo:
        raise ValueError(f"empty sampling domain {plan.domain}")
    inside = [r for r in plan.exclusions if lo - margin < r < hi + margin]
    if 2 * margin * len(inside) >= hi - lo:
        raise ValueError(
            f"{len(inside)} exclusions with margin {margin}*pi cover the whole domain {lo}*pi..{hi}*pi"
        )
    rng = random.Random(plan.seed)
    width = hi - lo
    out: list[Fraction] = []
    attempts = 0
    while len(out) < plan.count:
        attempts += 1
        if attempts > 1000 * plan.count:
            raise ValueError(f"no admissible sample after {attempts - 1} draws; exclusions too dense")
        t = lo + width * Fraction(rng.getrandbits(_SAMPLE_BITS), 2**_SAMPLE_BITS)
        if t != lo and _admissible(t, inside, margin):
            out.append(t)
    return out


def draw_samples(plan: SamplePlan, ctx: PrecisionContext) -> list:
    mp = ctx.mp
    return [mp.pi * ctx.to_mpf(t) for t in draw_sample_points(plan, ctx.pole_margin_pi)]


def derive_seed(base: int, *labels) -> int:
    """64-bit seed for one sub-stream, stable across runs and platforms."""
    text = ":".join(str(x) for x in (base, *labels)).encode()
    return int.from_bytes(hashlib.sha256(text).digest()[:8], "big")
