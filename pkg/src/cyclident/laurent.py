"""Integer Laurent polynomials in one formal variable z."""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping


class LaurentPolynomial:
    """sum_i coeffs[i] * z^(offset + i), trimmed at both ends."""

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int = 0, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        self.coeffs = tuple(cs[lo:hi])
        self.offset = offset + lo if self.coeffs else 0

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "LaurentPolynomial":
        """Build from exponent -> coefficient pairs; repeated exponents add up."""
        acc: dict[int, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[e] += c
        acc = {e: c for e, c in acc.items() if c}
        if not acc:
            return cls()
        lo, hi = min(acc), max(acc)
        return cls(lo, [acc.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls(exponent, [coeff])

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def valuation(self) -> int | None:
        return self.offset if self.coeffs else None

    @property
    def degree(self) -> int | None:
        return self.offset + len(self.coeffs) - 1 if self.coeffs else None

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial(0, [other])
        merged = self.terms()
        for e, c in other.terms().items():
            merged[e] = merged.get(e, 0) + c
        return LaurentPolynomial.from_terms(merged)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.offset, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(self.offset, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return LaurentPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return LaurentPolynomial(self.offset + other.offset, out)

    __rmul__ = __mul__

    def substitute_inverse(self) -> "LaurentPolynomial":
        """z -> 1/z."""
        return LaurentPolynomial.from_terms({-e: c for e, c in self.terms().items()})

    def __call__(self, z):
        """Evaluate at a nonzero number (any type supporting ** with ints)."""
        return sum((c * z**e for e, c in self.terms().items()), 0 * z)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(0, [other])
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPolynomial(0)"
        return "LaurentPolynomial(" + " + ".join(f"{c}*z^{e}" for e, c in self.terms().items()) + ")"
