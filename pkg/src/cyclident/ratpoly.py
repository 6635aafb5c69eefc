"""Exact rational scalars and dense univariate polynomials over Q.

Scalars are :class:`fractions.Fraction`, which already keeps values reduced
with a positive denominator, so equality is plain field comparison.
"""
from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` in {add, sub, mul, div} to two rationals.

    Raises ZeroDivisionError for a zero divisor and ValueError for an
    unknown operation.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    a, b = Fraction(a), Fraction(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"rational division of {a} by zero")
    return fn(a, b)


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class DensePolynomial:
    """Polynomial with ascending rational coefficients; zero is ``()``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DensePolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "DensePolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "DensePolynomial":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = self.lead
        return DensePolynomial(c / lc for c in self.coeffs)

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "DensePolynomial":
        if isinstance(other, DensePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return DensePolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return DensePolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return DensePolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DensePolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return DensePolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other):
        return poly_divmod(self, self._coerce(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, self._coerce(other))[1]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("DensePolynomial", self.coeffs))

    def __repr__(self):
        return f"DensePolynomial({[str(c) for c in self.coeffs]})"


def poly_divmod(num: DensePolynomial, den: DensePolynomial) -> tuple[DensePolynomial, DensePolynomial]:
    """Euclidean division: ``num = q * den + r`` with ``deg r < deg den``."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(num.coeffs)
    d = den.coeffs
    dd = len(d) - 1
    inv_lead = 1 / d[-1]
    if len(r) - 1 < dd:
        return DensePolynomial(), DensePolynomial(r)
    q = [Fraction(0)] * (len(r) - dd)
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] * inv_lead
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                r[i - dd + j] -= c * d[j]
    return DensePolynomial(q), DensePolynomial(r[:dd])


def poly_ext_gcd(a: DensePolynomial, b: DensePolynomial):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` the monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    s0, s1 = DensePolynomial([1]), DensePolynomial()
    t0, t1 = DensePolynomial(), DensePolynomial([1])
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lead
    return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)

