"""Exact arithmetic in the cyclotomic field Q(zeta_N).

An element is stored on the power basis 1, zeta, ..., zeta^(N-1) and is
always kept reduced modulo the N-th cyclotomic polynomial, so only the first
phi(N) coordinates can be nonzero and equal elements have equal storage.
Internally the coordinates are integers over one positive common
denominator; :attr:`CyclotomicElement.coeffs` exposes them as fractions.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .ratpoly import DensePolynomial, poly_divmod, poly_ext_gcd

# Insert-only memo tables. Entries are built completely before being
# published with setdefault, so a concurrent reader never sees a partial one.
_PHI: dict[int, DensePolynomial] = {}
_PHI_INT: dict[int, tuple[int, ...]] = {}
_INVERSES: dict[tuple, "CyclotomicElement"] = {}
_INVERSE_CACHE_LIMIT = 200_000


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_polynomial(n: int) -> DensePolynomial:
    """Phi_n by exact division of x^n - 1 by Phi_d for the proper divisors d."""
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    cached = _PHI.get(n)
    if cached is not None:
        return cached
    poly = DensePolynomial.monomial(n) - 1
    for d in divisors(n)[:-1]:
        poly, rem = poly_divmod(poly, cyclotomic_polynomial(d))
        assert rem.is_zero(), f"Phi_{d} does not divide x^{n} - 1"
    return _PHI.setdefault(n, poly)


def _phi_ints(n: int) -> tuple[int, ...]:
    cached = _PHI_INT.get(n)
    if cached is None:
        coeffs = cyclotomic_polynomial(n).coeffs
        assert all(c.denominator == 1 for c in coeffs)
        cached = _PHI_INT.setdefault(n, tuple(int(c) for c in coeffs))
    return cached


def multiplicative_order(n: int, a: int) -> int:
    """Order of zeta_n^a as a root of unity."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return n // math.gcd(n, a % n)


def _reduce(n: int, nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if len(nums) > n:
        folded = nums[:n]
        for i in range(n, len(nums)):
            folded[i % n] += nums[i]
        nums = folded
    elif len(nums) < n:
        nums = nums + [0] * (n - len(nums))
    phi = _phi_ints(n)
    deg = len(phi) - 1
    for i in range(n - 1, deg - 1, -1):
        c = nums[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    nums[base + j] -= c * phi[j]
            nums[i] = 0
    if den < 0:
        den = -den
        nums = [-x for x in nums]
    g = den
    for x in nums:
        if g == 1:
            break
        if x:
            g = math.gcd(g, x)
    if g > 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


class CyclotomicElement:
    """Canonical element of Q(zeta_N)."""

    __slots__ = ("order", "_num", "_den")

    canonical = True

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for c in fracs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fracs]
        self.order = order
        self._num, self._den = _reduce(order, nums, den)

    @classmethod
    def _raw(cls, order: int, nums: list[int], den: int = 1) -> "CyclotomicElement":
        obj = cls.__new__(cls)
        obj.order = order
        obj._num, obj._den = _reduce(order, nums, den)
        return obj

    @classmethod
    def from_exponents(cls, order: int, terms: Iterable[tuple[int, int]]) -> "CyclotomicElement":
        """sum of coeff * zeta^exp over integer (exp, coeff) pairs."""
        nums = [0] * order
        for e, c in terms:
            nums[e % order] += c
        return cls._raw(order, nums)

    @classmethod
    def scalar(cls, order: int, value) -> "CyclotomicElement":
        return cls(order, [value])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def degree_bound(self) -> int:
        return len(_phi_ints(self.order)) - 1

    def is_zero(self) -> bool:
        return not any(self._num)

    def as_rational(self) -> Fraction | None:
        """The rational value, or None when the element is irrational."""
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0], self._den)

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.order == self.order:
                return other
            raise ValueError(
                f"orders {self.order} and {other.order} differ; embed() one of them first"
            )
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.scalar(self.order, other)
        return NotImplemented

    def embed(self, order: int) -> "CyclotomicElement":
        """Same number viewed in Q(zeta_order); needs self.order | order."""
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        step = order // self.order
        nums = [0] * order
        for j, x in enumerate(self._num):
            nums[j * step] = x
        return CyclotomicElement._raw(order, nums, self._den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self._den, other._den
        nums = [x * db + y * da for x, y in zip(self._num, other._num)]
        return CyclotomicElement._raw(self.order, nums, da * db)

    __radd__ = __add__

    def __neg__(self):
        obj = CyclotomicElement.__new__(CyclotomicElement)
        obj.order, obj._num, obj._den = self.order, tuple(-x for x in self._num), self._den
        return obj

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
        n = self.order
        a = [(i, x) for i, x in enumerate(self._num) if x]
        b = [(j, y) for j, y in enumerate(other._num) if y]
        out = [0] * n
        for i, x in a:
            for j, y in b:
                k = i + j
                if k >= n:
                    k -= n
                out[k] += x * y
        return CyclotomicElement._raw(n, out, self._den * other._den)

    __rmul__ = __mul__

    def shift(self, e: int) -> "CyclotomicElement":
        """Multiply by zeta_N^e."""
        n = self.order
        out = [0] * n
        for j, x in enumerate(self._num):
            if x:
                out[(j + e) % n] = x
        return CyclotomicElement._raw(n, out, self._den)

    def galois(self, a: int) -> "CyclotomicElement":
        """Image under zeta -> zeta^a, an automorphism when gcd(a, N) = 1."""
        n = self.order
        out = [0] * n
        for j, x in enumerate(self._num):
            if x:
                out[(j * a) % n] += x
        return CyclotomicElement._raw(n, out, self._den)

    def conjugate(self) -> "CyclotomicElement":
        return self.galois(-1)

    def doubled_real_part(self) -> "CyclotomicElement":
        return self + self.conjugate()

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        key = (self.order, self._num, self._den)
        cached = _INVERSES.get(key)
        if cached is not None:
            return cached
        phi = cyclotomic_polynomial(self.order)
        rep = DensePolynomial(Fraction(x, self._den) for x in self._num)
        g, s, _ = poly_ext_gcd(rep, phi)
        if g.degree != 0:
            raise ArithmeticError(
                f"representative shares factor {g} with Phi_{self.order}; element is not canonical"
            )
        inv = CyclotomicElement(self.order, s.coeffs)
        if len(_INVERSES) < _INVERSE_CACHE_LIMIT:
            _INVERSES.setdefault(key, inv)
        return inv

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = CyclotomicElement.scalar(self.order, 1)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return self.order == other.order and self._den == other._den and self._num == other._num
        if isinstance(other, (int, Fraction)):
            return self.as_rational() == other
        return NotImplemented

    def __hash__(self):
        q = self.as_rational()
        if q is not None:
            return hash(q)
        return hash((self.order, self._num, self._den))

    def evaluate(self, root):
        """Substitute a numeric value (e.g. an mpmath complex) for zeta."""
        acc = 0 * root
        for x in reversed(self._num):
            acc = acc * root + x
        return acc / self._den

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if j == 0 else f"({c})*z{self.order}^{j}")
        return "CyclotomicElement(" + (" + ".join(terms) or "0") + ")"


def root_power(order: int, e: int) -> CyclotomicElement:
    """zeta_order^e in canonical form; any integer exponent is accepted."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    nums = [0] * order
    nums[e % order] = 1
    return CyclotomicElement._raw(order, nums)


def cyc_arith(a, b, op: str) -> CyclotomicElement:
    if op == "add":
        return _lift(a, b) + b
    if op == "sub":
        return _lift(a, b) - b
    if op == "mul":
        return _lift(a, b) * b
    raise ValueError(f"unknown cyclotomic operation {op!r}")


def _lift(a, b) -> CyclotomicElement:
    if isinstance(a, CyclotomicElement):
        return a
    if isinstance(b, CyclotomicElement):
        return CyclotomicElement.scalar(b.order, a)
    raise TypeError("at least one operand must be a CyclotomicElement")


def cyc_inverse(a: CyclotomicElement) -> CyclotomicElement:
    return a.inverse()


def conjugate(a):
    return a.conjugate() if isinstance(a, CyclotomicElement) else Fraction(a)


def doubled_real_part(a):
    return a.doubled_real_part() if isinstance(a, CyclotomicElement) else 2 * Fraction(a)


def as_rational(a) -> Fraction | None:
    return a.as_rational() if isinstance(a, CyclotomicElement) else Fraction(a)
