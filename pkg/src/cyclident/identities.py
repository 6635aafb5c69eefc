"""Both sides of every identity, computed from scratch and compared.

Exact mode works inside Q(zeta_N). A claim ``Re(S) = c`` is checked as
``S + conj(S) = 2c``, which is independent of the complex embedding, so a
root zeta_N^a with gcd(a, N) = 1 is as good as e^(2 pi i / N). Numeric mode
evaluates the same sums with mpmath at a chosen precision.

Every ``verify_*`` function returns an :class:`IdentityReport`; a false
identity is a ``fail`` report, never an exception.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from .bernoulli import bernoulli_number, eval_bernoulli
from .cyclotomic import CyclotomicElement, multiplicative_order, root_power
from .laurent import LaurentPolynomial
from .numeric import (
    DEFAULT_PRECISION_BITS,
    PoleProximityError,
    PrecisionContext,
    context,
    cot_mp,
    distance_to_multiple,
    unit_exp,
)
from .report import IdentityReport, Inapplicable, timed

_EMBED_BITS = 256


# -- hypothesis checks -------------------------------------------------------

def _require_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise Inapplicable(f"n must be a positive odd integer, got {n}")


def _require_primitive(order: int, a: int) -> None:
    if math.gcd(a, order) != 1:
        raise Inapplicable(f"root exponent {a} is not coprime to order {order}")


def _half(e: int, what: str) -> int:
    if e % 2:
        raise Inapplicable(f"exponent {what} = {e} is odd, so its half is not an integer")
    return e // 2


def _reciprocal(order: int, e: int, sign: int, k: int) -> CyclotomicElement:
    """1 / (1 + sign * zeta^e), rejecting a vanishing denominator."""
    den = 1 + sign * root_power(order, e)
    if den.is_zero():
        op = "+" if sign > 0 else "-"
        raise Inapplicable(f"denominator 1 {op} zeta^{e} vanishes at k={k}")
    return den.inverse()


def _ctx(precision_bits) -> PrecisionContext:
    if isinstance(precision_bits, PrecisionContext):
        return precision_bits
    return context(int(precision_bits))


# -- turning exact / numeric values into report fields -----------------------

def _embedded(x: CyclotomicElement):
    ctx = context(_EMBED_BITS)
    return x.evaluate(unit_exp(2 * ctx.mp.pi / x.order, ctx)), ctx


def real_part(x: CyclotomicElement) -> Fraction | str:
    """Exact Re(x) when rational, else a decimal string of the embedding."""
    q = x.doubled_real_part().as_rational()
    if q is not None:
        return q / 2
    value, ctx = _embedded(x)
    return ctx.decimal(value.real, 40)


def imag_part(x: CyclotomicElement) -> Fraction | str:
    """Exact Im(x) when rational, else a decimal string of the embedding.

    Im(x) = -i (x - conj x) / 2, computed after embedding into an order
    divisible by 4 so that i is available.
    """
    diff = x - x.conjugate()
    if diff.is_zero():
        return Fraction(0)
    order = math.lcm(x.order, 4)
    minus_i = root_power(order, 3 * order // 4)
    q = (diff.embed(order) * minus_i * Fraction(1, 2)).as_rational()
    if q is not None:
        return q
    value, ctx = _embedded(x)
    return ctx.decimal(value.imag, 40)


def _settle_real_part(report: IdentityReport, total: CyclotomicElement) -> None:
    doubled = total.doubled_real_part().as_rational()
    report.computed_real = real_part(total)
    report.computed_imag = imag_part(total)
    ok = doubled is not None and doubled == 2 * report.expected
    report.status = "pass" if ok else "fail"


def _settle_full(report: IdentityReport, total: CyclotomicElement) -> None:
    report.computed_real = real_part(total)
    report.computed_imag = imag_part(total)
    report.status = "pass" if total == report.expected else "fail"


def _settle_numeric(report: IdentityReport, value, ctx: PrecisionContext, n: int) -> None:
    tol = ctx.tolerance(n)
    residual = abs(value - ctx.to_mpf(report.expected))
    report.params["precision_bits"] = ctx.precision_bits
    report.params["tolerance"] = ctx.decimal(ctx.to_mpf(tol), 6)
    report.computed_real = ctx.decimal(value)
    report.residual = ctx.decimal(residual, 10)
    report.status = "pass" if residual <= ctx.to_mpf(tol) else "fail"


def _angle_text(value, ctx: PrecisionContext) -> str:
    if isinstance(value, (str, Fraction, int)):
        return str(value)
    return ctx.decimal(value)


def _unit_circle_poles(n: int, theta, ctx: PrecisionContext) -> None:
    two_pi = 2 * ctx.mp.pi
    for k in range(1, n + 1):
        if distance_to_multiple(k * theta, two_pi, ctx) < ctx.pole_margin:
            raise PoleProximityError(f"k*theta is within the pole margin of 2*pi*Z at k={k}")


def _cot_poles(n: int, x, ctx: PrecisionContext) -> None:
    # x must stay pole_margin away from every m*pi/k, i.e. |k x - m pi| >= k * margin.
    pi = ctx.mp.pi
    for k in range(1, n + 1):
        if distance_to_multiple(k * x, pi, ctx) < k * ctx.pole_margin:
            raise PoleProximityError(f"x is within the pole margin of m*pi/{k}")


# -- the q-sum and its cotangent form ---------------------------------------

def theorem1_sum_exact(n: int, order: int, a: int) -> CyclotomicElement:
    """sum_{k=1}^n (-1)^k q^(-k(n-k)/2) / (1 - q^k) with q = zeta_order^a."""
    _require_odd(n)
    if multiplicative_order(order, a) <= n:
        raise Inapplicable(
            f"root order must exceed n (order of zeta_{order}^{a} is {multiplicative_order(order, a)}, n={n})"
        )
    total = CyclotomicElement.scalar(order, 0)
    for k in range(1, n + 1):
        half = _half(k * (n - k), f"k(n-k) at k={k}")
        term = _reciprocal(order, a * k, -1, k).shift(-a * half)
        total = total + term if k % 2 == 0 else total - term
    return total


def theorem1_sum_numeric(n: int, theta, ctx: PrecisionContext):
    mp = ctx.mp
    theta = ctx.to_mpf(theta)
    _unit_circle_poles(n, theta, ctx)
    total = mp.mpc(0)
    for k in range(1, n + 1):
        term = unit_exp(-theta * (k * (n - k)) / 2, ctx) / (1 - unit_exp(k * theta, ctx))
        total += term if k % 2 == 0 else -term
    return total


def verify_theorem1_exact(n: int, order: int, a: int) -> IdentityReport:
    report = IdentityReport("eq14", {"n": n, "order": order, "a": a}, "exact", Fraction(-(n + 1), 4))
    with timed(report):
        _settle_real_part(report, theorem1_sum_exact(n, order, a))
    return report


def verify_theorem1_numeric(n: int, theta, precision_bits=DEFAULT_PRECISION_BITS) -> IdentityReport:
    ctx = _ctx(precision_bits)
    report = IdentityReport("eq14", {"n": n, "theta": _angle_text(theta, ctx)}, "numeric", Fraction(-(n + 1), 4))
    with timed(report):
        _require_odd(n)
        value = theorem1_sum_numeric(n, theta, ctx)
        _settle_numeric(report, value.real, ctx, n)
        report.computed_imag = ctx.decimal(value.imag)
    return report


def trig_sum_numeric(n: int, x, ctx: PrecisionContext):
    """sum_{k=1}^n (-1)^k cot(kx) sin(k(n-k)x)."""
    mp = ctx.mp
    x = ctx.to_mpf(x)
    _cot_poles(n, x, ctx)
    total = mp.mpf(0)
    for k in range(1, n + 1):
        term = cot_mp(k * x, ctx) * mp.sin(k * (n - k) * x)
        total += term if k % 2 == 0 else -term
    return total


def verify_trig_identity(n: int, x, precision_bits=DEFAULT_PRECISION_BITS) -> IdentityReport:
    ctx = _ctx(precision_bits)
    report = IdentityReport("eq15", {"n": n, "x": _angle_text(x, ctx)}, "numeric", Fraction(1 - n, 2))
    with timed(report):
        _require_odd(n)
        _settle_numeric(report, trig_sum_numeric(n, x, ctx), ctx, n)
    return report


# -- intermediate steps: decomposition, cosine sum, sine ratio --------------

def cos_sum_exact(n: int, order: int, a: int) -> CyclotomicElement:
    """sum_k (-1)^k (z^e + z^-e)/2, e = k(n-k), z = zeta_order^a."""
    terms = []
    for k in range(1, n + 1):
        sign = 1 if k % 2 == 0 else -1
        e = a * k * (n - k)
        terms += [(e, sign), (-e, sign)]
    return CyclotomicElement.from_exponents(order, terms) * Fraction(1, 2)


def cos_sum_numeric(n: int, theta, ctx: PrecisionContext):
    mp = ctx.mp
    theta = ctx.to_mpf(theta)
    total = mp.mpf(0)
    for k in range(1, n + 1):
        term = mp.cos(k * (n - k) * theta / 2)
        total += term if k % 2 == 0 else -term
    return total


def verify_cos_sum(n: int, mode: str = "exact", point=None, precision_bits=DEFAULT_PRECISION_BITS) -> IdentityReport:
    """Alternating cosine sum equals -1 for odd n.

    Exact mode takes ``point=(order, a)`` with z = e^(i theta/2) = zeta_order^a;
    numeric mode takes ``point=theta``.
    """
    if mode == "exact":
        order, a = point
        report = IdentityReport("cos_sum", {"n": n, "order": order, "a": a}, "exact", Fraction(-1))
        with timed(report):
            _require_odd(n)
            _settle_full(report, cos_sum_exact(n, order, a))
        return report
    ctx = _ctx(precision_bits)
    report = IdentityReport("cos_sum", {"n": n, "theta": _angle_text(point, ctx)}, "numeric", Fraction(-1))
    with timed(report):
        _require_odd(n)
        _settle_numeric(report, cos_sum_numeric(n, point, ctx), ctx, n)
    return report


def sine_ratio_geometric(n: int, order: int, a: int) -> CyclotomicElement:
    """sum_k (-1)^k sum_{j=0}^{n-k} z^(k(2j+k-n)), z = zeta_order^a."""
    terms = []
    for k in range(1, n + 1):
        sign = 1 if k % 2 == 0 else -1
        terms += [(a * k * (2 * j + k - n), sign) for j in range(n - k + 1)]
    return CyclotomicElement.from_exponents(order, terms)


def sine_ratio_quotient(n: int, order: int, a: int) -> CyclotomicElement:
    """sum_k (-1)^k (z^e - z^-e) / (z^k - z^-k), e = k(n+1-k)."""
    total = CyclotomicElement.scalar(order, 0)
    for k in range(1, n + 1):
        e = k * (n + 1 - k)
        num = CyclotomicElement.from_exponents(order, [(a * e, 1), (-a * e, -1)])
        den = CyclotomicElement.from_exponents(order, [(a * k, 1), (-a * k, -1)])
        if den.is_zero():
            raise Inapplicable(f"sin(kx) vanishes at k={k}")
        term = num * den.inverse()
        total = total + term if k % 2 == 0 else total - term
    return total


def sine_ratio_numeric(n: int, x, ctx: PrecisionContext):
    mp = ctx.mp
    x = ctx.to_mpf(x)
    _cot_poles(n, x, ctx)
    total = mp.mpf(0)
    for k in range(1, n + 1):
        term = mp.sin(k * (n + 1 - k) * x) / mp.sin(k * x)
        total += term if k % 2 == 0 else -term
    return total


def verify_sine_ratio(n: int, mode: str = "exact", point=None, precision_bits=DEFAULT_PRECISION_BITS) -> IdentityReport:
    """sum_k (-1)^k sin(k(n+1-k)x)/sin(kx) = -(n+1)/2 for odd n.

    Exact mode takes ``point=(order, a)`` with z = e^(ix) = zeta_order^a and
    checks both the geometric expansion and the direct quotient.
    """
    expected = Fraction(-(n + 1), 2)
    if mode == "exact":
        order, a = point
        report = IdentityReport("sine_ratio", {"n": n, "order": order, "a": a}, "exact", expected)
        with timed(report):
            _require_odd(n)
            if multiplicative_order(order, 2 * a) <= n:
                raise Inapplicable(f"sin(kx) vanishes for some k <= n at z = zeta_{order}^{a}")
            geometric = sine_ratio_geometric(n, order, a)
            quotient = sine_ratio_quotient(n, order, a)
            _settle_full(report, geometric)
            if quotient != geometric:
                report.status = "fail"
                report.detail = "geometric expansion and direct quotient disagree"
        return report
    ctx = _ctx(precision_bits)
    report = IdentityReport("sine_ratio", {"n": n, "x": _angle_text(point, ctx)}, "numeric", expected)
    with timed(report):
        _require_odd(n)
        _settle_numeric(report, sine_ratio_numeric(n, point, ctx), ctx, n)
    return report


def decomposition_numeric(n: int, theta, ctx: PrecisionContext):
    """(1/2) sum (-1)^k cos(k(n-k)theta/2) + (1/2) sum (-1)^k cot(k theta/2) sin(k(n-k)theta/2)."""
    mp = ctx.mp
    theta = ctx.to_mpf(theta)
    total = mp.mpf(0)
    for k in range(1, n + 1):
        angle = k * (n - k) * theta / 2
        term = mp.cos(angle) + cot_mp(k * theta / 2, ctx) * mp.sin(angle)
        total += term if k % 2 == 0 else -term
    return total / 2


def verify_eq22_decomposition(n: int, theta, precision_bits=DEFAULT_PRECISION_BITS) -> IdentityReport:
    """Re(L) computed directly and through the cos/cot split must agree."""
    ctx = _ctx(precision_bits)
    report = IdentityReport("eq22", {"n": n, "theta": _angle_text(theta, ctx)}, "numeric", Fraction(-(n + 1), 4))
    with timed(report):
        _require_odd(n)
        direct = theorem1_sum_numeric(n, theta, ctx).real
        split = decomposition_numeric(n, theta, ctx)
        tol = ctx.tolerance(n)
        residual = abs(direct - split)
        report.params["precision_bits"] = ctx.precision_bits
        report.params["tolerance"] = ctx.decimal(ctx.to_mpf(tol), 6)
        report.computed_real = ctx.decimal(direct)
        report.residual = ctx.decimal(residual, 10)
        report.detail = f"decomposition {ctx.decimal(split, 30)}"
        report.status = "pass" if residual <= ctx.to_mpf(tol) else "fail"
    return report


def lemma21_polynomial(n: int) -> LaurentPolynomial:
    """sum over 1<=k<=n, 0<=j<(n-k)/2 of (-1)^k z^(k(2j+k-n))."""
    terms = []
    for k in range(1, n + 1):
        sign = 1 if k % 2 == 0 else -1
        terms += [(k * (2 * j + k - n), sign) for j in range(n) if 2 * j < n - k]
    return LaurentPolynomial.from_terms(terms)


def verify_lemma21(n: int) -> IdentityReport:
    report = IdentityReport("lemma21", {"n": n}, "exact", Fraction(0))
    with timed(report):
        if n < 1:
            raise Inapplicable(f"n must be positive, got {n}")
        poly = lemma21_polynomial(n)
        if poly.is_zero():
            report.computed_real = Fraction(0)
            report.status = "pass"
        else:
            report.computed_real = f"nonzero Laurent polynomial with {len(poly.terms())} terms"
            report.status = "fail"
    return report


# -- Bernoulli polynomial sums ---------------------------------------------

def bernoulli_sum(n: int, m: int) -> Fraction:
    """sum_{k=1}^n (-1)^k k^(2m) B_(2m+1)((n-k)/2)."""
    return sum(
        ((-1) ** k * k ** (2 * m) * eval_bernoulli(2 * m + 1, Fraction(n - k, 2)) for k in range(1, n + 1)),
        Fraction(0),
    )


def expanded_inner(n: int, m: int, k: int) -> Fraction:
    """sum_{j=0}^m 2^(2j) B_(2j)/(2j)! * (n-k)^(2m-2j+1)/(2m-2j+1)!."""
    return sum(
        (
            Fraction(2 ** (2 * j) * (n - k) ** (2 * m - 2 * j + 1), math.factorial(2 * j) * math.factorial(2 * m - 2 * j + 1))
            * bernoulli_number(2 * j)
            for j in range(m + 1)
        ),
        Fraction(0),
    )


def verify_bernoulli_identity(n: int, m: int) -> IdentityReport:
    report = IdentityReport("eq16", {"n": n, "m": m}, "exact", Fraction(0))
    with timed(report):
        _require_odd(n)
        if m < 1:
            raise Inapplicable(f"m must be positive, got {m}")
        total = bernoulli_sum(n, m)
        report.computed_real = total
        report.status = "pass" if total == 0 else "fail"
    return report


def verify_bernoulli_expanded(n: int, m: int) -> IdentityReport:
    """The coefficient form, plus a per-k link to B_(2m+1)((n-k)/2).

    With c = (2m+1)!/2^(2m+1) and x = (n-k)/2 the inner j-sum satisfies
    c * inner = B_(2m+1)(x) + (2m+1)/2 * x^(2m); the extra term is odd under
    k -> n-k and cancels in the alternating sum.
    """
    norm = Fraction(math.factorial(2 * m + 1), 2 ** (2 * m + 1))
    report = IdentityReport("cor11_expanded", {"n": n, "m": m, "normalization": norm}, "exact", Fraction(0))
    with timed(report):
        _require_odd(n)
        if m < 1:
            raise Inapplicable(f"m must be positive, got {m}")
        total = Fraction(0)
        mismatched = []
        for k in range(1, n + 1):
            inner = expanded_inner(n, m, k)
            total += (-1) ** k * k ** (2 * m) * inner
            x = Fraction(n - k, 2)
            if norm * inner - eval_bernoulli(2 * m + 1, x) != Fraction(2 * m + 1, 2) * x ** (2 * m):
                mismatched.append(k)
        report.computed_real = total
        report.status = "pass" if total == 0 and not mismatched else "fail"
        if mismatched:
            report.detail = f"term link broken at k={mismatched}"
    return report


# -- the generalized q-sum and its eq18 specialization ---------------------

def theorem2_sum_exact(l: int, m: int, n: int, a: int) -> CyclotomicElement:
    order = m * n + l
    total = CyclotomicElement.scalar(order, 0)
    for k in range(1, n + 1):
        half = _half(k * (k * m + l), f"k(km+l) at k={k}")
        total = total + _reciprocal(order, a * k * m, -1, k).shift(a * half)
    return total


def theorem2_sign_reduction(l: int, m: int, n: int, a: int) -> list[int]:
    """k values where zeta^(k(km+l)/2) != (-1)^k zeta^(-mk(n-k)/2)."""
    order = m * n + l
    bad = []
    for k in range(1, n + 1):
        lhs = root_power(order, a * _half(k * (k * m + l), "k(km+l)"))
        rhs = root_power(order, -a * _half(m * k * (n - k), "mk(n-k)"))
        if lhs != (rhs if k % 2 == 0 else -rhs):
            bad.append(k)
    return bad


def verify_theorem2(l: int, m: int, n: int, a: int) -> IdentityReport:
    order = m * n + l
    report = IdentityReport("eq17", {"l": l, "m": m, "n": n, "a": a}, "exact", Fraction(-(n + 1), 4))
    with timed(report):
        if l < 1 or m < 1:
            raise Inapplicable(f"l and m must be positive, got l={l}, m={m}")
        if (l - m) % 2:
            raise Inapplicable(f"l={l} and m={m} have different parity")
        _require_odd(n)
        _require_primitive(order, a)
        if order % 2:
            raise Inapplicable(f"mn+l = {order} is odd")
        _settle_real_part(report, theorem2_sum_exact(l, m, n, a))
        problems = []
        bad = theorem2_sign_reduction(l, m, n, a)
        if bad:
            problems.append(f"sign reduction fails at k={bad}")
        if multiplicative_order(order, m) <= n:
            problems.append(f"order of zeta^m is {multiplicative_order(order, m)} <= n")
        if problems:
            report.status = "fail"
            report.detail = "; ".join(problems)
    return report


def corollary12_sum_exact(n: int, a: int) -> CyclotomicElement:
    order = 6 * n + 4
    total = CyclotomicElement.scalar(order, 0)
    for k in range(1, 2 * n + 2):
        half = _half(k * (3 * k + 1), f"k(3k+1) at k={k}")
        total = total + _reciprocal(order, 3 * a * k, -1, k).shift(a * half)
    return total


def verify_corollary12(n: int, a: int) -> IdentityReport:
    """Real part of the sum is checked; the imaginary part is only recorded."""
    order = 6 * n + 4
    report = IdentityReport("eq18", {"n": n, "a": a}, "exact", Fraction(-(n + 1), 2))
    with timed(report):
        if n < 0:
            raise Inapplicable(f"n must be nonnegative, got {n}")
        _require_primitive(order, a)
        _settle_real_part(report, corollary12_sum_exact(n, a))
        report.detail = "imaginary part zero" if report.computed_imag == 0 else "imaginary part nonzero"
    return report


# -- the motivating identities ----------------------------------------------

def liu_petrov_sum_exact(n: int, a: int) -> CyclotomicElement:
    order = 3 * n + 2
    total = CyclotomicElement.scalar(order, 0)
    for k in range(1, 2 * n + 2):
        half = _half(k * (3 * k + 1), f"k(3k+1) at k={k}")
        term = _reciprocal(order, 3 * a * k, -1, k).shift(a * half)
        total = total + term if k % 2 == 0 else total - term
    return total


def verify_liu_petrov(n: int, a: int) -> IdentityReport:
    report = IdentityReport("eq11", {"n": n, "a": a}, "exact", Fraction(-(n + 1), 2))
    with timed(report):
        if n < 1:
            raise Inapplicable(f"n must be positive, got {n}")
        _require_primitive(3 * n + 2, a)
        _settle_full(report, liu_petrov_sum_exact(n, a))
    return report


def eq12_sum_exact(n: int, a: int) -> CyclotomicElement:
    order = 6 * n + 4
    total = CyclotomicElement.scalar(order, 0)
    for k in range(1, 2 * n + 2):
        yk = root_power(order, a * k)
        plus = _reciprocal(order, 3 * a * k, 1, k) * yk
        minus = _reciprocal(order, 3 * a * k, -1, k) * yk
        total = total + plus + (minus if k % 2 == 0 else -minus)
    return total


def verify_eq12(n: int, a: int) -> IdentityReport:
    report = IdentityReport("eq12", {"n": n, "a": a}, "exact", Fraction(-n - 1))
    with timed(report):
        if n < 1:
            raise Inapplicable(f"n must be positive, got {n}")
        _require_primitive(6 * n + 4, a)
        _settle_full(report, eq12_sum_exact(n, a))
    return report


def sun_order(m: int, n: int, delta: int) -> int:
    return m * (n - delta) - (-1) ** delta


def sun_sum_exact(m: int, n: int, delta: int, a: int) -> CyclotomicElement:
    order = sun_order(m, n, delta)
    outer = -((-1) ** (n + delta))
    total = CyclotomicElement.scalar(order, 0)
    for k in range(1, n):
        zk = root_power(order, a * k)
        first = _reciprocal(order, a * k * m, 1, k) * zk
        second = _reciprocal(order, a * k * m, -1, k) * zk
        total = total + first + second * (outer * (-1) ** k)
    return total


def verify_sun_identity(m: int, n: int, delta: int, a: int) -> IdentityReport:
    expected = Fraction((-1) ** (n - 1) * (n // 2))
    report = IdentityReport("eq13", {"m": m, "n": n, "delta": delta, "a": a}, "exact", expected)
    with timed(report):
        if m < 2 or n < 2:
            raise Inapplicable(f"m and n must be at least 2, got m={m}, n={n}")
        if delta not in (0, 1):
            raise Inapplicable(f"delta must be 0 or 1, got {delta}")
        order = sun_order(m, n, delta)
        _require_primitive(order, a)
        _settle_real_part(report, sun_sum_exact(m, n, delta, a))
    return report


# -- cross-mode checks ------------------------------------------------------

def exact_numeric_gap(n: int, order: int, a: int, precision_bits=DEFAULT_PRECISION_BITS):
    """|Re S_numeric(theta = 2 pi a / order) - Re S_exact| as an mpf."""
    ctx = _ctx(precision_bits)
    exact = real_part(theorem1_sum_exact(n, order, a))
    if not isinstance(exact, Fraction):
        raise ArithmeticError(f"exact real part is irrational for n={n}, order={order}, a={a}")
    theta = 2 * ctx.mp.pi * a / order
    value = theorem1_sum_numeric(n, theta, ctx).real
    return abs(value - ctx.to_mpf(exact))


def equivalence_chain(n: int, order: int, a: int, precision_bits=DEFAULT_PRECISION_BITS) -> list[IdentityReport]:
    """Three views of the q-sum identity at q = zeta_order^a, i.e. x = pi a / order.

    The q-sum, the sine-ratio form at z = e^(ix) = zeta_(2 order)^a, and the
    cotangent form at x. They must agree on pass/fail.
    """
    ctx = _ctx(precision_bits)
    return [
        verify_theorem1_exact(n, order, a),
        verify_sine_ratio(n, "exact", (2 * order, a)),
        verify_trig_identity(n, f"{Fraction(a, order)}pi", ctx),
    ]


# -- dispatch ----------------------------------------------------------------

# identity id -> mode -> (parameter names, runner taking those names as kwargs)
REGISTRY: dict[str, dict[str, tuple[tuple[str, ...], Callable[..., IdentityReport]]]] = {
    "eq11": {"exact": (("n", "a"), verify_liu_petrov)},
    "eq12": {"exact": (("n", "a"), verify_eq12)},
    "eq13": {"exact": (("m", "n", "delta", "a"), verify_sun_identity)},
    "eq14": {
        "exact": (("n", "order", "a"), lambda n, order, a: verify_theorem1_exact(n, order, a)),
        "numeric": (("n", "theta"), verify_theorem1_numeric),
    },
    "eq15": {"numeric": (("n", "x"), verify_trig_identity)},
    "eq16": {"exact": (("n", "m"), verify_bernoulli_identity)},
    "eq17": {"exact": (("l", "m", "n", "a"), verify_theorem2)},
    "eq18": {"exact": (("n", "a"), verify_corollary12)},
    "lemma21": {"exact": (("n",), verify_lemma21)},
    "eq22": {"numeric": (("n", "theta"), verify_eq22_decomposition)},
    "cos_sum": {
        "exact": (("n", "order", "a"), lambda n, order, a: verify_cos_sum(n, "exact", (order, a))),
        "numeric": (("n", "theta"), lambda n, theta, precision_bits=DEFAULT_PRECISION_BITS:
                    verify_cos_sum(n, "numeric", theta, precision_bits)),
    },
    "sine_ratio": {
        "exact": (("n", "order", "a"), lambda n, order, a: verify_sine_ratio(n, "exact", (order, a))),
        "numeric": (("n", "x"), lambda n, x, precision_bits=DEFAULT_PRECISION_BITS:
                    verify_sine_ratio(n, "numeric", x, precision_bits)),
    },
    "cor11_expanded": {"exact": (("n", "m"), verify_bernoulli_expanded)},
}

# the free angle of each numeric identity, and which sampler suits it
ANGLE_PARAM = {"eq14": "theta", "eq15": "x", "eq22": "theta", "cos_sum": "theta", "sine_ratio": "x"}


def default_mode(identity: str) -> str:
    modes = REGISTRY[identity]
    return "exact" if "exact" in modes else "numeric"


def run_identity(identity: str, mode: str | None, params: dict, precision_bits: int = DEFAULT_PRECISION_BITS) -> IdentityReport:
    """Run one verification by id; raises KeyError / TypeError on bad input."""
    if identity not in REGISTRY:
        raise KeyError(f"unknown identity {identity!r}; choose from {', '.join(REGISTRY)}")
    mode = mode or default_mode(identity)
    if mode not in REGISTRY[identity]:
        raise KeyError(f"identity {identity} has no {mode} mode (available: {', '.join(REGISTRY[identity])})")
    names, fn = REGISTRY[identity][mode]
    missing = [p for p in names if p not in params]
    if missing:
        raise TypeError(f"{identity} ({mode}) needs parameter(s): {', '.join(missing)}")
    kwargs = {p: params[p] for p in names}
    if mode == "numeric":
        kwargs["precision_bits"] = precision_bits
    return fn(**kwargs)
