import math
import threading
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from cyclident import cyclotomic as cyc
from cyclident.cyclotomic import (
    CyclotomicElement,
    as_rational,
    conjugate,
    cyc_arith,
    cyc_inverse,
    cyclotomic_polynomial,
    doubled_real_part,
    euler_phi,
    multiplicative_order,
    root_power,
)
from cyclident.ratpoly import DensePolynomial


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == DensePolynomial([-1, 1])
    assert cyclotomic_polynomial(4) == DensePolynomial([1, 0, 1])
    assert cyclotomic_polynomial(6) == DensePolynomial([1, -1, 1])
    # first order with a coefficient outside {-1, 0, 1}
    assert -2 in cyclotomic_polynomial(105).coeffs


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_product_identity(n):
    prod = DensePolynomial([1])
    for d in cyc.divisors(n):
        prod = prod * cyclotomic_polynomial(d)
    assert prod == DensePolynomial.monomial(n) - 1
    phi = cyclotomic_polynomial(n)
    assert phi.lead == 1 and phi.degree == euler_phi(n)


def test_root_power_examples():
    i = root_power(4, 1)
    assert root_power(4, 2).coeffs == (-1, 0, 0, 0)
    assert root_power(4, 2) == -1
    assert root_power(9, 0) == 1
    for k in range(1, 12):
        assert root_power(12, -k) == root_power(12, 12 - k)
    assert i * i == -1


@pytest.mark.parametrize("n", range(1, 61))
def test_root_power_to_the_order_is_one(n):
    for e in range(-n, n + 1):
        assert root_power(n, e) ** n == 1


def test_arith_examples():
    z5 = [root_power(5, k) for k in range(1, 5)]
    total = z5[0] + z5[1] + z5[2] + z5[3]
    assert total == -1
    assert as_rational(total) == -1
    a = root_power(7, 3) + Fraction(2, 3)
    assert cyc_arith(a, 0, "add") == a
    assert cyc_arith(root_power(4, 1), root_power(4, 1), "mul") == -1
    with pytest.raises(ValueError):
        root_power(4, 1) + root_power(6, 1)


def test_inverse_examples():
    z4 = root_power(4, 1)
    inv = cyc_inverse(1 - z4)
    assert inv.coeffs == (Fraction(1, 2), Fraction(1, 2), 0, 0)
    assert cyc_inverse(CyclotomicElement.scalar(8, 1)) == 1
    assert cyc_inverse(CyclotomicElement.scalar(8, -1)) == -1
    with pytest.raises(ZeroDivisionError):
        cyc_inverse(CyclotomicElement.scalar(8, 0))


def test_conjugate_and_real_part_examples():
    z4 = root_power(4, 1)
    assert conjugate(z4) == root_power(4, 3) == -z4
    assert conjugate(Fraction(3, 7)) == Fraction(3, 7)
    assert doubled_real_part(z4) == 0
    assert doubled_real_part(Fraction(3, 7)) == Fraction(6, 7)
    z5 = root_power(5, 1)
    two_cos = doubled_real_part(z5)
    assert two_cos == z5 + root_power(5, 4)
    assert as_rational(two_cos) is None
    assert as_rational(z4) is None
    assert as_rational(CyclotomicElement(6, [Fraction(-1, 2)])) == Fraction(-1, 2)


def test_multiplicative_order_examples():
    assert multiplicative_order(10, 4) == 5
    assert multiplicative_order(7, 3) == 7
    assert multiplicative_order(4, 3) == 4  # eq18 at n=0 uses zeta_4^3
    assert multiplicative_order(9, 0) == 1


@st.composite
def elements(draw, max_order=40, nonzero=False):
    n = draw(st.integers(1, max_order))
    coeffs = draw(st.lists(st.fractions(-9, 9, max_denominator=7), min_size=n, max_size=n))
    x = CyclotomicElement(n, coeffs)
    if nonzero and x.is_zero():
        x = x + 1
    return x


@st.composite
def element_pairs(draw, max_order=40):
    a = draw(elements(max_order))
    coeffs = draw(st.lists(st.fractions(-9, 9, max_denominator=7), min_size=a.order, max_size=a.order))
    return a, CyclotomicElement(a.order, coeffs)


@given(elements(nonzero=True))
def test_inverse_property(a):
    assert a * cyc_inverse(a) == 1


def test_inverse_on_200_random_elements():
    import random

    rng = random.Random(7)
    done = 0
    while done < 200:
        n = rng.randint(1, 40)
        a = CyclotomicElement(n, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)])
        if a.is_zero():
            continue
        assert a * a.inverse() == 1
        done += 1


@given(element_pairs())
def test_conjugation_is_ring_automorphism(pair):
    a, b = pair
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert conjugate(a + b) == conjugate(a) + conjugate(b)
    assert conjugate(conjugate(a)) == a
    s = doubled_real_part(a)
    assert conjugate(s) == s


@given(element_pairs(), st.integers(1, 200))
def test_galois_transport_commutes_with_ring_ops(pair, a_exp):
    x, y = pair
    n = x.order
    if math.gcd(a_exp, n) != 1:
        a_exp = 1
    assert (x * y).galois(a_exp) == x.galois(a_exp) * y.galois(a_exp)
    assert (x + y).galois(a_exp) == x.galois(a_exp) + y.galois(a_exp)
    if not y.is_zero():
        assert (x / y).galois(a_exp) == x.galois(a_exp) / y.galois(a_exp)


@given(element_pairs(max_order=30))
def test_numeric_embedding_matches_direct_evaluation(pair):
    # both sides evaluated independently at P bits: the product via the
    # reduced representation versus multiplying the two embeddings.
    a, b = pair
    P = 192
    with mpmath.workprec(P):
        w = mpmath.expj(2 * mpmath.pi / a.order)
        lhs = (a * b).evaluate(w)
        rhs = a.evaluate(w) * b.evaluate(w)
        scale = max(1, abs(rhs))
        assert abs(lhs - rhs) <= scale * mpmath.mpf(2) ** (-(P - 16)) * 1000


def test_canonical_form_is_unique():
    # zeta_3^2 = -1 - zeta_3, written two ways
    z = CyclotomicElement(3, [0, 0, 1])
    w = CyclotomicElement(3, [-1, -1])
    assert z == w and hash(z) == hash(w)
    assert all(c == 0 for c in z.coeffs[euler_phi(3):])


def test_embed_preserves_value():
    z6 = root_power(6, 1)
    assert z6.embed(12) == root_power(12, 2)
    assert (z6 * z6).embed(24) == z6.embed(24) * z6.embed(24)


def test_phi_cache_under_concurrent_use():
    orders = list(range(120, 150))
    for n in orders:
        cyc._PHI.pop(n, None)
        cyc._PHI_INT.pop(n, None)
    results = {}

    def work(tid):
        results[tid] = [cyclotomic_polynomial(n) for n in orders]

    threads = [threading.Thread(target=work, args=(t,)) for t in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    first = results[0]
    assert all(r == first for r in results.values())
    assert all(p.degree == euler_phi(n) for n, p in zip(orders, first))
