from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclident.bernoulli import bernoulli_numbers, bernoulli_polynomial, eval_bernoulli


def akiyama_tanigawa(n: int) -> Fraction:
    """Independent oracle; this algorithm yields the B_1 = +1/2 convention."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def test_seed_values():
    assert bernoulli_numbers(1).values == (1, Fraction(-1, 2))
    table = bernoulli_numbers(3)
    assert table[2] == Fraction(1, 6)
    assert table[3] == 0


def test_against_independent_oracle():
    table = bernoulli_numbers(60)
    for j in range(61):
        expected = akiyama_tanigawa(j)
        if j == 1:
            expected = -expected
        assert table[j] == expected, j
    assert table[12] == Fraction(-691, 2730)


def test_odd_numbers_vanish():
    table = bernoulli_numbers(80)
    assert all(table[j] == 0 for j in range(3, 81, 2))


def test_polynomial_examples():
    assert bernoulli_polynomial(0).coeffs == (1,)
    assert bernoulli_polynomial(1).coeffs == (Fraction(-1, 2), 1)
    assert bernoulli_polynomial(3).coeffs == (0, Fraction(1, 2), Fraction(-3, 2), 1)
    assert eval_bernoulli(3, Fraction(1, 2)) == 0
    assert eval_bernoulli(3, 2) == 3
    for j in range(15):
        assert eval_bernoulli(j, 0) == bernoulli_numbers(j)[j]
        assert bernoulli_polynomial(j).coeffs[-1] == 1


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=30)


@given(st.integers(1, 12), rationals)
def test_difference_equation(j, x):
    assert eval_bernoulli(j, x + 1) - eval_bernoulli(j, x) == j * x ** (j - 1)


@given(st.integers(0, 12), rationals)
def test_reflection_symmetry(j, x):
    assert eval_bernoulli(j, 1 - x) == (-1) ** j * eval_bernoulli(j, x)


@pytest.mark.parametrize("m", range(1, 20))
def test_odd_polynomials_vanish_at_0_half_1(m):
    for x in (0, Fraction(1, 2), 1):
        assert eval_bernoulli(2 * m + 1, x) == 0
