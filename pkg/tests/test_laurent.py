from fractions import Fraction

from hypothesis import given, strategies as st

from cyclident.laurent import LaurentPolynomial

terms = st.dictionaries(st.integers(-20, 20), st.integers(-5, 5), max_size=8)


def test_trimming_and_zero():
    p = LaurentPolynomial(-3, [0, 0, 2, 0, 5, 0])
    assert p.offset == -1 and p.coeffs == (2, 0, 5)
    assert LaurentPolynomial(4, [0, 0]).is_zero()
    assert LaurentPolynomial.from_terms([(-2, -1), (-2, 1)]).is_zero()
    assert LaurentPolynomial().valuation is None


def test_arithmetic():
    z = LaurentPolynomial.monomial(1)
    zi = LaurentPolynomial.monomial(-1)
    assert z * zi == 1
    assert (z + zi) * (z - zi) == LaurentPolynomial.from_terms({2: 1, -2: -1})
    assert (z + 2).substitute_inverse() == zi + 2


@given(terms, terms)
def test_evaluation_is_a_homomorphism(a, b):
    p, q = LaurentPolynomial.from_terms(a), LaurentPolynomial.from_terms(b)
    x = Fraction(3, 2)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
