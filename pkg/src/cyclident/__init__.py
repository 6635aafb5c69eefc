"""Exact verification of cyclotomic, cotangent and Bernoulli sum identities."""
from .bernoulli import bernoulli_numbers, bernoulli_polynomial, eval_bernoulli
from .cyclotomic import (
    CyclotomicElement,
    cyclotomic_polynomial,
    multiplicative_order,
    root_power,
)
from .identities import REGISTRY, run_identity
from .laurent import LaurentPolynomial
from .numeric import PrecisionContext
from .ratpoly import DensePolynomial, Rational
from .report import IdentityReport

__all__ = [
    "CyclotomicElement",
    "DensePolynomial",
    "IdentityReport",
    "LaurentPolynomial",
    "PrecisionContext",
    "REGISTRY",
    "Rational",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "cyclotomic_polynomial",
    "eval_bernoulli",
    "multiplicative_order",
    "root_power",
    "run_identity",
]
