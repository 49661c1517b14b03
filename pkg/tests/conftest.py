from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from hyp3f2.polyrat import Polynomial, RationalFunction

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def eval_terms(poly: Polynomial, point) -> Fraction:
    """Evaluate from the raw term dictionary, independent of the backend."""
    total = Fraction(0)
    for exps, c in poly.terms.items():
        term = Fraction(c)
        for x, e in zip(point, exps):
            term *= Fraction(x) ** e
        total += term
    return total


def eval_rf(rf: RationalFunction, point) -> Fraction:
    return eval_terms(rf.num, point) / eval_terms(rf.den, point)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)
exponents = st.tuples(*[st.integers(0, 3)] * 5)


@st.composite
def polynomials(draw, max_terms=5):
    terms = draw(st.dictionaries(exponents, small_fractions, max_size=max_terms))
    return Polynomial(terms)


@st.composite
def nonzero_polynomials(draw, max_terms=4):
    p = draw(polynomials(max_terms))
    if p.is_zero():
        p = p + Polynomial.constant(draw(st.integers(1, 5)))
    return p


@st.composite
def rational_functions(draw):
    return RationalFunction(draw(polynomials(4)), draw(nonzero_polynomials(3)))


points = st.tuples(*[st.fractions(min_value=-9, max_value=9, max_denominator=11)] * 5)


@pytest.fixture
def generic_rational_point():
    return tuple(Fraction(x) for x in ("3/7", "5/11", "7/13", "29/17", "41/19"))
