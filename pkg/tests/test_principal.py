from fractions import Fraction as Fr
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from hyp3f2.contiguous import ZERO, phi, saalschutz
from hyp3f2.errors import SingularSpecialization
from hyp3f2.matrix import Matrix2
from hyp3f2.polyrat import RationalFunction, gens, rf_equal
from hyp3f2.principal import (
    as_q2,
    check_commutativity,
    check_reordering,
    conjugate,
    goodness,
    hat_principal,
    hat_principal_product,
    is_good,
    laurent_errors,
    principal_det,
    principal_matrix,
    principal_product,
    qdiag,
    qinv,
    qmul,
    qpow,
    specialize_numerators,
    verify_laurent_limit,
)

a0, a1, a2, a3, a4 = gens()
s = saalschutz()


def q2(rows):
    return as_q2([[Fr(x) for x in row] for row in rows])


def diag(x, y):
    return q2([[x, 0], [0, y]])


# -- symbolic form -------------------------------------------------------------------


def test_b0_as_printed():
    F = RationalFunction.from_factors
    expected = Matrix2(((a0, 1), (F(phi(3), [s]), F(a1 * a2 - (a0 - a3) * (a0 - a4), [s]))))
    assert principal_matrix(0).mat.equals(expected)


@pytest.mark.parametrize("i", range(5))
def test_determinant_closed_form(i):
    assert rf_equal(principal_matrix(i).det(), principal_det(i))


@pytest.mark.parametrize("i,j", list(combinations_with_replacement(range(5), 2)))
def test_commutativity(i, j):
    assert check_commutativity(i, j)


def test_bad_index():
    with pytest.raises(ValueError):
        principal_matrix(5)
    with pytest.raises(ValueError):
        hat_principal(-1)


def test_top_homogeneous_part_of_contiguous_matrix():
    # B_i keeps the top-degree parts of the entries of A_i^+
    from hyp3f2.contiguous import contiguous_matrix

    t = Fr(10**6)
    pt = (Fr(1), Fr(2), Fr(3), Fr(5), Fr(7))
    a_big = contiguous_matrix(0, 1).mat.evaluate([t * x for x in pt])
    b = principal_matrix(0).at(pt)
    # entries scale like t^0, t^-1, t^1, t^0 respectively
    assert abs(a_big[0][0] / t - b[0][0]) < Fr(1, 10**5)
    assert abs(a_big[1][0] / t**2 - b[1][0]) < Fr(1, 10**5)
    assert abs(a_big[1][1] / t - b[1][1]) < Fr(1, 10**5)


# -- good points and printed specializations -------------------------------------------


def test_goodness():
    assert is_good((2, 2, 2, -7, -7))
    assert not is_good((0, 1, 2, 3, 4))
    assert goodness((1, 1, 1, 2, 1)) == 0  # s = 0
    with pytest.raises(SingularSpecialization):
        principal_matrix(3).at((1, 1, 1, 1, 5))


def test_specialization_equal_numerators_negative_denominators():
    pt = (2, 2, 2, -7, -7)
    b0 = q2([[2, 1], ["-2/5", "77/20"]])
    b3 = q2([["-103/729", "-20/729"], ["8/729", "-140/729"]])
    for i in range(3):
        assert principal_matrix(i).at(pt) == b0
    for i in (3, 4):
        assert principal_matrix(i).at(pt) == b3
    p = q2([["5/8", 4], [1, 1]])
    assert conjugate(p, b0) == diag(Fr(2 * 9, 5), Fr(9, 4))
    assert conjugate(p, b3) == diag(Fr(-5, 27), Fr(-4, 27))


def test_specialization_zero_denominator_parameter():
    pt = (4, 4, 4, 0, 7)
    b0 = q2([[4, 1], ["-64/5", "-28/5"]])
    for i in range(3):
        assert principal_matrix(i).at(pt) == b0
    b3 = q2([["-3/4", "-5/64"], [1, 0]])
    b4 = q2([["13/27", "5/27"], ["-64/27", "-35/27"]])
    assert principal_matrix(3).at(pt) == b3
    assert principal_matrix(4).at(pt) == b4
    p = q2([["-1/8", "-5/8"], [1, 1]])
    assert conjugate(p, qmul(b3, qinv(b4))) == diag(Fr(1, 8), Fr(-27, 8))


@pytest.mark.parametrize("pt,first", [((-6, 1, 1, 0, 0), 0), ((1, -6, 1, 0, 0), 1)])
def test_specialization_one_distinct_numerator(pt, first):
    other = 1 - first
    b_first = q2([[-6, 1], ["-3/2", "-35/4"]])
    b_other = q2([[1, 1], ["-3/2", "-7/4"]])
    b_den = q2([["-11/6", "-2/3"], [1, 0]])
    assert principal_matrix(first).at(pt) == b_first
    assert principal_matrix(other).at(pt) == b_other
    assert principal_matrix(2).at(pt) == b_other
    assert principal_matrix(3).at(pt) == b_den == principal_matrix(4).at(pt)
    p = q2([["-1/2", "-4/3"], [1, 1]])
    assert conjugate(p, qmul(b_first, qinv(b_other))) == diag(8, -27)


# -- products ------------------------------------------------------------------------


def test_product_of_zero_shift_is_identity():
    assert principal_product(ZERO).is_identity()
    assert principal_product(ZERO, (2, 2, 2, -7, -7)) == qpow(q2([[1, 0], [0, 1]]), 0)


def test_product_with_equal_factors():
    pt = (2, 2, 2, -7, -7)
    b0 = principal_matrix(0).at(pt)
    assert principal_product((1, 1, 1, 0, 0), pt) == qpow(b0, 3)


def test_symbolic_product_matches_point_product():
    p = (1, -1, 0, 1, 0)
    pt = (Fr(1, 3), Fr(2, 7), Fr(5, 11), Fr(13, 3), Fr(17, 5))
    assert principal_product(p).evaluate(pt) == principal_product(p, pt)


def test_all_factor_orders_agree():
    pt = (Fr(1, 3), Fr(2, 7), Fr(5, 11), Fr(13, 3), Fr(17, 5))
    assert check_reordering((1, -1, 2, 1, -1), pt)


@settings(max_examples=15)
@given(st.tuples(*[st.integers(-2, 2)] * 5))
def test_products_diagonalize_together(p):
    # every product at (2,2,2;-7,-7) is diagonal in the common eigenbasis
    pt = (2, 2, 2, -7, -7)
    P = q2([["5/8", 4], [1, 1]])
    assert qdiag(conjugate(P, principal_product(p, pt)))


def test_product_at_bad_point_rejected():
    with pytest.raises(SingularSpecialization):
        principal_product((1, 0, 0, 0, 0), (0, 1, 2, 3, 4))


# -- Laurent limit ---------------------------------------------------------------------


def test_laurent_errors_halve():
    errs = laurent_errors((1, 0, 0, 0, 0), (1, 2, 3, 5, 7), [10, 20, 40, 80])
    assert all(e > 0 for e in errs)
    ratios = [float(e2 / e1) for e1, e2 in zip(errs, errs[1:])]
    assert all(abs(r - 0.5) < 0.1 for r in ratios)
    assert verify_laurent_limit((1, 0, 0, 0, 0), (1, 2, 3, 5, 7), [10, 20, 40, 80])


def test_laurent_zero_shift_is_exact():
    assert laurent_errors(ZERO, (1, 2, 3, 5, 7), [10, 20]) == [0, 0]
    assert verify_laurent_limit(ZERO, (1, 2, 3, 5, 7), [10, 20, 40])


@pytest.mark.parametrize("p", [(1, -1, 0, 1, -1), (0, 0, 0, 1, 0), (0, 1, 0, 0, -1), (2, 1, -1, 0, 1)])
def test_laurent_mixed_signs(p):
    assert verify_laurent_limit(p, (1, 2, 3, 5, 7), [10, 20, 40, 80])


def test_laurent_requires_increasing_t():
    with pytest.raises(ValueError):
        verify_laurent_limit((1, 0, 0, 0, 0), (1, 2, 3, 5, 7), [20, 10])


def test_laurent_rejects_bad_point():
    with pytest.raises(SingularSpecialization):
        verify_laurent_limit((1, 0, 0, 0, 0), (1, 1, 1, 1, 1), [10, 20])


# -- specialization a0 = a1 = a2 = 0 ----------------------------------------------------------


def test_hat_numerator_form():
    F = RationalFunction.from_factors
    expected = Matrix2(((0, 1), (0, F(-(a3 * a4), [a3 + a4]))))
    for i in range(3):
        assert hat_principal(i).equals(expected)


@pytest.mark.parametrize("i", range(5))
def test_hat_is_specialized_principal_part(i):
    assert specialize_numerators(principal_matrix(i).mat).equals(hat_principal(i))


def test_hat_denominator_at_point():
    m = hat_principal(3).evaluate((0, 0, 0, -2, 3))
    assert m == ((Fr(-1, 2), Fr(1, 8)), (0, Fr(1, 4)))


def _hat_closed_form(p):
    p0, p1, p2, p3, p4 = p
    n = p0 + p1 + p2
    if n == 0:
        return (
            (Fr(-2) ** -p3 * Fr(3) ** -p4, Fr(2) ** (-2 * p3 - 1) * Fr(3) ** (-2 * p4 - 1) * (1 - Fr(-2) ** p3 * Fr(3) ** p4)),
            (0, Fr(2) ** (-2 * p3) * Fr(3) ** (-2 * p4)),
        )
    return (
        (0, Fr(2) ** (n - 2 * p3 - 1) * Fr(3) ** (n - 2 * p4 - 1)),
        (0, Fr(2) ** (n - 2 * p3) * Fr(3) ** (n - 2 * p4)),
    )


@given(st.tuples(*[st.integers(0, 3)] * 3, *[st.integers(-3, 3)] * 2))
def test_hat_product_closed_form(p):
    assert hat_principal_product(p, (-2, 3)) == _hat_closed_form(p)


def test_hat_product_symbolic_matches_point():
    p = (1, 0, 0, 2, -1)
    assert hat_principal_product(p).evaluate((0, 0, 0, -2, 3)) == hat_principal_product(p, (-2, 3))


def test_hat_product_restrictions():
    with pytest.raises(ValueError):
        hat_principal_product((-1, 0, 0, 0, 0), (-2, 3))
    with pytest.raises(SingularSpecialization):
        hat_principal_product((1, 0, 0, 0, 0), (2, -2))
