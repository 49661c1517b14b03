from fractions import Fraction
from itertools import product

import pytest

from hyp3f2.contiguous import (
    ONE,
    check_compatibility,
    check_inverse,
    contiguous_det,
    contiguous_matrix,
    phi,
    saalschutz,
    unit,
)
from hyp3f2.matrix import Matrix2
from hyp3f2.polyrat import RationalFunction, gens, rf_equal

from .oracle import f_ref_mp, shifted

a0, a1, a2, a3, a4 = gens()
s = saalschutz()
SIGNS = (1, -1)
PAIRS = [(i, e) for i in range(5) for e in SIGNS]
F = RationalFunction.from_factors


def test_a0_plus_as_printed():
    m = contiguous_matrix(0, "+").mat
    expected = Matrix2(((a0, 1), (F(phi(3), [s - 2]), F(a1 * a2 - (a0 - a3 + 1) * (a0 - a4 + 1), [s - 2]))))
    assert m.equals(expected)


def test_a3_minus_as_printed():
    m = contiguous_matrix(3, "-").mat
    x = a3 - 1
    expected = Matrix2(((x, 1), (F(phi(3), [s - 2]), F(x * x - phi(1) * x + phi(2), [s - 2]))))
    assert m.equals(expected)


def test_a4_plus_as_printed():
    d = [a4 - a0, a4 - a1, a4 - a2]
    expected = Matrix2(
        (
            (F(a4 * a4 - phi(1) * a4 + phi(2), d), F(-(s - 1), d)),
            (F(-phi(3), d), F(a4 * (s - 1), d)),
        )
    )
    assert contiguous_matrix(4, "+").mat.equals(expected)


def test_a1_minus_as_printed():
    d3 = [a1 - 1, a1 - a3, a1 - a4]
    d2 = [a1 - a3, a1 - a4]
    expected = Matrix2(
        (
            (F((a1 - a3) * (a1 - a4) - a0 * a2, d3), F(s - 1, d3)),
            (F(a0 * a2, d2), F(-(s - 1), d2)),
        )
    )
    assert contiguous_matrix(1, "-").mat.equals(expected)


def test_printed_determinants():
    assert rf_equal(contiguous_det(0, "+"), F(-(a0 * (a0 - a3 + 1) * (a0 - a4 + 1)), [s - 2]))
    assert rf_equal(contiguous_det(3, "+"), F(s - 1, [a3 - a0, a3 - a1, a3 - a2]))
    assert rf_equal(contiguous_det(4, "-"), F((a4 - a0 - 1) * (a4 - a1 - 1) * (a4 - a2 - 1), [s - 2]))


@pytest.mark.parametrize("i,sign", PAIRS)
def test_det_matches_closed_form(i, sign):
    assert rf_equal(contiguous_matrix(i, sign).det(), contiguous_det(i, sign))


@pytest.mark.parametrize("i,sign", PAIRS)
def test_inverse_relation(i, sign):
    assert check_inverse(i, sign)
    direct = contiguous_matrix(i, -sign, unit(i, sign)).mat.inverse()
    assert contiguous_matrix(i, sign).mat.equals(direct)


def test_compatibility_exhaustive():
    combos = list(product(range(5), range(5), SIGNS, SIGNS))
    assert len(combos) == 100
    assert all(check_compatibility(i, j, si, sj) for i, j, si, sj in combos)


def test_compatibility_examples():
    assert check_compatibility(0, 3, "+", "+")
    assert check_compatibility(1, 1, "+", "-")


def test_bad_arguments():
    with pytest.raises(ValueError):
        contiguous_matrix(5, "+")
    with pytest.raises(ValueError):
        contiguous_matrix(0, "*")


def test_shifted_matrix_is_translation():
    m = contiguous_matrix(2, 1, (1, 0, -1, 2, 0)).mat
    assert m.equals(contiguous_matrix(2, 1).mat.shift((1, 0, -1, 2, 0)))


def test_json_and_latex():
    c = contiguous_matrix(0, "+")
    data = c.to_json()
    assert data["direction"] == 0 and data["sign"] == "+"
    assert c.to_latex().startswith("A_{0}^{+}(a)")


# the matrices transport (h(a), h(a + 1)) to (h(a + eps e_i), h(a + eps e_i + 1))
POINT = (Fraction(31, 100), Fraction(47, 100), Fraction(23, 100), Fraction(361, 100), Fraction(413, 100))


@pytest.mark.parametrize("i,sign", PAIRS)
def test_matrices_transport_series_values(i, sign):
    m = contiguous_matrix(i, sign).mat.evaluate(POINT)
    pt = tuple(float(x) for x in POINT)
    h0, h1 = f_ref_mp(pt), f_ref_mp(shifted(pt, ONE))
    step = unit(i, sign)
    target0 = f_ref_mp(shifted(pt, step))
    target1 = f_ref_mp(shifted(shifted(pt, step), ONE))
    got0 = float(m[0][0]) * h0 + float(m[0][1]) * h1
    got1 = float(m[1][0]) * h0 + float(m[1][1]) * h1
    assert abs(got0 - target0) < 1e-12 * abs(target0)
    assert abs(got1 - target1) < 1e-12 * abs(target1)
