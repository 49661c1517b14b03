import cmath
import math
import random

import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings, strategies as st

from hyp3f2.connection import three_term_coefficients
from hyp3f2.contiguous import ONE, TWO, unit
from hyp3f2.errors import (
    CoefficientPole,
    ConvergenceMargin,
    GenericnessViolation,
    PoleOfGamma,
    SlowConvergence,
    TrigPole,
)
from hyp3f2.numeric import (
    COMPANIONS,
    ParameterPoint,
    check_generic,
    companion,
    companion_name,
    complex_gamma,
    hgf_series,
    hgf_unit,
    iteration_cap,
    log_gamma,
    relation_residuals,
    thomae_terms,
    trig_coefficient,
    trig_coefficients,
    verify_thomae,
    verify_three_term,
    verify_trig_relation,
)
from hyp3f2.symmetry import generators

from .oracle import f_ref, shifted

A_REAL = (0.3, 0.4, 0.5, 2.35, 2.7)
A_COMPLEX = (0.3 + 0.1j, 0.4 - 0.05j, 0.55, 2.35 + 0.2j, 3.7 - 0.1j)
WIMP = (1, 1, 1, 2, 1)


def rel_err(x, y):
    return abs(x - y) / abs(y)


# -- gamma -----------------------------------------------------------------------------


def test_gamma_classical_values():
    assert abs(complex_gamma(1) - 1) < 1e-15
    assert rel_err(complex_gamma(0.5), math.sqrt(math.pi)) < 1e-14
    assert rel_err(complex_gamma(5), 24) < 1e-14


def test_gamma_recursion():
    z = 3.7 + 1.2j
    assert rel_err(complex_gamma(z + 1), z * complex_gamma(z)) < 1e-12


@given(
    st.floats(-30, 30, allow_nan=False),
    st.floats(-20, 20, allow_nan=False),
)
def test_gamma_against_scipy(x, y):
    z = complex(x, y)
    if abs(z - round(x)) < 1e-3 and round(x) <= 0:
        return
    ref = complex(scipy.special.gamma(z))
    if not np.isfinite(ref) or ref == 0 or abs(ref) < 1e-290:
        return
    assert rel_err(complex_gamma(z), ref) < 1e-12


@given(st.floats(-25, 25, allow_nan=False), st.floats(-25, 25, allow_nan=False))
def test_log_gamma_consistent(x, y):
    z = complex(x, y)
    if abs(z - round(x)) < 1e-3 and round(x) <= 0:
        return
    ref = complex(scipy.special.loggamma(z))
    assert rel_err(cmath.exp(log_gamma(z) - ref), 1) < 1e-11


@pytest.mark.parametrize("z", [0, -1, -7, -3 + 1e-14j])
def test_gamma_poles(z):
    with pytest.raises(PoleOfGamma):
        complex_gamma(z)


# -- preconditions ------------------------------------------------------------------------


def test_genericness():
    with pytest.raises(GenericnessViolation):
        check_generic((1, 0.4, 0.5, 2.35, 2.7))
    with pytest.raises(GenericnessViolation):
        check_generic((0.3, 0.4, 0.5, 2.3, 2.7))  # a0 - b1 = -2
    with pytest.raises(GenericnessViolation):
        ParameterPoint((0.3, 1.3, 0.5, 2.35, 2.7))
    check_generic(A_REAL)


def test_convergence_margin():
    with pytest.raises(ConvergenceMargin):
        ParameterPoint((0.3, 0.4, 0.5, 0.65, 0.65 + 0.01))
    assert ParameterPoint(A_REAL).saalschutz() == pytest.approx(3.85)


def test_point_parsing():
    pt = ParameterPoint.parse("0.3, 0.4+0.1j, 0.5; 2.35, 2.7")
    assert pt.a[1] == 0.4 + 0.1j
    with pytest.raises(ValueError):
        ParameterPoint.parse("0.3,x,0.5,2.35,2.7")
    with pytest.raises(ValueError):
        ParameterPoint.parse("0.3,0.4,0.5,2.35")


def test_iteration_cap_env(monkeypatch):
    monkeypatch.delenv("HYP3F2_ITER_CAP", raising=False)
    assert iteration_cap() == 10**7
    monkeypatch.setenv("HYP3F2_ITER_CAP", "5000")
    assert iteration_cap() == 5000
    with pytest.raises(SlowConvergence):
        hgf_series((0.3, 0.4, 0.5, 1.35, 1.95), sigma_min=0.5)
    monkeypatch.setenv("HYP3F2_ITER_CAP", "lots")
    with pytest.raises(ValueError):
        iteration_cap()


# -- the series -----------------------------------------------------------------------


def test_series_at_reference_point():
    val = hgf_series(A_REAL)
    assert rel_err(val.value, 6.39788881798046) < 1e-12
    assert rel_err(val.value, f_ref(A_REAL)) < 1e-12
    assert val.error < 1e-10 * abs(val.value)


def test_series_complex_point_against_mpmath():
    assert rel_err(hgf_unit(A_COMPLEX), f_ref(A_COMPLEX)) < 1e-11


def test_series_with_large_negative_parameters():
    # leading terms alternate and cancel; they are summed in extended precision
    a = (-8.47 - 0.22j, -9.68 - 0.49j, -7.57 - 0.16j, -12.17 - 0.44j, -9.97 - 0.42j)
    assert rel_err(hgf_unit(a), f_ref(a)) < 1e-11


def test_slow_convergence():
    with pytest.raises(SlowConvergence):
        hgf_series(A_REAL, cap=100, rel_tol=1e-15)


def test_divergent_series_rejected():
    with pytest.raises(ConvergenceMargin):
        hgf_series((0.3, 0.4, 0.5, 0.55, 0.62), check=False)


def _random_point(rng, s_min=3.0):
    base = [complex(rng.uniform(0.2, 0.8), rng.uniform(-0.3, 0.3)) for _ in range(4)]
    b2 = s_min + rng.uniform(0, 1) + base[0] + base[1] + base[2] - base[3]
    return tuple(base) + (b2,)


def test_truncation_self_consistency():
    rng = random.Random(17)
    for _ in range(20):
        a = _random_point(rng)
        coarse = hgf_series(a, rel_tol=1e-9)
        fine = hgf_series(a, rel_tol=1e-13, cap=2 * 10**7)
        assert abs(coarse.value - fine.value) <= coarse.error


# -- companions ------------------------------------------------------------------------


def test_companion_names():
    assert [companion_name(i, nu) for i, nu in COMPANIONS][:2] == ["y_0^{(0)}", "y_1^{(0)}"]
    assert companion_name(2, "inf") == "y_2^{(inf)}"
    with pytest.raises(ValueError):
        companion(0, "1", A_COMPLEX)


def test_companion_definitions():
    g = generators()
    assert companion(0, "0", A_COMPLEX) == hgf_unit(A_COMPLEX)
    assert companion(1, "0", A_COMPLEX) == hgf_unit(g["tau1"](A_COMPLEX))
    s = A_COMPLEX[3] + A_COMPLEX[4] - sum(A_COMPLEX[:3])
    phase = cmath.exp(1j * math.pi * s)
    assert rel_err(companion(0, "inf", A_COMPLEX), phase * hgf_unit(g["sigma0"](A_COMPLEX))) < 1e-15


def test_companion_at_infinity_against_mpmath():
    a = A_COMPLEX
    a0, a1, a2, b1, b2 = a
    image = (a0, a0 + 1 - b1, a0 + 1 - b2, a0 + 1 - a1, a0 + 1 - a2)
    s = b1 + b2 - a0 - a1 - a2
    ref = cmath.exp(1j * math.pi * s) * f_ref(image)
    assert rel_err(companion(0, "inf", a), ref) < 1e-11


@pytest.mark.parametrize("i", range(3))
def test_numerator_step_on_all_companions(i):
    # h(a + e_i) = a_i h(a) + h(a + 1)
    a = A_COMPLEX
    for ci, nu in COMPANIONS:
        h = lambda x: companion(ci, nu, x)  # noqa: E731
        lhs = h(shifted(a, unit(i)))
        rhs = a[i] * h(a) + h(shifted(a, ONE))
        assert abs(lhs - rhs) < 1e-8 * max(abs(lhs), abs(rhs))


@pytest.mark.parametrize("i", (3, 4))
def test_denominator_step_on_all_companions(i):
    # h(a - e_i) = (a_i - 1) h(a) + h(a + 1)
    a = A_COMPLEX
    for ci, nu in COMPANIONS:
        h = lambda x: companion(ci, nu, x)  # noqa: E731
        lhs = h(shifted(a, unit(i, -1)))
        rhs = (a[i] - 1) * h(a) + h(shifted(a, ONE))
        assert abs(lhs - rhs) < 1e-8 * max(abs(lhs), abs(rhs))


# -- three-term relations ------------------------------------------------------------------


@pytest.mark.parametrize(
    "p,q",
    [(ONE, TWO), (unit(0), ONE), (WIMP, tuple(-x for x in WIMP)), ((1, -1, 0, 2, 0), (0, 1, -1, 0, 1))],
)
def test_relation_residuals_small(p, q):
    rel = three_term_coefficients(p, q)
    res = verify_three_term(rel, A_COMPLEX)
    assert len(res) == 6
    assert [r.companion for r in res] == [companion_name(i, nu) for i, nu in COMPANIONS]
    assert max(r.residual for r in res) < 1e-8


def test_one_two_relation_scaled_residual():
    # phi3 h(a) = psi h(a + 1) + (s - 2) h(a + 2) at the reference point
    a0, a1, a2, b1, b2 = a = (0.3, 0.4, 0.5, 4.35, 2.7)
    phi3 = a0 * a1 * a2
    psi = b1 * b2 - (a0 * a1 + a1 * a2 + a0 * a2) - (a0 + a1 + a2) - 1
    s = b1 + b2 - a0 - a1 - a2
    lhs = phi3 * hgf_unit(a)
    rhs = psi * hgf_unit(shifted(a, ONE)) + (s - 2) * hgf_unit(shifted(a, TWO))
    assert abs(lhs - rhs) < 1e-8 * abs(lhs)


def test_wrong_coefficients_are_detected():
    rel = three_term_coefficients(ONE, TWO)
    wrong = three_term_coefficients(ONE, (2, 2, 2, 2, 3))
    bad = type(rel)(rel.p, rel.q, wrong.u, wrong.v)
    assert max(r.residual for r in verify_three_term(bad, A_COMPLEX)) > 1e-3


def test_shifted_points_must_satisfy_margin():
    rel = three_term_coefficients(ONE, TWO)
    with pytest.raises(ConvergenceMargin):
        verify_three_term(rel, A_REAL)  # s(a + 2) = 1.85


def test_coefficient_pole():
    rel = three_term_coefficients(ONE, TWO)
    with pytest.raises(CoefficientPole):
        relation_residuals(rel, (0, 0.4, 0.5, 3.35, 3.7))


# -- two-term and trigonometric relations ---------------------------------------------------


@pytest.mark.parametrize("j", (1, 2))
def test_thomae(j):
    assert verify_thomae(A_COMPLEX, j) < 1e-8
    assert verify_thomae(A_REAL, j) < 1e-8


def test_thomae_difference_is_trig_relation():
    lhs1, first1, second1 = thomae_terms(A_COMPLEX, 1)
    lhs2, first2, second2 = thomae_terms(A_COMPLEX, 2)
    y0 = companion(0, "0", A_COMPLEX)
    y1 = companion(1, "0", A_COMPLEX)
    y2 = companion(2, "0", A_COMPLEX)
    # (A1 - A2) y0 - B1 y1 + B2 y2 = 0, coefficients proportional to c_0, c_1, c_2
    coeffs = ((first1 - first2) / y0, -second1 / y1, second2 / y2)
    c = trig_coefficients(A_COMPLEX)
    ratios = [x / y for x, y in zip(coeffs, c)]
    assert all(rel_err(r, ratios[0]) < 1e-8 for r in ratios)


def test_trig_relation_and_periodicity():
    assert verify_trig_relation(A_REAL) < 1e-8
    assert verify_trig_relation(A_COMPLEX) < 1e-8
    moved = shifted(A_COMPLEX, (2, 0, 0, 0, 0))
    assert verify_trig_relation(A_COMPLEX, coefficient_point=moved) < 1e-8
    for x, y in zip(trig_coefficients(A_COMPLEX), trig_coefficients(moved)):
        assert rel_err(x, y) < 1e-12


def test_trig_coefficient_symmetry():
    g = generators()
    c = trig_coefficients(A_COMPLEX)
    assert c[1] == trig_coefficient(g["tau1"](A_COMPLEX))
    assert c[2] == trig_coefficient(g["tau2"](A_COMPLEX))


def test_trig_pole():
    with pytest.raises(TrigPole):
        trig_coefficient((0.3, 0.4, 0.5, 2.0, 2.7))
    with pytest.raises(TrigPole):
        verify_thomae((0.3, 0.4, 0.5, 2.0, 2.7), 1)


@settings(max_examples=5)
@given(st.integers(0, 10**6))
def test_random_thomae_points(seed):
    a = _random_point(random.Random(seed))
    assert verify_thomae(a, 1) < 1e-8
    assert verify_trig_relation(a) < 1e-8
