"""Floating-point oracle: complex gamma, the unit-argument series and its companions.

The renormalized series is
    f(a) = sum_k G(a0+k) G(a1+k) G(a2+k) / (G(1+k) G(b1+k) G(b2+k)),
which converges for Re s(a) > 0.  The six companions are f composed with the
parameter involutions, the three at infinity multiplied by exp(i pi s(a)).
"""
from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import flint
import numpy as np

from .connection import ThreeTermRelation
from .errors import (
    CoefficientPole,
    ConvergenceMargin,
    DenominatorVanishes,
    GenericnessViolation,
    PoleOfGamma,
    SlowConvergence,
    TrigPole,
)
from .symmetry import companion_map

GENERIC_TOL = 1e-6
SIGMA_MIN = 2.0
REL_TOL = 1e-11
DEFAULT_ITER_CAP = 10**7

# Lanczos approximation, g = 7, nine coefficients
_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2 * math.pi)


def iteration_cap() -> int:
    """Series iteration cap, overridable by the HYP3F2_ITER_CAP environment variable."""
    raw = os.environ.get("HYP3F2_ITER_CAP")
    if raw is None:
        return DEFAULT_ITER_CAP
    try:
        cap = int(float(raw))
    except ValueError:
        raise ValueError(f"HYP3F2_ITER_CAP must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise ValueError("HYP3F2_ITER_CAP must be positive")
    return cap


def _near_nonpositive_integer(z: complex, tol: float = 1e-12) -> bool:
    n = round(z.real)
    return n <= 0 and abs(z - n) < tol


def _lanczos_log(z: complex) -> complex:
    # log Gamma(z) for Re z >= 1/2
    z -= 1
    x = _LANCZOS[0]
    for i in range(1, _LANCZOS_G + 2):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def log_gamma(z) -> complex:
    """A logarithm of Gamma(z) (branch unspecified; exp of it is Gamma(z))."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleOfGamma(f"Gamma has a pole at {z}")
    if z.real < 0.5:
        return cmath.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - _lanczos_log(1 - z)
    return _lanczos_log(z)


def complex_gamma(z) -> complex:
    """Gamma(z) for complex z, with reflection for Re z < 1/2."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleOfGamma(f"Gamma has a pole at {z}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * complex_gamma(1 - z))
    z -= 1
    x = _LANCZOS[0]
    for i in range(1, _LANCZOS_G + 2):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x


# -- parameter points -----------------------------------------------------------


def as_point(a: Sequence) -> tuple[complex, ...]:
    pt = tuple(complex(x) for x in a)
    if len(pt) != 5:
        raise ValueError(f"a parameter point has 5 components, got {len(pt)}")
    return pt


def saalschutz_value(a: Sequence) -> complex:
    a0, a1, a2, b1, b2 = as_point(a)
    return b1 + b2 - a0 - a1 - a2


def _dist_to_integer(z: complex) -> float:
    return abs(z - round(z.real))


def check_generic(a: Sequence, tol: float = GENERIC_TOL) -> None:
    """No a_i and no a_i - a_j within tol of an integer."""
    pt = as_point(a)
    for i, x in enumerate(pt):
        if _dist_to_integer(x) < tol:
            raise GenericnessViolation(f"parameter a{i} = {x} is (nearly) an integer")
    for i in range(5):
        for j in range(i + 1, 5):
            if _dist_to_integer(pt[i] - pt[j]) < tol:
                raise GenericnessViolation(f"a{i} - a{j} = {pt[i] - pt[j]} is (nearly) an integer")


def check_margin(a: Sequence, sigma_min: float = SIGMA_MIN) -> None:
    s = saalschutz_value(a)
    if s.real < sigma_min:
        raise ConvergenceMargin(f"Re s(a) = {s.real:.6g} is below the margin {sigma_min}")


@dataclass(frozen=True)
class ParameterPoint:
    """A validated complex parameter point (a0, a1, a2; b1, b2)."""

    a: tuple[complex, ...]

    def __init__(self, a: Sequence, sigma_min: float = SIGMA_MIN, tol: float = GENERIC_TOL):
        pt = as_point(a)
        check_generic(pt, tol)
        check_margin(pt, sigma_min)
        object.__setattr__(self, "a", pt)

    @classmethod
    def parse(cls, text: str, **kw) -> ParameterPoint:
        """Parse comma-separated values such as '0.3,0.4+0.1j,0.5,2.3,2.7'."""
        try:
            vals = [complex(x.strip().replace(" ", "")) for x in text.replace(";", ",").split(",")]
        except ValueError as exc:
            raise ValueError(f"bad parameter point {text!r}: {exc}") from None
        return cls(vals, **kw)

    def saalschutz(self) -> complex:
        return saalschutz_value(self.a)


# -- the series --------------------------------------------------------------------

_HEAD_PREC = 192


def _head_length(pt: Sequence[complex]) -> int:
    # while some parameter + k has real part below 1 the terms can alternate and cancel
    return max(0, math.ceil(1 - min(x.real for x in pt)))


def _head_sum(pt: Sequence[complex], n: int) -> tuple[complex, complex]:
    """(sum_{k<n} P_k, P_n) with P_k = T_k / T_0, accumulated in extended precision."""
    a0, a1, a2, b1, b2 = (flint.acb(x.real, x.imag) for x in pt)
    with flint.ctx.workprec(_HEAD_PREC):
        term = flint.acb(1)
        total = flint.acb(0)
        for k in range(n):
            total += term
            term = term * (a0 + k) * (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (1 + k))
        return complex(total), complex(term)


class SeriesValue(NamedTuple):
    value: complex
    error: float
    terms: int


def hgf_series(
    a: Sequence,
    rel_tol: float = REL_TOL,
    abs_tol: float = 0.0,
    sigma_min: float = SIGMA_MIN,
    cap: int | None = None,
    check: bool = True,
) -> SeriesValue:
    """Sum the renormalized unit-argument series with a tail-bound stopping rule.

    Terms follow T_{k+1} = T_k (a0+k)(a1+k)(a2+k) / ((1+k)(b1+k)(b2+k)).
    Leading terms where some parameter + k has real part below 1 may cancel
    heavily; they are summed in extended precision.  The rest is summed in
    double precision chunks, stopping at the first chunk end K where the
    tail bound |T_K| K / (Re s - 1) drops below max(abs_tol, rel_tol * |S|).
    """
    pt = as_point(a)
    if check:
        check_generic(pt)
        check_margin(pt, sigma_min)
    cap = iteration_cap() if cap is None else cap
    a0, a1, a2, b1, b2 = pt
    s = b1 + b2 - a0 - a1 - a2
    if s.real <= 0:
        raise ConvergenceMargin(f"series diverges: Re s(a) = {s.real:.6g}")
    tail_den = s.real - 1 if s.real > 1.5 else s.real / 3
    # the tail bound assumes the term ratio is already in its asymptotic regime
    k_min = int(4 * max(abs(x) for x in pt)) + 16
    t0 = cmath.exp(log_gamma(a0) + log_gamma(a1) + log_gamma(a2) - log_gamma(b1) - log_gamma(b2))
    start = _head_length(pt)
    if start >= cap:
        raise SlowConvergence(f"iteration cap {cap} is below the {start} leading terms")
    head, ratio_at_start = _head_sum(pt, start)
    total = t0 * head
    abs_sum = abs(total)
    last = t0 * ratio_at_start
    chunk = 1024
    while True:
        stop = min(start + chunk, cap)
        k = np.arange(start, stop, dtype=np.float64)
        ratio = (a0 + k) * (a1 + k) * (a2 + k) / ((1 + k) * (b1 + k) * (b2 + k))
        # terms T_start .. T_{stop-1}, and T_stop from the final ratio
        prods = np.cumprod(ratio)
        terms = np.empty(stop - start, dtype=np.complex128)
        terms[0] = last
        terms[1:] = last * prods[:-1]
        total += terms.sum()
        abs_sum += float(np.abs(terms).sum())
        last = last * prods[-1]
        tail = abs(last) * stop / tail_den
        rounding = 8 * np.finfo(float).eps * abs_sum
        if stop >= k_min and tail < max(abs_tol, rel_tol * abs(total)):
            return SeriesValue(complex(total), tail + rounding, stop)
        if stop >= cap:
            raise SlowConvergence(f"no convergence within {cap} terms (tail bound {tail:.3g})")
        start = stop
        chunk = min(chunk * 2, 1 << 20)


def hgf_unit(a: Sequence, **kw) -> complex:
    """f(a), the renormalized 3F2 series at unit argument."""
    return hgf_series(a, **kw).value


COMPANIONS = tuple((i, nu) for nu in ("0", "inf") for i in range(3))


def companion_name(i: int, nu: str) -> str:
    return f"y_{i}^{{({'0' if nu == '0' else 'inf'})}}"


def companion(i: int, nu: str, a: Sequence, **kw) -> complex:
    """y_i^(0)(a) = f(sigma_i^(0)(a)); y_i^(inf)(a) = exp(i pi s(a)) f(sigma_i^(inf)(a))."""
    if nu not in ("0", "inf"):
        raise ValueError("nu must be '0' or 'inf'")
    pt = as_point(a)
    at_inf = nu == "inf"
    image = companion_map(i, at_inf)(pt)
    val = hgf_unit(image, **kw)
    if at_inf:
        val *= cmath.exp(1j * math.pi * saalschutz_value(pt))
    return val


def _shifted(a: Sequence, p) -> tuple[complex, ...]:
    return tuple(x + d for x, d in zip(as_point(a), p))


def _exact_point(a: Sequence):
    # use exact rationals when all parameters are real rationals given as Fractions or ints
    if all(isinstance(x, (int, Fraction)) for x in a):
        return tuple(Fraction(x) for x in a)
    return as_point(a)


class Residual(NamedTuple):
    companion: str
    residual: float


def relation_residuals(
    rel: ThreeTermRelation, a: Sequence, functions=None, **kw
) -> list[Residual]:
    """Relative residuals |h(a) - u h(a+p) - v h(a+q)| / max of the three magnitudes."""
    pt = _exact_point(a)
    try:
        u, v = rel.coefficients_at(pt)
    except DenominatorVanishes as exc:
        raise CoefficientPole(str(exc)) from None
    u, v = complex(u), complex(v)
    cpt = as_point(pt)
    out = []
    for i, nu in functions or COMPANIONS:
        h0 = companion(i, nu, cpt, **kw)
        hp = companion(i, nu, _shifted(cpt, rel.p), **kw)
        hq = companion(i, nu, _shifted(cpt, rel.q), **kw)
        scale = max(abs(h0), abs(u * hp), abs(v * hq))
        res = abs(h0 - u * hp - v * hq) / scale if scale else 0.0
        out.append(Residual(companion_name(i, nu), res))
    return out


def verify_three_term(rel: ThreeTermRelation, a: Sequence, **kw) -> list[Residual]:
    """Residuals of the relation for all six companions at a."""
    cpt = as_point(a)
    sigma_min = kw.get("sigma_min", SIGMA_MIN)
    for shift in ((0,) * 5, rel.p.p, rel.q.p):
        pt = _shifted(cpt, shift)
        check_generic(pt)
        check_margin(pt, sigma_min)
    return relation_residuals(rel, a, **kw)


def _sinpi(z: complex) -> complex:
    return cmath.sin(math.pi * z)


def _trig_den(x: complex, what: str) -> complex:
    val = _sinpi(x)
    if abs(val) < 1e-12:
        raise TrigPole(f"sin(pi*{what}) vanishes")
    return val


def thomae_terms(a: Sequence, j: int, **kw) -> tuple[complex, complex, complex]:
    """(lhs, first, second) of the two-term relation for exp(-i pi s) y_0^(inf)."""
    if j not in (1, 2):
        raise ValueError("j must be 1 or 2")
    pt = as_point(a)
    a0, a1, a2, b1, b2 = pt
    bj, bk = (b1, b2) if j == 1 else (b2, b1)
    den = _trig_den(bj, f"b{j}") * _trig_den(bk - a0, f"(b{3 - j} - a0)")
    lhs = cmath.exp(-1j * math.pi * saalschutz_value(pt)) * companion(0, "inf", pt, **kw)
    first = _sinpi(a1) * _sinpi(a2) / den * companion(0, "0", pt, **kw)
    second = _sinpi(a1 - bj) * _sinpi(a2 - bj) / den * companion(j, "0", pt, **kw)
    return lhs, first, second


def verify_thomae(a: Sequence, j: int, **kw) -> float:
    """Relative residual of the Thomae-type two-term relation with index j."""
    lhs, first, second = thomae_terms(a, j, **kw)
    scale = max(abs(lhs), abs(first), abs(second))
    return abs(lhs - first + second) / scale


def trig_coefficient(a: Sequence) -> complex:
    """c(a) = sin(pi a0) sin(pi a1) sin(pi a2) / (sin(pi b1) sin(pi b2))."""
    a0, a1, a2, b1, b2 = as_point(a)
    return _sinpi(a0) * _sinpi(a1) * _sinpi(a2) / (_trig_den(b1, "b1") * _trig_den(b2, "b2"))


def trig_coefficients(a: Sequence) -> tuple[complex, complex, complex]:
    """c_i(a) = c(sigma_i^(0)(a)) for i = 0, 1, 2."""
    pt = as_point(a)
    return tuple(trig_coefficient(companion_map(i, False)(pt)) for i in range(3))


def verify_trig_relation(a: Sequence, coefficient_point: Sequence | None = None, **kw) -> float:
    """Relative residual of c_0 y_0^(0) + c_1 y_1^(0) + c_2 y_2^(0) = 0.

    The coefficients may be taken at a different point (for example a + 2 e_0)
    to exercise their periodicity.
    """
    pt = as_point(a)
    cs = trig_coefficients(pt if coefficient_point is None else coefficient_point)
    terms = [c * companion(i, "0", pt, **kw) for i, c in enumerate(cs)]
    return abs(sum(terms)) / max(abs(t) for t in terms)
