"""Contiguous matrices A_i^{+-}(a) of 3F2(1) and their determinants.

The vector (h(a), h(a + 1)) with 1 = (1,1,1;1,1) is carried to
(h(a + eps*e_i), h(a + eps*e_i + 1)) by A_i^eps(a), for any of the six
companion functions h.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .matrix import Matrix2
from .polyrat import NVARS, Polynomial, RationalFunction, gens

ZERO = (0, 0, 0, 0, 0)
ONE = (1, 1, 1, 1, 1)
TWO = (2, 2, 2, 2, 2)


def unit(i: int, sign: int = 1) -> tuple[int, ...]:
    v = [0] * NVARS
    v[i] = sign
    return tuple(v)


def as_sign(sign) -> int:
    if sign in (1, "+", "+1"):
        return 1
    if sign in (-1, "-", "-1"):
        return -1
    raise ValueError(f"sign must be + or -, got {sign!r}")


def params(shift: Sequence[int] = ZERO) -> tuple[Polynomial, ...]:
    """The symbols a0..a4 translated by an integer vector."""
    return tuple(x + v for x, v in zip(gens(), shift))


def saalschutz(a: Sequence[Polynomial] | None = None) -> Polynomial:
    """s(a) = b1 + b2 - a0 - a1 - a2."""
    a0, a1, a2, a3, a4 = a if a is not None else gens()
    return a3 + a4 - a0 - a1 - a2


def phi(k: int, a: Sequence[Polynomial] | None = None) -> Polynomial:
    """Elementary symmetric polynomial of degree k in the numerator parameters."""
    a0, a1, a2 = (a if a is not None else gens())[:3]
    if k == 1:
        return a0 + a1 + a2
    if k == 2:
        return a0 * a1 + a1 * a2 + a2 * a0
    if k == 3:
        return a0 * a1 * a2
    raise ValueError("k must be 1, 2 or 3")


def psi(a: Sequence[Polynomial] | None = None) -> Polynomial:
    a = a if a is not None else gens()
    return a[3] * a[4] - phi(2, a) - phi(1, a) - 1


def _others(i: int) -> tuple[int, int]:
    j, k = (x for x in (0, 1, 2) if x != i)
    return j, k


def _entries(i: int, sign: int, a: Sequence[Polynomial]):
    F = RationalFunction.from_factors
    a0, a1, a2, a3, a4 = a
    s = saalschutz(a)
    ai = a[i]
    one = RationalFunction(1)
    if i < 3:
        j, k = _others(i)
        ajk = a[j] * a[k]
        if sign > 0:
            return (
                (RationalFunction(ai), one),
                (F(phi(3, a), [s - 2]), F(ajk - (ai - a3 + 1) * (ai - a4 + 1), [s - 2])),
            )
        d3 = [ai - 1, ai - a3, ai - a4]
        d2 = [ai - a3, ai - a4]
        return (
            (F((ai - a3) * (ai - a4) - ajk, d3), F(s - 1, d3)),
            (F(ajk, d2), F(-(s - 1), d2)),
        )
    if sign > 0:
        d = [ai - a0, ai - a1, ai - a2]
        return (
            (F(ai * ai - phi(1, a) * ai + phi(2, a), d), F(-(s - 1), d)),
            (F(-phi(3, a), d), F(ai * (s - 1), d)),
        )
    am = ai - 1
    return (
        (RationalFunction(am), one),
        (F(phi(3, a), [s - 2]), F(am * am - phi(1, a) * am + phi(2, a), [s - 2])),
    )


@dataclass(frozen=True, eq=False)
class ContiguousMatrix:
    mat: Matrix2
    direction: int
    sign: int

    def det(self) -> RationalFunction:
        return self.mat.det()

    def to_json(self) -> dict:
        return {"direction": self.direction, "sign": "+" if self.sign > 0 else "-", "matrix": self.mat.to_json()}

    def to_latex(self) -> str:
        return f"A_{{{self.direction}}}^{{{'+' if self.sign > 0 else '-'}}}(a) = " + self.mat.to_latex()


@lru_cache(maxsize=4096)
def _cached(i: int, sign: int, shift: tuple[int, ...]) -> Matrix2:
    return Matrix2(_entries(i, sign, params(shift)))


def contiguous_matrix(i: int, sign, shift: Sequence[int] = ZERO) -> ContiguousMatrix:
    """A_i^sign(a + shift), built directly from the translated symbols."""
    if i not in range(NVARS):
        raise ValueError(f"direction must be in 0..4, got {i}")
    sign = as_sign(sign)
    return ContiguousMatrix(_cached(i, sign, tuple(int(x) for x in shift)), i, sign)


def contiguous_det(i: int, sign) -> RationalFunction:
    """Closed-form determinant of A_i^sign(a)."""
    sign = as_sign(sign)
    a0, a1, a2, a3, a4 = a = gens()
    s = saalschutz()
    ai = a[i]
    F = RationalFunction.from_factors
    if i < 3 and sign > 0:
        return F(-(ai * (ai - a3 + 1) * (ai - a4 + 1)), [s - 2])
    if i >= 3 and sign > 0:
        return F(s - 1, [ai - a0, ai - a1, ai - a2])
    if i < 3:
        return F(-(s - 1), [ai - 1, ai - a3, ai - a4])
    return F((ai - a0 - 1) * (ai - a1 - 1) * (ai - a2 - 1), [s - 2])


def check_compatibility(i: int, j: int, sign_i, sign_j) -> bool:
    """A_i(a + e_j*sj) A_j(a) == A_j(a + e_i*si) A_i(a) over Q(a)."""
    si, sj = as_sign(sign_i), as_sign(sign_j)
    lhs = contiguous_matrix(i, si, unit(j, sj)).mat @ contiguous_matrix(j, sj).mat
    rhs = contiguous_matrix(j, sj, unit(i, si)).mat @ contiguous_matrix(i, si).mat
    return lhs.equals(rhs)


def check_inverse(i: int, sign) -> bool:
    """A_i^{-eps}(a + eps e_i) A_i^{eps}(a) == I: a step and its reverse cancel."""
    eps = as_sign(sign)
    back = contiguous_matrix(i, -eps, unit(i, eps)).mat
    return (back @ contiguous_matrix(i, eps).mat).is_identity()
