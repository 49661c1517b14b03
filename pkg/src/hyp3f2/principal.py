"""Principal parts B_i(a) of the contiguous matrices and their specializations.

Under a -> t*a the contiguous matrices, conjugated by D(t) = diag(1, t) and
rescaled by a power of t, tend to B_i(a)^{+-1}.  The B_i commute, so the
leading part of A(t*a; p) is the plain product B_0^p0 ... B_4^p4.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .connection import ShiftVector, connection_matrix
from .contiguous import phi, saalschutz
from .errors import DenominatorVanishes, SingularSpecialization
from .matrix import Matrix2
from .polyrat import NVARS, Polynomial, RationalFunction, gens

Q2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


@dataclass(frozen=True, eq=False)
class PrincipalMatrix:
    mat: Matrix2
    index: int

    def det(self) -> RationalFunction:
        return self.mat.det()

    def at(self, point: Sequence) -> Q2:
        return _evaluate_good(self.mat, point)

    def to_json(self) -> dict:
        return {"index": self.index, "matrix": self.mat.to_json()}

    def to_latex(self) -> str:
        return f"B_{{{self.index}}}(a) = " + self.mat.to_latex()


def _principal_rows(i: int):
    F = RationalFunction.from_factors
    a = gens()
    a0, a1, a2, a3, a4 = a
    s = saalschutz(a)
    ai = a[i]
    if i < 3:
        j, k = (x for x in (0, 1, 2) if x != i)
        return (
            (ai, 1),
            (F(phi(3, a), [s]), F(a[j] * a[k] - (ai - a3) * (ai - a4), [s])),
        )
    d = [ai - a0, ai - a1, ai - a2]
    return (
        (F(ai * ai - phi(1, a) * ai + phi(2, a), d), F(-s, d)),
        (F(-phi(3, a), d), F(ai * s, d)),
    )


def principal_matrix(i: int) -> PrincipalMatrix:
    if i not in range(NVARS):
        raise ValueError(f"index must be in 0..4, got {i}")
    return PrincipalMatrix(Matrix2(_principal_rows(i)), i)


def principal_det(i: int) -> RationalFunction:
    """Closed-form determinant of B_i(a)."""
    a = gens()
    a0, a1, a2, a3, a4 = a
    s = saalschutz(a)
    ai = a[i]
    if i < 3:
        return RationalFunction.from_factors(-(ai * (ai - a3) * (ai - a4)), [s])
    return RationalFunction.from_factors(s, [ai - a0, ai - a1, ai - a2])


def goodness(point: Sequence) -> Fraction:
    """a0 a1 a2 s(a) prod_{i=3,4; j=0,1,2} (a_i - a_j); nonzero iff the point is good."""
    a = [Fraction(x) for x in point]
    val = a[0] * a[1] * a[2] * (a[3] + a[4] - a[0] - a[1] - a[2])
    for i in (3, 4):
        for j in (0, 1, 2):
            val *= a[i] - a[j]
    return val


def is_good(point: Sequence) -> bool:
    return goodness(point) != 0


def _evaluate_good(m: Matrix2, point: Sequence) -> Q2:
    if not is_good(point):
        raise SingularSpecialization(f"principal parts are singular or undefined at {tuple(point)}")
    try:
        return m.evaluate(point)
    except DenominatorVanishes as exc:
        raise SingularSpecialization(str(exc)) from None


# -- exact 2x2 arithmetic over Q ---------------------------------------------


def qmul(x: Q2, y: Q2) -> Q2:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def qinv(x: Q2) -> Q2:
    (a, b), (c, d) = x
    det = a * d - b * c
    if det == 0:
        raise SingularSpecialization("singular matrix")
    return ((d / det, -b / det), (-c / det, a / det))


def qpow(x: Q2, n: int) -> Q2:
    if n < 0:
        x, n = qinv(x), -n
    out: Q2 = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    for _ in range(n):
        out = qmul(out, x)
    return out


def qdiag(x: Q2) -> bool:
    return x[0][1] == 0 and x[1][0] == 0


def conjugate(p_mat: Q2, m: Q2) -> Q2:
    """P^{-1} M P."""
    return qmul(qmul(qinv(p_mat), m), p_mat)


def as_q2(rows) -> Q2:
    (a, b), (c, d) = rows
    return ((Fraction(a), Fraction(b)), (Fraction(c), Fraction(d)))


# -- products -----------------------------------------------------------------


def principal_product(p, point: Sequence | None = None, order: Sequence[int] = (0, 1, 2, 3, 4)):
    """B(a;p) = B_0^p0 B_1^p1 B_2^p2 B_3^p3 B_4^p4.

    Symbolic (a Matrix2 over Q(a)) when no point is given; otherwise an exact
    2x2 tuple of Fractions at a good rational point.  ``order`` permutes the
    factors, which commute.
    """
    p = ShiftVector.coerce(p)
    if point is None:
        out = Matrix2.identity()
        for i in order:
            if p[i]:
                out = out @ principal_matrix(i).mat ** p[i]
        return out
    mats = [principal_matrix(i).at(point) for i in range(NVARS)]
    res: Q2 = qpow(mats[0], 0)
    for i in order:
        if p[i]:
            res = qmul(res, qpow(mats[i], p[i]))
    return res


def check_commutativity(i: int, j: int) -> bool:
    bi, bj = principal_matrix(i).mat, principal_matrix(j).mat
    return (bi @ bj).equals(bj @ bi)


def check_reordering(p, point: Sequence) -> bool:
    """Every ordering of the five factors gives the same matrix at a point."""
    first = principal_product(p, point)
    return all(principal_product(p, point, order) == first for order in permutations(range(NVARS)))


def laurent_errors(p, a_point: Sequence, t_values: Sequence) -> list[Fraction]:
    """max-entry norm of t^s(p) D(t)^-1 A(t a; p) D(t) - B(a; p) for each t."""
    p = ShiftVector.coerce(p)
    a = [Fraction(x) for x in a_point]
    b = principal_product(p, a)
    conn = connection_matrix(p)
    sp = p.saalschutz_index()
    out = []
    for t in t_values:
        t = Fraction(t)
        try:
            (m00, m01), (m10, m11) = conn.evaluate([t * x for x in a])
        except DenominatorVanishes as exc:
            raise SingularSpecialization(f"t*a is not generic for t={t}: {exc}") from None
        scale = t**sp
        e = (
            scale * m00 - b[0][0],
            scale * t * m01 - b[0][1],
            scale * m10 / t - b[1][0],
            scale * m11 - b[1][1],
        )
        out.append(max(abs(x) for x in e))
    return out


def verify_laurent_limit(p, a_point: Sequence, t_values: Sequence, slack: float = 1.5) -> bool:
    """Check the O(1/t) decay of the Laurent remainder along increasing t.

    For consecutive t < t', the error must satisfy
    |E(t')| <= slack * (t/t') * |E(t)|; identically zero errors pass.
    """
    ts = [Fraction(t) for t in t_values]
    if any(t2 <= t1 for t1, t2 in zip(ts, ts[1:])):
        raise ValueError("t values must be strictly increasing")
    errs = laurent_errors(p, a_point, ts)
    for (t1, e1), (t2, e2) in zip(zip(ts, errs), zip(ts[1:], errs[1:])):
        if e1 == 0:
            if e2 != 0:
                return False
            continue
        if e2 > Fraction(slack) * (t1 / t2) * e1:
            return False
    return True


# -- specialization a0 = a1 = a2 = 0 --------------------------------------------


def hat_principal(i: int) -> Matrix2:
    """B_i with a0 = a1 = a2 = 0, a matrix over Q(a3, a4)."""
    if i not in range(NVARS):
        raise ValueError(f"index must be in 0..4, got {i}")
    _, _, _, a3, a4 = gens()
    F = RationalFunction.from_factors
    if i < 3:
        return Matrix2(((0, 1), (0, F(-(a3 * a4), [a3 + a4]))))
    ai = gens()[i]
    return Matrix2(((F(1, [ai]), F(-(a3 + a4), [ai, ai, ai])), (0, F(a3 + a4, [ai, ai]))))


def hat_principal_product(p, point: Sequence | None = None):
    """hat B_0^p0 ... hat B_4^p4 for p in Z_{>=0}^3 x Z^2.

    hat B_0 = hat B_1 = hat B_2 is singular, so negative numerator shifts are
    rejected.  With ``point = (a3, a4)`` the result is an exact 2x2 tuple.
    """
    p = ShiftVector.coerce(p)
    if min(p[0], p[1], p[2]) < 0:
        raise ValueError("hat principal parts need p0, p1, p2 >= 0")
    if point is None:
        out = Matrix2.identity()
        for i in range(NVARS):
            if p[i]:
                out = out @ hat_principal(i) ** p[i]
        return out
    a3, a4 = (Fraction(x) for x in point)
    if a3 * a4 * (a3 + a4) == 0:
        raise SingularSpecialization("need a3 * a4 * (a3 + a4) != 0")
    full = (Fraction(0), Fraction(0), Fraction(0), a3, a4)
    res: Q2 = qpow(hat_principal(0).evaluate(full), 0)
    for i in range(NVARS):
        if p[i]:
            res = qmul(res, qpow(hat_principal(i).evaluate(full), p[i]))
    return res


def specialize_numerators(m: Matrix2) -> Matrix2:
    """Substitute a0 = a1 = a2 = 0 into a matrix over Q(a)."""
    _, _, _, a3, a4 = gens()
    zero = Polynomial.constant(0)
    return m.substitute([zero, zero, zero, a3, a4])
