"""Connection matrices A(a;p) along lattice paths and the three-term coefficients.

For any companion h, h(a + p) = r1(a;p) h(a) + r(a;p) h(a + 1), where
(r1, r) is the upper row of A(a;p).  Eliminating h(a + 1) between the
rows for two shifts p != q yields h(a) = u(a) h(a + p) + v(a) h(a + q).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .contiguous import contiguous_matrix, params, saalschutz
from .errors import DegenerateShifts
from .matrix import Matrix2
from .polyrat import NVARS, RationalFunction, pochhammer_symbolic

Step = tuple[int, int]


@dataclass(frozen=True)
class ShiftVector:
    """An integer vector (p0, p1, p2; p3, p4) of parameter shifts."""

    p: tuple[int, ...]

    def __init__(self, p: Iterable[int]):
        p = tuple(p)
        if len(p) != NVARS:
            raise ValueError(f"a shift vector has {NVARS} components, got {len(p)}")
        for x in p:
            if isinstance(x, bool) or int(x) != x:
                raise ValueError(f"shift components must be integers, got {x!r}")
        object.__setattr__(self, "p", tuple(int(x) for x in p))

    @classmethod
    def coerce(cls, p) -> ShiftVector:
        return p if isinstance(p, ShiftVector) else cls(p)

    @classmethod
    def parse(cls, text: str) -> ShiftVector:
        """Parse '1,1,1,2,1' (optionally with a ';' between p2 and p3)."""
        parts = text.replace(";", ",").split(",")
        try:
            return cls(int(x) for x in parts)
        except ValueError as exc:
            raise ValueError(f"bad shift vector {text!r}: {exc}") from None

    def saalschutz_index(self) -> int:
        p0, p1, p2, p3, p4 = self.p
        return p3 + p4 - p0 - p1 - p2

    def __iter__(self):
        return iter(self.p)

    def __getitem__(self, i):
        return self.p[i]

    def __len__(self):
        return NVARS

    def __add__(self, other) -> ShiftVector:
        return ShiftVector(x + y for x, y in zip(self.p, ShiftVector.coerce(other).p))

    def __sub__(self, other) -> ShiftVector:
        return ShiftVector(x - y for x, y in zip(self.p, ShiftVector.coerce(other).p))

    def __neg__(self) -> ShiftVector:
        return ShiftVector(-x for x in self.p)

    def is_zero(self) -> bool:
        return not any(self.p)

    def __str__(self) -> str:
        p = self.p
        return f"({p[0]},{p[1]},{p[2]};{p[3]},{p[4]})"


def saalschutz_index(p) -> int:
    return ShiftVector.coerce(p).saalschutz_index()


def lattice_path(p) -> list[Step]:
    """Canonical path from 0 to p: coordinate 0 first, then 1, ..., 4, unit steps."""
    steps: list[Step] = []
    for i, x in enumerate(ShiftVector.coerce(p)):
        sign = 1 if x > 0 else -1
        steps.extend([(i, sign)] * abs(x))
    return steps


def path_endpoint(path: Iterable[Step]) -> tuple[int, ...]:
    end = [0] * NVARS
    for i, sign in path:
        end[i] += sign
    return tuple(end)


def path_product(path: Iterable[Step]) -> Matrix2:
    """A_{i_m}(a + p_{m-1}) ... A_{i_1}(a + p_0) along an arbitrary path, uncached."""
    out = Matrix2.identity()
    cur = [0] * NVARS
    for i, sign in path:
        out = contiguous_matrix(i, sign, tuple(cur)).mat @ out
        cur[i] += sign
    return out


@lru_cache(maxsize=512)
def _canonical(p: tuple[int, ...]) -> Matrix2:
    # the canonical path of p minus its last step is the canonical path of that prefix
    if not any(p):
        return Matrix2.identity()
    last = max(i for i in range(NVARS) if p[i])
    sign = 1 if p[last] > 0 else -1
    prev = list(p)
    prev[last] -= sign
    return contiguous_matrix(last, sign, tuple(prev)).mat @ _canonical(tuple(prev))


def connection_matrix(p, path: Sequence[Step] | None = None) -> Matrix2:
    """A(a;p), along the canonical path unless an explicit path to p is given."""
    p = ShiftVector.coerce(p)
    if path is None:
        return _canonical(p.p)
    if path_endpoint(path) != p.p:
        raise ValueError(f"path ends at {path_endpoint(path)}, not at {p.p}")
    return path_product(path)


def connection_det_formula(p) -> RationalFunction:
    """Closed form of det A(a;p) as a product of Pochhammer symbols."""
    p = ShiftVector.coerce(p)
    a = params()
    out = pochhammer_symbolic(saalschutz(a) - 1, p.saalschutz_index())
    for i in range(3):
        out = out * pochhammer_symbolic(a[i], p[i])
        for j in (3, 4):
            out = out / pochhammer_symbolic(a[j] - a[i], p[j] - p[i])
    if (p[0] + p[1] + p[2]) % 2:
        out = -out
    return out


def upper_row(p) -> tuple[RationalFunction, RationalFunction]:
    """(r1, r) with h(a + p) = r1 h(a) + r h(a + 1)."""
    m = connection_matrix(p)
    return m[0, 0], m[0, 1]


@dataclass(frozen=True, eq=False)
class ThreeTermRelation:
    """h(a) = u(a) h(a + p) + v(a) h(a + q), for all six companions h."""

    p: ShiftVector
    q: ShiftVector
    u: RationalFunction
    v: RationalFunction

    def coefficients_at(self, point):
        return self.u.evaluate(point), self.v.evaluate(point)

    def to_json(self) -> dict:
        return {"p": list(self.p), "q": list(self.q), "u": self.u.to_json(), "v": self.v.to_json()}

    def to_latex(self) -> str:
        def shifted(s: ShiftVector) -> str:
            if s.is_zero():
                return "h(a)"
            return rf"h\left(a + ({s[0]},{s[1]},{s[2]};{s[3]},{s[4]})\right)"

        return (
            f"h(a) = \\left({self.u.to_latex()}\\right) {shifted(self.p)}"
            f" + \\left({self.v.to_latex()}\\right) {shifted(self.q)}"
        )

    def __str__(self) -> str:
        return f"h(a) = u(a) h(a+{self.p}) + v(a) h(a+{self.q})\nu = {self.u}\nv = {self.v}"


def three_term_coefficients(p, q) -> ThreeTermRelation:
    """The unique u, v in Q(a) with h(a) = u h(a + p) + v h(a + q).

    Only the upper rows of A(a;p) and A(a;q) are needed; the determinant
    r1(p) r(q) - r(p) r1(q) is expanded from them directly.
    """
    p, q = ShiftVector.coerce(p), ShiftVector.coerce(q)
    if p == q:
        raise DegenerateShifts(f"shift vectors coincide: {p}")
    _, rp = upper_row(p)
    _, rq = upper_row(q)
    delta = relation_determinant(p, q)
    if delta.is_zero():
        raise ArithmeticError(f"vanishing determinant for p={p}, q={q}")
    inv = delta.inverse()
    return ThreeTermRelation(p, q, rq * inv, -rp * inv)


def relation_determinant(p, q) -> RationalFunction:
    """r1(a;p) r(a;q) - r(a;p) r1(a;q), expanded directly from the two upper rows."""
    r1p, rp = upper_row(p)
    r1q, rq = upper_row(q)
    return r1p * rq - rp * r1q


def verify_chain_rule(p, q) -> bool:
    """A(a;q) = A(a + p; q - p) A(a;p), and the factored determinant identity."""
    p, q = ShiftVector.coerce(p), ShiftVector.coerce(q)
    step = connection_matrix(q - p).shift(p.p)
    if not (step @ connection_matrix(p)).equals(connection_matrix(q)):
        return False
    factored = connection_det_formula(p) * upper_row(q - p)[1].shift(p.p)
    return relation_determinant(p, q).equals(factored)
