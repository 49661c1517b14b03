"""2x2 matrices over Q(a)."""
from __future__ import annotations

from typing import Sequence

from .polyrat import Polynomial, RationalFunction


class Matrix2:
    __slots__ = ("rows",)

    def __init__(self, rows):
        (a, b), (c, d) = rows
        co = RationalFunction.coerce
        self.rows = ((co(a), co(b)), (co(c), co(d)))

    @classmethod
    def identity(cls) -> Matrix2:
        return cls(((1, 0), (0, 1)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __matmul__(self, other: Matrix2) -> Matrix2:
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        # products are left unreduced; cancellation happens once per entry on the sum
        def dot(x, y, z, w):
            return x._mul(y, cancel=False)._add(z._mul(w, cancel=False))

        return Matrix2(((dot(a, e, b, g), dot(a, f, b, h)), (dot(c, e, d, g), dot(c, f, d, h))))

    def __mul__(self, other):
        if isinstance(other, Matrix2):
            return self @ other
        s = RationalFunction.coerce(other)
        return Matrix2(tuple(tuple(x * s for x in row) for row in self.rows))

    __rmul__ = __mul__

    def det(self) -> RationalFunction:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def inverse(self) -> Matrix2:
        (a, b), (c, d) = self.rows
        det = self.det()
        if det.is_zero():
            raise ZeroDivisionError("singular matrix")
        inv = det.inverse()
        return Matrix2(((d * inv, -b * inv), (-c * inv, a * inv)))

    def __pow__(self, n: int) -> Matrix2:
        if n < 0:
            return self.inverse() ** (-n)
        out = Matrix2.identity()
        for _ in range(n):
            out = out @ self
        return out

    def shift(self, v: Sequence[int]) -> Matrix2:
        return Matrix2(tuple(tuple(x.shift(v) for x in row) for row in self.rows))

    def substitute(self, images: Sequence[Polynomial]) -> Matrix2:
        return Matrix2(tuple(tuple(x.substitute(images) for x in row) for row in self.rows))

    def evaluate(self, point):
        return tuple(tuple(x.evaluate(point) for x in row) for row in self.rows)

    def numbers(self):
        """Entries as exact Fractions; only for matrices with constant entries."""
        out = []
        for row in self.rows:
            vals = []
            for x in row:
                if not x.is_polynomial() or not x.num.is_constant():
                    raise ValueError("matrix entries are not constants")
                vals.append(x.num.constant_value())
            out.append(tuple(vals))
        return tuple(out)

    def equals(self, other: Matrix2) -> bool:
        return all(x.equals(y) for r1, r2 in zip(self.rows, other.rows) for x, y in zip(r1, r2))

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def is_identity(self) -> bool:
        return self.equals(Matrix2.identity())

    def is_lower_triangular(self) -> bool:
        return self.rows[0][1].is_zero()

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.rows]

    def to_latex(self) -> str:
        body = r" \\ ".join(" & ".join(x.to_latex() for x in row) for row in self.rows)
        return rf"\begin{{pmatrix}} {body} \end{{pmatrix}}"

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows) + "]"

    def __repr__(self) -> str:
        return f"Matrix2({self})"
