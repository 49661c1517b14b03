"""Exact sparse polynomials and rational functions in the parameters a0..a4.

Polynomial arithmetic is delegated to FLINT's ``fmpq_mpoly`` (lex order,
a0 > a1 > ... > a4).  A :class:`RationalFunction` keeps its denominator as a
multiset of normalized polynomial "atoms".  Denominators met in
contiguous-matrix products are products of affine linear forms, so
lcm-on-add plus trial division by each atom keeps entries in lowest terms
without a multivariate gcd.  Equality is decided by cross-multiplication.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from numbers import Complex, Rational
from typing import Iterable, Mapping, Sequence

import flint
from flint.utils.flint_exceptions import DomainError

from .errors import DenominatorVanishes

NVARS = 5
VAR_NAMES = ("a0", "a1", "a2", "a3", "a4")
# exponents must fit an unsigned machine word in the backend
MAX_EXPONENT = (1 << 63) - 1

_CTX = flint.fmpq_mpoly_ctx.get(VAR_NAMES, "lex")
_GENS = _CTX.gens()
_ZERO = _CTX.from_dict({})


def _to_fraction(c) -> Fraction:
    if isinstance(c, flint.fmpq):
        return Fraction(int(c.p), int(c.q))
    return Fraction(c)


def _to_fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, bool):
        c = int(c)
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, Rational):
        return flint.fmpq(int(c.numerator), int(c.denominator))
    if isinstance(c, float):
        raise TypeError("floating coefficients are not allowed in exact polynomials")
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _check_exps(exps: Sequence[int]) -> tuple[int, ...]:
    if len(exps) != NVARS:
        raise ValueError(f"expected {NVARS} exponents, got {len(exps)}")
    out = tuple(int(e) for e in exps)
    for e in out:
        if e < 0:
            raise ValueError("negative exponent")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds the machine-word bound")
    return out


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    ``Polynomial({(1, 0, 0, 0, 0): 2, (0, 0, 0, 0, 0): -1})`` is ``2*a0 - 1``.
    """

    __slots__ = ("_p", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None):
        d: dict[tuple[int, ...], flint.fmpq] = {}
        for exps, c in (terms or {}).items():
            k = _check_exps(exps)
            d[k] = d.get(k, flint.fmpq(0)) + _to_fmpq(c)
        self._p = _CTX.from_dict({k: v for k, v in d.items() if v != 0})
        self._hash = None

    @classmethod
    def _raw(cls, p) -> Polynomial:
        obj = cls.__new__(cls)
        obj._p = p
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls._raw(_CTX.constant(_to_fmpq(c)))

    @classmethod
    def var(cls, i: int) -> Polynomial:
        return cls._raw(_GENS[i])

    @classmethod
    def coerce(cls, x) -> Polynomial:
        if isinstance(x, Polynomial):
            return x
        return cls.constant(x)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {tuple(int(x) for x in e): _to_fraction(c) for e, c in self._p.terms()}

    def __len__(self) -> int:
        return len(self._p)

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        if self._p.is_zero():
            return Fraction(0)
        return _to_fraction(self._p.leading_coefficient())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._p.is_zero():
            return -1
        return int(self._p.total_degree())

    def degree_in(self, i: int) -> int:
        if self._p.is_zero():
            return -1
        return int(self._p.degrees()[i])

    def is_linear(self) -> bool:
        return self.degree() == 1

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        e, c = next(iter(self._p.terms()))
        return tuple(e), _to_fraction(c)

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        g, lcm = flint.fmpz(0), flint.fmpz(1)
        for c in self._p.coeffs():
            g = g.gcd(c.p)
            lcm = lcm.lcm(c.q)
        return Fraction(int(g), int(lcm))

    def primitive(self) -> tuple[Fraction, Polynomial]:
        """Split into (c, P): P integral with content 1 and positive leading coefficient."""
        if self._p.is_zero():
            return Fraction(0), self
        c = self.content()
        if self._p.leading_coefficient() < 0:
            c = -c
        if c == 1:
            return c, self
        return c, Polynomial._raw(self._p / _to_fmpq(c))

    def monomial_content(self) -> tuple[int, ...]:
        """Exponents of the largest monomial dividing every term."""
        if self._p.is_zero():
            return (0,) * NVARS
        mins = None
        for e in self._p.monoms():
            mins = list(e) if mins is None else [min(x, y) for x, y in zip(mins, e)]
        return tuple(int(x) for x in mins)

    # -- ring operations --------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == _CTX.constant(_to_fmpq(other))
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple((tuple(e), int(c.p), int(c.q)) for e, c in self._p.terms()))
        return self._hash

    def __bool__(self) -> bool:
        return not self._p.is_zero()

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(-self._p)

    def __pos__(self) -> Polynomial:
        return self

    def _other(self, other):
        if isinstance(other, Polynomial):
            return other._p
        if isinstance(other, (RationalFunction, float, complex)):
            return None
        try:
            return _CTX.constant(_to_fmpq(other))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(self._p - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(o - self._p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(self._p * o)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        return Polynomial._raw(self._p * _to_fmpq(c))

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        if n and self.degree() * n > MAX_EXPONENT:
            raise OverflowError("power exceeds the machine-word exponent bound")
        return Polynomial._raw(self._p**n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / Fraction(other))
        return RationalFunction(self) / other

    def __rtruediv__(self, other):
        return RationalFunction(other) / RationalFunction(self)

    def divexact(self, f: Polynomial) -> Polynomial | None:
        """Quotient self/f if f divides self exactly, else None."""
        if f.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        try:
            return Polynomial._raw(self._p / f._p)
        except DomainError:
            return None

    # -- substitution and evaluation --------------------------------------

    def shift(self, v: Sequence[int]) -> Polynomial:
        """P(a + v) for an integer (or rational) vector v."""
        if not any(v):
            return self
        return Polynomial._raw(self._p.compose(*(g + _to_fmpq(x) for g, x in zip(_GENS, v))))

    def substitute(self, images: Sequence) -> Polynomial:
        """P(images[0], ..., images[4]) for polynomial (or scalar) images."""
        if len(images) != NVARS:
            raise ValueError(f"need {NVARS} images")
        imgs = [Polynomial.coerce(x)._p for x in images]
        return Polynomial._raw(self._p.compose(*imgs))

    def evaluate(self, point: Sequence):
        """Value at a point: exact Fraction for rational input, complex otherwise."""
        vals, scale, exact = _eval_gaussian([self], point)
        nr, ni = vals[0]
        if exact:
            return Fraction(nr, scale)
        return complex(float(Fraction(nr, scale)), float(Fraction(ni, scale)))

    def evaluate_rational(self, point: Sequence) -> Fraction:
        return _to_fraction(self._p(*(_to_fmpq(x) for x in point)))

    # -- output -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in ascending lexicographic order of exponent vectors."""
        return sorted((tuple(int(x) for x in e), _to_fraction(c)) for e, c in self._p.terms())

    def to_json(self) -> list[dict]:
        return [{"coeff": _coeff_str(c), "exp": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> Polynomial:
        return cls({tuple(t["exp"]): Fraction(t["coeff"].lstrip("+")) for t in data})

    def __str__(self) -> str:
        return _render(self, latex=False)

    def to_latex(self) -> str:
        return _render(self, latex=True)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _coeff_str(c: Fraction) -> str:
    sign = "-" if c < 0 else "+"
    c = abs(c)
    return f"{sign}{c.numerator}/{c.denominator}"


def _render(p: Polynomial, latex: bool) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in reversed(p.sorted_terms()):
        if latex:
            mono = " ".join(
                f"a_{{{i}}}" + (f"^{{{e}}}" if e > 1 else "") for i, e in enumerate(exps) if e
            )
        else:
            mono = "*".join(VAR_NAMES[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        else:
            if latex and mag.denominator != 1:
                cs = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                cs = str(mag)
            body = cs + ((" " if latex else "*") + mono if mono else "")
        parts.append((c < 0, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _as_exact(x) -> tuple[Fraction, Fraction, bool]:
    if isinstance(x, (int, Fraction, flint.fmpq)) or isinstance(x, Rational):
        return _to_fraction(x), Fraction(0), True
    if isinstance(x, Complex):
        z = complex(x)
        return Fraction(z.real), Fraction(z.imag), False
    raise TypeError(f"cannot evaluate at {x!r}")


def _eval_gaussian(polys: Sequence[Polynomial], point: Sequence):
    """Evaluate polynomials exactly at a point of Q(i)^5.

    Floats are converted exactly, so a complex result is the correctly
    rounded value of the polynomial at the binary point given.  Returns
    ([(re, im)] integer pairs, common scale, exact) with each value equal to
    (re + i*im) / scale.
    """
    if len(point) != NVARS:
        raise ValueError(f"need a {NVARS}-component point")
    coords = [_as_exact(x) for x in point]
    exact = all(c[2] for c in coords)
    d = 1
    for re, im, _ in coords:
        for q in (re, im):
            d = d * q.denominator // gcd(d, q.denominator)
    gcoords = [(int(re * d), int(im * d)) for re, im, _ in coords]
    deg = max([p.degree() for p in polys] + [0])
    maxdeg = [max([p.degree_in(i) for p in polys] + [0]) for i in range(NVARS)]
    pows = []
    for i, (xr, xi) in enumerate(gcoords):
        tab = [(1, 0)]
        for _ in range(maxdeg[i]):
            ar, ai = tab[-1]
            tab.append((ar * xr - ai * xi, ar * xi + ai * xr))
        pows.append(tab)
    dpow = [1]
    for _ in range(deg):
        dpow.append(dpow[-1] * d)
    raw = []
    lcm_den = 1
    for p in polys:
        sr, si = 0, 0
        cden = 1
        items = []
        for e, c in p._p.terms():
            cq = int(c.q)
            cden = cden * cq // gcd(cden, cq)
            items.append((e, int(c.p), cq))
        for e, cn, cq in items:
            vr, vi = 1, 0
            tot = 0
            for i in range(NVARS):
                ei = e[i]
                if ei:
                    tot += ei
                    pr, pi = pows[i][ei]
                    vr, vi = vr * pr - vi * pi, vr * pi + vi * pr
            f = cn * (cden // cq) * dpow[deg - tot]
            sr += vr * f
            si += vi * f
        raw.append((sr, si, cden))
        lcm_den = lcm_den * cden // gcd(lcm_den, cden)
    scale = dpow[deg] * lcm_den
    vals = [(sr * (lcm_den // cden), si * (lcm_den // cden)) for sr, si, cden in raw]
    return vals, scale, exact


def gens() -> tuple[Polynomial, ...]:
    """The five parameter symbols a0, a1, a2, a3 = b1, a4 = b2."""
    return tuple(Polynomial.var(i) for i in range(NVARS))


# ---------------------------------------------------------------------------
# rational functions


def _atom_sort_key(p: Polynomial):
    return (p.degree(), len(p), p.sorted_terms())


def _split_den(den: Polynomial) -> tuple[Fraction, dict[Polynomial, int]]:
    """Normalize a denominator into (constant, {atom: exponent}).

    Monomial factors are split off into single-variable atoms.
    """
    c, prim = den.primitive()
    atoms: dict[Polynomial, int] = {}
    mono = prim.monomial_content()
    if any(mono):
        m = Polynomial({mono: 1})
        prim = prim.divexact(m)
        for i, e in enumerate(mono):
            if e:
                atoms[Polynomial.var(i)] = e
    if not prim.is_constant():
        atoms[prim] = atoms.get(prim, 0) + 1
    return c, atoms


def _cancel(num: Polynomial, atoms: dict[Polynomial, int]) -> tuple[Polynomial, dict[Polynomial, int]]:
    out: dict[Polynomial, int] = {}
    for atom, e in atoms.items():
        while e > 0 and num.degree() >= atom.degree():
            q = num.divexact(atom)
            if q is None:
                break
            num = q
            e -= 1
        if e > 0:
            out[atom] = e
    return num, out


class RationalFunction:
    """Element of Q(a0, ..., a4) stored as ``const * num / prod(atom**e)``.

    ``num`` is integral with content 1 and positive leading coefficient;
    atoms are normalized the same way.  Construct with
    ``RationalFunction(num, den)`` from polynomials or scalars, or with
    :meth:`from_factors` to keep a factored denominator.
    """

    __slots__ = ("_c", "_num", "_atoms")

    def __init__(self, num=0, den=1):
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
            q = RationalFunction.coerce(num) / RationalFunction.coerce(den)
            self._c, self._num, self._atoms = q._c, q._num, q._atoms
            return
        num = Polynomial.coerce(num)
        den = Polynomial.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        cd, atoms = _split_den(den)
        self._set(Fraction(1) / cd, num, atoms)

    @classmethod
    def from_factors(cls, num, factors: Iterable) -> RationalFunction:
        """num / prod(factors), keeping each denominator factor as its own atom."""
        c = Fraction(1)
        atoms: dict[Polynomial, int] = {}
        for f in factors:
            f = Polynomial.coerce(f)
            if f.is_zero():
                raise ZeroDivisionError("zero factor in denominator")
            cf, fa = _split_den(f)
            c /= cf
            for a, e in fa.items():
                atoms[a] = atoms.get(a, 0) + e
        return cls._build(c, Polynomial.coerce(num), atoms)

    @classmethod
    def _build(cls, c, num: Polynomial, atoms: dict, cancel: bool = True) -> RationalFunction:
        obj = cls.__new__(cls)
        obj._set(c, num, atoms, cancel)
        return obj

    def _set(self, c, num: Polynomial, atoms: dict, cancel: bool = True):
        if num.is_zero() or c == 0:
            self._c, self._num, self._atoms = Fraction(0), Polynomial._raw(_ZERO), ()
            return
        cn, num = num.primitive()
        c = Fraction(c) * cn
        atoms = {a: e for a, e in atoms.items() if e}
        if cancel and atoms:
            num, atoms = _cancel(num, atoms)
        self._c = c
        self._num = num
        self._atoms = tuple(sorted(atoms.items(), key=lambda ae: _atom_sort_key(ae[0])))

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        return cls(x)

    # -- views ------------------------------------------------------------

    @property
    def num(self) -> Polynomial:
        return self._num.scale(self._c)

    @property
    def den(self) -> Polynomial:
        d = Polynomial.constant(1)
        for a, e in self._atoms:
            d = d * a**e
        return d

    @property
    def den_factors(self) -> tuple[tuple[Polynomial, int], ...]:
        return self._atoms

    def size(self) -> int:
        return len(self._num) + sum(len(a) for a, _ in self._atoms)

    def is_zero(self) -> bool:
        return self._c == 0

    def is_polynomial(self) -> bool:
        return not self._atoms

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> RationalFunction:
        obj = RationalFunction.__new__(RationalFunction)
        obj._c, obj._num, obj._atoms = -self._c, self._num, self._atoms
        return obj

    def __pos__(self):
        return self

    def _mul(self, other: RationalFunction, cancel: bool = True) -> RationalFunction:
        if self._c == 0 or other._c == 0:
            return RationalFunction()
        atoms = dict(self._atoms)
        for a, e in other._atoms:
            atoms[a] = atoms.get(a, 0) + e
        return RationalFunction._build(self._c * other._c, self._num * other._num, atoms, cancel)

    def _add(self, other: RationalFunction, cancel: bool = True) -> RationalFunction:
        if self._c == 0:
            return other
        if other._c == 0:
            return self
        a1, a2 = dict(self._atoms), dict(other._atoms)
        lcm = dict(a1)
        for a, e in a2.items():
            if e > lcm.get(a, 0):
                lcm[a] = e
        n1, n2 = self._num._p, other._num._p
        for a, e in lcm.items():
            x1, x2 = e - a1.get(a, 0), e - a2.get(a, 0)
            if x1:
                n1 = n1 * a._p**x1
            if x2:
                n2 = n2 * a._p**x2
        c1, c2 = self._c, other._c
        y1, y2 = c1.denominator, c2.denominator
        num = n1 * (c1.numerator * y2) + n2 * (c2.numerator * y1)
        return RationalFunction._build(Fraction(1, y1 * y2), Polynomial._raw(num), lcm, cancel)

    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self._add(-other)

    def __rsub__(self, other):
        return RationalFunction.coerce(other)._add(-self)

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self._mul(other)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self._c == 0:
            raise ZeroDivisionError("inverse of the zero rational function")
        num = Polynomial.constant(1)
        for a, e in self._atoms:
            num = num * a**e
        cd, atoms = _split_den(self._num)
        return RationalFunction._build(1 / (self._c * cd), num, atoms, cancel=False)

    def __truediv__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self._mul(other.inverse())

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other)._mul(self.inverse())

    def __pow__(self, n: int) -> RationalFunction:
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return RationalFunction(1)
        if self._c == 0:
            return self
        obj = RationalFunction.__new__(RationalFunction)
        obj._c = self._c**n
        obj._num = self._num**n
        obj._atoms = tuple((a, e * n) for a, e in self._atoms)
        return obj

    # -- equality ---------------------------------------------------------

    def _value_at(self, pt: Sequence[int]) -> Fraction | None:
        d = Fraction(1)
        for a, e in self._atoms:
            v = a.evaluate_rational(pt)
            if v == 0:
                return None
            d *= v**e
        return self._c * self._num.evaluate_rational(pt) / d

    def equals(self, other) -> bool:
        """Exact equality in Q(a).

        Differing values at a random integer point prove inequality; equality
        is decided by cross-multiplication after removing common atoms.
        """
        other = RationalFunction.coerce(other)
        if self._c == other._c and self._num == other._num and self._atoms == other._atoms:
            return True
        if self._c == 0 or other._c == 0:
            return False
        rng = random.Random(0xA11)
        pt = [rng.randrange(-10**6, 10**6) for _ in range(NVARS)]
        v1, v2 = self._value_at(pt), other._value_at(pt)
        if v1 is not None and v2 is not None and v1 != v2:
            return False
        a1, a2 = dict(self._atoms), dict(other._atoms)
        lhs = self._num.scale(self._c)
        rhs = other._num.scale(other._c)
        for a in set(a1) | set(a2):
            e1, e2 = a1.get(a, 0), a2.get(a, 0)
            if e2 > e1:
                lhs = lhs * a ** (e2 - e1)
            elif e1 > e2:
                rhs = rhs * a ** (e1 - e2)
        return lhs == rhs

    def __eq__(self, other):
        if not isinstance(other, (RationalFunction, Polynomial, int, Fraction)):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    # -- substitution and evaluation --------------------------------------

    def shift(self, v: Sequence[int]) -> RationalFunction:
        """f(a + v) for an integer vector v."""
        if not any(v):
            return self
        atoms: dict[Polynomial, int] = {}
        c = self._c
        for a, e in self._atoms:
            ca, pa = a.shift(v).primitive()
            c = c / ca**e
            atoms[pa] = atoms.get(pa, 0) + e
        return RationalFunction._build(c, self._num.shift(v), atoms, cancel=False)

    def substitute(self, images: Sequence) -> RationalFunction:
        """f(images) for polynomial images of the five variables."""
        factors = []
        for a, e in self._atoms:
            img = a.substitute(images)
            if img.is_zero():
                raise DenominatorVanishes("denominator vanishes identically under substitution")
            factors.extend([img] * e)
        return RationalFunction.from_factors(self._num.substitute(images).scale(self._c), factors)

    def evaluate(self, point: Sequence):
        """Exact Fraction at a rational point; complex at a complex point."""
        polys = [self._num] + [a for a, _ in self._atoms]
        vals, scale, exact = _eval_gaussian(polys, point)
        nr, ni = vals[0]
        dr, di = 1, 0
        dscale = 1
        for (ar, ai), (_, e) in zip(vals[1:], self._atoms):
            if ar == 0 and ai == 0:
                raise DenominatorVanishes(f"denominator vanishes at {tuple(point)}")
            for _ in range(e):
                dr, di = dr * ar - di * ai, dr * ai + di * ar
                dscale *= scale
        # value = c * ((nr + i ni) / scale) / ((dr + i di) / dscale)
        norm = dr * dr + di * di
        re = Fraction((nr * dr + ni * di) * dscale, scale * norm) * self._c
        if exact:
            return re
        im = Fraction((ni * dr - nr * di) * dscale, scale * norm) * self._c
        return complex(float(re), float(im))

    # -- output -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> RationalFunction:
        return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data["den"]))

    def _den_str(self, latex: bool) -> str:
        parts = []
        for a, e in self._atoms:
            s = a.to_latex() if latex else str(a)
            if len(a) > 1:
                s = f"\\left({s}\\right)" if latex else f"({s})"
            if e > 1:
                s += f"^{{{e}}}" if latex else f"^{e}"
            parts.append(s)
        return (" " if latex else "*").join(parts)

    def __str__(self) -> str:
        num = self.num
        if not self._atoms:
            return str(num)
        ns = str(num)
        if len(num) > 1:
            ns = f"({ns})"
        den = self._den_str(False)
        if len(self._atoms) > 1 or "^" in den:
            den = f"({den})"
        return f"{ns}/{den}"

    def to_latex(self) -> str:
        num = self.num
        if not self._atoms:
            return num.to_latex()
        return f"\\frac{{{num.to_latex()}}}{{{self._den_str(True)}}}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def rf_equal(x, y) -> bool:
    return RationalFunction.coerce(x).equals(y)


def rf_eval(x, point: Sequence):
    return RationalFunction.coerce(x).evaluate(point)


def poly_arith(x: Polynomial, y: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def pochhammer_symbolic(x, n: int) -> RationalFunction:
    """(x, n) = Gamma(x + n) / Gamma(x) as a rational function of x.

    For n < 0 this is 1 / ((x - 1)(x - 2)...(x - |n|)).
    """
    x = Polynomial.coerce(x)
    if n >= 0:
        num = Polynomial.constant(1)
        for k in range(n):
            num = num * (x + k)
        return RationalFunction(num)
    return RationalFunction.from_factors(1, [x - k for k in range(1, -n + 1)])
