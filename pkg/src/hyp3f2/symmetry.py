"""The order-72 affine symmetry group of the parameter space.

The group is generated by five parameter involutions (two "tau" maps
exchanging the role of 1 and b_i, three "sigma" maps of the solutions at
infinity).  All of them fix c = (2/3, 2/3, 2/3; 1, 1) and preserve s(a).
Their linear parts act on shift vectors, and three-term coefficients are
covariant: u(a; g p, g q) = +-u(g^{-1} a; p, q), the sign being
phase(g)^s(p) (see :class:`GroupElement`).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .connection import ShiftVector, ThreeTermRelation, three_term_coefficients
from .contiguous import saalschutz
from .errors import ClosureOverflow, DegenerateShifts
from .polyrat import NVARS, Polynomial, RationalFunction, gens

FIXED_POINT = tuple(Fraction(x) for x in ("2/3", "2/3", "2/3", "1", "1"))
GROUP_ORDER = 72
CLOSURE_LIMIT = 1000

Vec = tuple[Fraction, ...]


@dataclass(frozen=True)
class AffineTransform:
    """x -> linear @ x + translation, with exact rational entries."""

    linear: tuple[Vec, ...]
    translation: Vec

    @classmethod
    def identity(cls) -> AffineTransform:
        one, zero = Fraction(1), Fraction(0)
        return cls(
            tuple(tuple(one if i == j else zero for j in range(NVARS)) for i in range(NVARS)),
            (zero,) * NVARS,
        )

    @classmethod
    def from_images(cls, images: Sequence[Polynomial]) -> AffineTransform:
        """Build from the images of a0..a4, given as affine polynomials."""
        rows, shifts = [], []
        for img in images:
            if img.degree() > 1:
                raise ValueError(f"{img} is not affine")
            terms = img.terms
            rows.append(tuple(terms.get(tuple(int(i == j) for j in range(NVARS)), Fraction(0)) for i in range(NVARS)))
            shifts.append(terms.get((0,) * NVARS, Fraction(0)))
        return cls(tuple(rows), tuple(shifts))

    def __call__(self, x: Sequence):
        """Apply to a point (rationals, complex numbers or polynomials)."""
        out = []
        for row, t in zip(self.linear, self.translation):
            acc = t
            for c, xi in zip(row, x):
                if c:
                    acc = acc + (xi if c == 1 else -xi if c == -1 else c * xi)
            out.append(acc)
        return tuple(out)

    def apply_linear(self, p) -> ShiftVector:
        """The linear part acting on an integer shift vector."""
        img = []
        for row in self.linear:
            v = sum(c * x for c, x in zip(row, p))
            if v.denominator != 1:
                raise ValueError("linear part does not preserve the integer lattice")
            img.append(int(v))
        return ShiftVector(img)

    def compose(self, other: AffineTransform) -> AffineTransform:
        """self after other."""
        lin = tuple(
            tuple(sum(self.linear[i][k] * other.linear[k][j] for k in range(NVARS)) for j in range(NVARS))
            for i in range(NVARS)
        )
        shift = tuple(
            sum(self.linear[i][k] * other.translation[k] for k in range(NVARS)) + self.translation[i]
            for i in range(NVARS)
        )
        return AffineTransform(lin, shift)

    __matmul__ = compose

    def inverse(self) -> AffineTransform:
        n = NVARS
        aug = [list(self.linear[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        inv = tuple(tuple(row[n:]) for row in aug)
        shift = tuple(-sum(inv[i][k] * self.translation[k] for k in range(n)) for i in range(n))
        return AffineTransform(inv, shift)

    def determinant(self) -> Fraction:
        m = [list(r) for r in self.linear]
        det = Fraction(1)
        for col in range(NVARS):
            piv = next((r for r in range(col, NVARS) if m[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det *= m[col][col]
            for r in range(col + 1, NVARS):
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return det

    def linear_part(self) -> AffineTransform:
        return AffineTransform(self.linear, (Fraction(0),) * NVARS)

    def is_identity(self) -> bool:
        return self == AffineTransform.identity()

    def substitution(self) -> tuple[Polynomial, ...]:
        """Images of the symbols a0..a4, for substituting a -> self(a)."""
        return self(gens())

    def pullback(self, w: RationalFunction) -> RationalFunction:
        """w(self(a))."""
        return w.substitute(self.substitution())

    def to_json(self) -> dict:
        return {
            "linear": [[str(x) for x in row] for row in self.linear],
            "translation": [str(x) for x in self.translation],
        }


@dataclass(frozen=True)
class GroupElement:
    """A group element with a shortest generating word.

    ``phase`` is +1 or -1 according to the parity of sigma-type letters in
    the word.  The companions at infinity carry a factor exp(i pi s(a)), so a
    shift by p multiplies them by (-1)^s(p); ``phase`` records whether that
    sign enters the transformed relation.
    """

    transform: AffineTransform
    word: tuple[str, ...]
    phase: int = 1

    def __call__(self, x):
        return self.transform(x)

    def act(self, p) -> ShiftVector:
        return self.transform.apply_linear(p)

    @property
    def name(self) -> str:
        return "*".join(self.word) if self.word else "id"


def _from_symbols(fn) -> AffineTransform:
    return AffineTransform.from_images(fn(*gens()))


@lru_cache(maxsize=None)
def generators() -> dict[str, AffineTransform]:
    """Identity and the five involutions, keyed by name.

    The solution-at-zero maps are id, tau1, tau2; the solution-at-infinity
    maps are sigma0, sigma1, sigma2.  sigma3 and sigma4 alias tau1 and tau2.
    """
    gens_ = {
        "id": AffineTransform.identity(),
        "tau1": _from_symbols(lambda a0, a1, a2, b1, b2: (a0 + 1 - b1, a1 + 1 - b1, a2 + 1 - b1, 2 - b1, b2 + 1 - b1)),
        "tau2": _from_symbols(lambda a0, a1, a2, b1, b2: (a0 + 1 - b2, a1 + 1 - b2, a2 + 1 - b2, b1 + 1 - b2, 2 - b2)),
        "sigma0": _from_symbols(lambda a0, a1, a2, b1, b2: (a0, a0 + 1 - b1, a0 + 1 - b2, a0 + 1 - a1, a0 + 1 - a2)),
        "sigma1": _from_symbols(lambda a0, a1, a2, b1, b2: (a1 + 1 - b1, a1, a1 + 1 - b2, a1 + 1 - a0, a1 + 1 - a2)),
        "sigma2": _from_symbols(lambda a0, a1, a2, b1, b2: (a2 + 1 - b2, a2 + 1 - b1, a2, a2 + 1 - a1, a2 + 1 - a0)),
    }
    gens_["sigma3"] = gens_["tau1"]
    gens_["sigma4"] = gens_["tau2"]
    return gens_


INVOLUTIONS = ("tau1", "tau2", "sigma0", "sigma1", "sigma2")


def companion_map(i: int, at_infinity: bool) -> AffineTransform:
    """The parameter map of companion y_i at zero (id, tau1, tau2) or at infinity (sigma_i)."""
    if i not in (0, 1, 2):
        raise ValueError("companion index must be 0, 1 or 2")
    g = generators()
    if at_infinity:
        return g[f"sigma{i}"]
    return (g["id"], g["tau1"], g["tau2"])[i]


def word_transform(word: Iterable[str]) -> AffineTransform:
    """Product of named generators, applied right to left."""
    g = generators()
    out = AffineTransform.identity()
    for name in word:
        out = out @ g[name]
    return out


def rho(i: int) -> AffineTransform:
    """rho_i = tau_i sigma0 tau_i sigma0 tau_i for i = 1, 2; rho_3 = tau1 tau2 tau1."""
    if i in (1, 2):
        t = f"tau{i}"
        return word_transform((t, "sigma0", t, "sigma0", t))
    if i == 3:
        return word_transform(("tau1", "tau2", "tau1"))
    raise ValueError("rho index must be 1, 2 or 3")


def closure(elements: Sequence[AffineTransform], limit: int = CLOSURE_LIMIT) -> list[AffineTransform]:
    """The group generated by the given transforms (breadth first)."""
    ident = AffineTransform.identity()
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in elements:
            y = g @ x
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
                if len(seen) > limit:
                    raise ClosureOverflow(f"closure exceeded {limit} elements")
    return order


@lru_cache(maxsize=None)
def _enumerate() -> tuple[GroupElement, ...]:
    g = generators()
    ident = AffineTransform.identity()
    words = {ident: ()}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for name in INVOLUTIONS:
            y = g[name] @ x
            if y not in words:
                words[y] = (name,) + words[x]
                queue.append(y)
                if len(words) > CLOSURE_LIMIT:
                    raise ClosureOverflow(f"group closure exceeded {CLOSURE_LIMIT} elements")
    return tuple(GroupElement(t, w, word_phase(w)) for t, w in words.items())


def word_phase(word: Iterable[str]) -> int:
    """(-1) to the number of sigma0, sigma1, sigma2 letters in the word."""
    odd = sum(name in ("sigma0", "sigma1", "sigma2") for name in word) % 2
    return -1 if odd else 1


def phase_is_well_defined() -> bool:
    """The sigma-letter parity is a character: consistent across all products."""
    g = generators()
    table = {e.transform: e.phase for e in enumerate_group()}
    return all(
        table[g[n] @ t] == table[t] * word_phase((n,)) for t in table for n in INVOLUTIONS
    )


def enumerate_group() -> list[GroupElement]:
    """All elements of G in breadth-first order, each with a shortest word."""
    return list(_enumerate())


def linear_group() -> list[AffineTransform]:
    """Distinct linear parts of the group elements."""
    out = []
    for e in enumerate_group():
        lp = e.transform.linear_part()
        if lp not in out:
            out.append(lp)
    return out


# -- fundamental domain ------------------------------------------------------


def in_fundamental_domain(p) -> bool:
    """p0 >= p1 >= p2 and p4 >= p3 >= p0 - p1."""
    p0, p1, p2, p3, p4 = ShiftVector.coerce(p)
    return p0 >= p1 >= p2 and p4 >= p3 >= p0 - p1


def reduce_to_fundamental_domain(p) -> tuple[GroupElement, ShiftVector]:
    """A group element moving p into the fundamental domain, and the image.

    Several images can lie on the boundary; the lexicographically smallest
    image wins, and among elements producing it the first in enumeration
    order.
    """
    p = ShiftVector.coerce(p)
    best = None
    for e in enumerate_group():
        img = e.act(p)
        if in_fundamental_domain(img) and (best is None or img.p < best[1].p):
            best = (e, img)
    if best is None:
        raise RuntimeError(f"no image of {p} lies in the fundamental domain")
    return best


# -- covariance and orbits -----------------------------------------------------


def _as_element(g) -> GroupElement:
    if isinstance(g, GroupElement):
        return g
    for e in enumerate_group():
        if e.transform == g:
            return e
    raise ValueError("transform is not an element of the group")


def transformed_relation(rel: ThreeTermRelation, g, literal: bool = False) -> ThreeTermRelation:
    """The relation with shifts g p, g q and coefficients pulled back by g^{-1}.

    Each coefficient is multiplied by phase(g)^s(shift), the sign coming from
    the exp(i pi s(a)) normalization of the companions at infinity.  With
    ``literal=True`` the sign is omitted.
    """
    e = _as_element(g)
    inv = e.transform.inverse()
    u, v = inv.pullback(rel.u), inv.pullback(rel.v)
    if not literal and e.phase < 0:
        if rel.p.saalschutz_index() % 2:
            u = -u
        if rel.q.saalschutz_index() % 2:
            v = -v
    return ThreeTermRelation(e.act(rel.p), e.act(rel.q), u, v)


def covariance_sign(p, g) -> int:
    """phase(g)^s(p): the sign relating u(a; g p, g q) to u(g^{-1} a; p, q)."""
    e = _as_element(g)
    return -1 if e.phase < 0 and ShiftVector.coerce(p).saalschutz_index() % 2 else 1


def verify_covariance(p, q, g, literal: bool = False, check_v: bool = True) -> bool:
    """u(a; g p, g q) == phase(g)^s(p) u(g^{-1} a; p, q) over Q(a), and likewise for v.

    ``literal=True`` drops the sign and tests the bare pullback identity,
    which holds exactly when the sign is +1.
    """
    p, q = ShiftVector.coerce(p), ShiftVector.coerce(q)
    if p == q:
        raise DegenerateShifts(f"shift vectors coincide: {p}")
    e = _as_element(g)
    moved = three_term_coefficients(e.act(p), e.act(q))
    pulled = transformed_relation(three_term_coefficients(p, q), e, literal=literal)
    if not moved.u.equals(pulled.u):
        return False
    return not check_v or moved.v.equals(pulled.v)


def orbit_relations(p, q, elements: Sequence[GroupElement] | None = None) -> list[tuple[GroupElement, ThreeTermRelation]]:
    """Relations obtained by acting with every group element on (p, q).

    Entries with the same transformed shifts and coefficients are merged;
    the first element (in enumeration order) is kept.
    """
    base = three_term_coefficients(p, q)
    out: list[tuple[GroupElement, ThreeTermRelation]] = []
    for e in elements if elements is not None else enumerate_group():
        rel = transformed_relation(base, e)
        dup = any(
            r.p == rel.p and r.q == rel.q and r.u.equals(rel.u) and r.v.equals(rel.v) for _, r in out
        )
        if not dup:
            out.append((e, rel))
    return out


# -- structural checks ----------------------------------------------------------

BASIS = {
    "u0": ("-2/3", "1/3", "1/3", "0", "0"),
    "u1": ("1/3", "-2/3", "1/3", "0", "0"),
    "u2": ("1/3", "1/3", "-2/3", "0", "0"),
    "v0": ("-2/3", "-2/3", "-2/3", "-1", "-1"),
    "v1": ("1/3", "1/3", "1/3", "1", "0"),
    "v2": ("1/3", "1/3", "1/3", "0", "1"),
    "w": ("-1/3", "-1/3", "-1/3", "0", "0"),
}
BASIS = {k: tuple(Fraction(x) for x in v) for k, v in BASIS.items()}


def basis_permutation(t: AffineTransform) -> dict[str, str] | None:
    """How the linear part permutes the seven basis vectors, or None if it does not."""
    lin = t.linear_part()
    lookup = {v: k for k, v in BASIS.items()}
    perm = {}
    for name, vec in BASIS.items():
        img = lookup.get(tuple(lin(vec)))
        if img is None:
            return None
        perm[name] = img
    return perm


def is_parameter_permutation(t: AffineTransform) -> bool:
    """True if t permutes numerator parameters among themselves and denominator ones likewise."""
    if any(t.translation):
        return False
    for i, row in enumerate(t.linear):
        nz = [j for j, c in enumerate(row) if c]
        if len(nz) != 1 or row[nz[0]] != 1 or (nz[0] < 3) != (i < 3):
            return False
    return len({next(j for j, c in enumerate(row) if c) for row in t.linear}) == NVARS


def group_report() -> dict[str, bool | int]:
    """Run every structural check on the group; values are pass/fail flags and the order."""
    g = generators()
    elems = enumerate_group()
    transforms = [e.transform for e in elems]
    s = saalschutz()
    report: dict[str, bool | int] = {"order": len(elems)}
    report["order_is_72"] = len(elems) == GROUP_ORDER
    report["linear_order_is_72"] = len(linear_group()) == GROUP_ORDER
    report["involutions"] = all((g[n] @ g[n]).is_identity() for n in INVOLUTIONS)
    report["fixed_point"] = all(g[n](FIXED_POINT) == FIXED_POINT for n in g)
    report["saalschutz_invariant"] = all(s.substitute(t.substitution()) == s for t in transforms)
    report["unimodular"] = all(abs(t.determinant()) == 1 for t in transforms) and all(
        all(x.denominator == 1 for row in t.linear for x in row) for t in transforms
    )
    r1, r2 = rho(1), rho(2)
    report["rho_involutions"] = (r1 @ r1).is_identity() and (r2 @ r2).is_identity()
    report["sigma_from_rho"] = all((rho(i) @ g["sigma0"] @ rho(i)) == g[f"sigma{i}"] for i in (1, 2))
    rho_group = closure([r1.linear_part(), r2.linear_part()])
    tau_group = closure([g["tau1"].linear_part(), g["tau2"].linear_part()])
    report["rho_group_order_6"] = len(rho_group) == 6
    report["tau_group_order_6"] = len(tau_group) == 6
    report["factors_commute"] = all(x @ y == y @ x for x in rho_group for y in tau_group)
    s0 = g["sigma0"].linear_part()
    report["sigma0_swaps_factors"] = all((s0 @ x @ s0) in tau_group for x in rho_group) and all(
        (s0 @ y @ s0) in rho_group for y in tau_group
    )
    expected = {
        "rho1": {"u0": "u1", "u1": "u0"},
        "rho2": {"u0": "u2", "u2": "u0"},
        "tau1": {"v0": "v1", "v1": "v0"},
        "tau2": {"v0": "v2", "v2": "v0"},
        "sigma0": {"u0": "v0", "v0": "u0", "u1": "v1", "v1": "u1", "u2": "v2", "v2": "u2"},
    }
    actual = {"rho1": r1, "rho2": r2, "tau1": g["tau1"], "tau2": g["tau2"], "sigma0": g["sigma0"]}
    ok = True
    for name, moves in expected.items():
        perm = basis_permutation(actual[name])
        if perm is None or any(perm[k] != moves.get(k, k) for k in BASIS):
            ok = False
    report["basis_permutations"] = ok
    report["w_fixed"] = all(basis_permutation(t) is not None and basis_permutation(t)["w"] == "w" for t in transforms)
    trivial = closure([r1, r2, rho(3)])
    report["trivial_subgroup_order_12"] = len(trivial) == 12
    report["trivial_subgroup_permutes"] = all(is_parameter_permutation(t) for t in trivial)
    report["phase_character"] = phase_is_well_defined()
    return report
