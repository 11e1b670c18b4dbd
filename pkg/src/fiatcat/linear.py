"""Linearization over Q, idempotent splitting, and adjunction checks.

Hom-spaces of the linearization are spanned by the finite 2-hom sets of the
underlying 2-category; compositions extend bilinearly from the tables. All
scalars are :class:`fractions.Fraction`.

The completed 2-category has one object per primitive idempotent of
End(1_i). Its 2-morphisms are the sandwiches ``e_t o0 a o0 e_s`` and live
inside the hom-spaces of the linearization, so no new composition rules are
needed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._json import jsonify, label
from .bicat import AxiomResult
from .errors import VerificationError
from .partitions import mobius_of_poset


class Vec:
    """An element of the linearized ``Hom(source, target)``."""

    __slots__ = ("source", "target", "coeffs")

    def __init__(self, source, target, coeffs=()):
        self.source = source
        self.target = target
        self.coeffs = {k: Fraction(v) for k, v in dict(coeffs).items() if v}

    def _same_hom(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("vectors live in different hom-spaces")

    def __add__(self, other):
        self._same_hom(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Vec(self.source, self.target, out)

    def __neg__(self):
        return Vec(self.source, self.target, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = Fraction(c)
        return Vec(self.source, self.target, {k: c * v for k, v in self.coeffs.items()})

    def __truediv__(self, c):
        return (1 / Fraction(c)) * self

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return (self.source, self.target, self.coeffs) == (other.source, other.target, other.coeffs)

    __hash__ = None

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        return self.coeffs.get(k, Fraction(0))

    def ratio_to(self, other):
        """``c`` with ``self == c * other``, or None when not proportional."""
        if other.is_zero():
            raise ValueError("ratio to the zero vector")
        k = next(iter(other.coeffs))
        c = self.coeff(k) / other.coeffs[k]
        return c if self == c * other else None

    def to_json(self):
        return {"source": jsonify(self.source), "target": jsonify(self.target),
                "coeffs": {label(k): jsonify(v) for k, v in
                           sorted(self.coeffs.items(), key=lambda kv: label(kv[0]))}}

    def __repr__(self):
        terms = " + ".join(f"{v}*{k!r}" for k, v in self.coeffs.items()) or "0"
        return f"Vec({terms})"


class LinearTwoCategory:
    """The Q-linearization of a finite 2-category ``base``."""

    def __init__(self, base):
        self.base = base
        self._checked = set()

    def basis(self, f, g):
        return self.base.two_hom(f, g)

    def vec(self, f, g, coeffs):
        v = Vec(f, g, coeffs)
        for k in v.coeffs:
            if not self.base.in_hom(k, f, g):
                raise ValueError(f"{k!r} is not a 2-morphism {f!r} => {g!r}")
        return v

    def basis_vec(self, f, g, a):
        return self.vec(f, g, {a: 1})

    def identity(self, f):
        return Vec(f, f, {self.base.id2(f): 1})

    def zero(self, f, g):
        return Vec(f, g)

    def dim(self, f, g):
        return len(self.basis(f, g))

    def _typed(self, value, f, g):
        key = (value, f, g)
        if key not in self._checked:
            if not self.base.in_hom(value, f, g):
                raise VerificationError(f"composite {value!r} escaped Hom({f!r}, {g!r})")
            self._checked.add(key)
        return value

    def vcomp(self, b, a):
        if a.target != b.source:
            raise ValueError("not vertically composable")
        out = {}
        for kb, cb in b.coeffs.items():
            for ka, ca in a.coeffs.items():
                k = self._typed(self.base.vcomp(kb, ka), a.source, b.target)
                out[k] = out.get(k, 0) + cb * ca
        return Vec(a.source, b.target, out)

    def hcomp(self, b, a):
        C = self.base
        f, g = C.compose1(b.source, a.source), C.compose1(b.target, a.target)
        out = {}
        for kb, cb in b.coeffs.items():
            for ka, ca in a.coeffs.items():
                k = self._typed(C.hcomp(kb, ka), f, g)
                out[k] = out.get(k, 0) + cb * ca
        return Vec(f, g, out)


def linearize(C):
    return LinearTwoCategory(C)


def independent(vectors):
    """A maximal linearly independent sublist, by exact Gaussian elimination."""
    pivots = []  # (pivot key, reduced row)
    keep = []
    for v in vectors:
        row = dict(v.coeffs)
        for key, prow in pivots:
            c = row.get(key)
            if c:
                for k, x in prow.items():
                    row[k] = row.get(k, 0) - c * x
                row = {k: x for k, x in row.items() if x}
        if row:
            key = min(row, key=label)
            piv = row[key]
            pivots.append((key, {k: x / piv for k, x in row.items()}))
            keep.append(v)
    return keep


def rank(vectors):
    return len(independent(vectors))


# ----------------------------------------------------- End(1) and idempotents

@dataclass
class EndAlgebra:
    """The commutative algebra End(1_i) with basis products read from the tables."""

    L: LinearTwoCategory
    obj: object
    one: object
    basis: tuple
    table: dict

    def mul(self, x, y):
        return self.L.vcomp(x, y)

    def unit(self):
        return self.L.identity(self.one)

    def element(self, coeffs):
        return self.L.vec(self.one, self.one, coeffs)


def end_of_identity_algebra(L, i):
    """End(1_i), after checking that o0 and o1 agree and commute on it."""
    C = L.base
    one = C.id1(i)
    basis = C.two_hom(one, one)
    table = {}
    for x in basis:
        for y in basis:
            v, h, v_rev = C.vcomp(x, y), C.hcomp(x, y), C.vcomp(y, x)
            if not (v == h == v_rev):
                raise VerificationError(
                    f"Eckmann-Hilton fails on End(1_{i}) at {x!r}, {y!r}: {v!r}, {h!r}, {v_rev!r}")
            table[x, y] = v
    return EndAlgebra(L, i, one, tuple(basis), table)


def primitive_idempotents(alg):
    """Primitive idempotents ``e_x = sum_{y <= x} mu(y, x) y`` of a semilattice algebra.

    The basis must be closed under the product; ``x <= y`` iff ``xy = x``.
    Returns ``[(generator, element)]`` in basis order, verified to be
    orthogonal idempotents summing to the unit.
    """
    basis = alg.basis
    for (x, y), z in alg.table.items():
        if z not in basis:
            raise VerificationError(f"product {x!r}*{y!r} is not a basis element")

    def leq(x, y):
        return alg.table[x, y] == x
    for x in basis:
        if alg.table[x, x] != x:
            raise VerificationError(f"basis element {x!r} is not idempotent")
    mu = mobius_of_poset(basis, leq)
    out = []
    for x in basis:
        out.append((x, alg.element({y: mu.get((y, x), 0) for y in basis})))
    total = alg.element({})
    for i, (x, e) in enumerate(out):
        if e.is_zero() or alg.mul(e, e) != e:
            raise VerificationError(f"e_{x!r} is not a nonzero idempotent")
        for y, f in out[i + 1:]:
            if not alg.mul(e, f).is_zero():
                raise VerificationError(f"e_{x!r} and e_{y!r} are not orthogonal")
        total = total + e
    if total != alg.unit():
        raise VerificationError("idempotents do not sum to the unit")
    return out


@dataclass(frozen=True)
class IdempotentLabel:
    obj: object
    generator: object
    element: Vec = field(compare=False, repr=False)

    def to_json(self):
        return {"object": jsonify(self.obj), "generator": jsonify(self.generator)}


def sandwich(L, sigma, e_y, e_x):
    """``e_y o0 id_sigma o0 e_x``: the identity of ``sigma`` in the completion."""
    return sandwich_element(L, e_y, L.identity(sigma), e_x)


def sandwich_element(L, e_y, a, e_x):
    return L.hcomp(L.hcomp(e_y, a), e_x)


# ----------------------------------------------------------- the completion

@dataclass
class IsoClass:
    source: IdempotentLabel
    target: IdempotentLabel
    members: list
    identity: Vec

    @property
    def rep(self):
        return self.members[0]


class CompletedTwoCategory:
    """Idempotent splitting of End(1_i) for each object of a linearization."""

    def __init__(self, L):
        self.L = L
        self.base = L.base
        self.algebras = {}
        self.objects = []
        for i in self.base.objects:
            alg = end_of_identity_algebra(L, i)
            self.algebras[i] = alg
            for gen, e in primitive_idempotents(alg):
                self.objects.append(IdempotentLabel(i, gen, e))
        self._ident = {}
        self._homs = {}
        self._classes = None

    def one_mors(self, x, y):
        return self.base.one_mors(x.obj, y.obj)

    def identity(self, F, x, y):
        key = (F, x, y)
        if key not in self._ident:
            self._ident[key] = sandwich(self.L, F, y.element, x.element)
        return self._ident[key]

    def is_zero(self, F, x, y):
        return self.identity(F, x, y).is_zero()

    def hom_basis(self, F, G, x, y):
        key = (F, G, x, y)
        if key not in self._homs:
            L = self.L
            span = [sandwich_element(L, y.element, L.basis_vec(F, G, a), x.element)
                    for a in L.basis(F, G)]
            self._homs[key] = independent([v for v in span if not v.is_zero()])
        return self._homs[key]

    def end_dim(self, F, x, y):
        return len(self.hom_basis(F, F, x, y))

    def locality_report(self):
        """End of each identity 1-morphism is one-dimensional (the completion stays local)."""
        res = AxiomResult("identity_endomorphisms_local")
        for x in self.objects:
            one = self.base.id1(x.obj)
            d = self.end_dim(one, x, x)
            res.record(d == 1, dict(object=x, dim=d))
        return res

    def nonzero_one_morphisms(self):
        for x in self.objects:
            for y in self.objects:
                for F in self.one_mors(x, y):
                    if not self.is_zero(F, x, y):
                        yield F, x, y

    def is_isomorphic(self, F, G, x, y):
        return completed_is_isomorphic(self, (F, x, y), (G, x, y))

    def indecomposables(self):
        """Isomorphism classes of nonzero indecomposable 1-morphisms."""
        if self._classes is not None:
            return self._classes
        classes = []
        for F, x, y in self.nonzero_one_morphisms():
            d = self.end_dim(F, x, y)
            if d != 1:
                raise VerificationError(f"End of {F!r}: {x} -> {y} has dimension {d}, not local")
            for cls in classes:
                if (cls.source, cls.target) == (x, y) and self.is_isomorphic(cls.rep, F, x, y)[0]:
                    cls.members.append(F)
                    break
            else:
                classes.append(IsoClass(x, y, [F], self.identity(F, x, y)))
        self._classes = classes
        return classes

    def classes_between(self, x, y):
        return [c for c in self.indecomposables() if (c.source, c.target) == (x, y)]


def split_idempotents(L):
    return CompletedTwoCategory(L)


def completed_is_isomorphic(K, first, second):
    """Decide ``F ~ G`` in the completion; returns ``(bool, witness)``.

    A positive answer carries a mutually inverse pair ``(f, g)`` checked in
    both orders. A negative answer is certified by every product of basis
    vectors of the two hom-spaces composing to zero in the one-dimensional
    End(F), so no combination can be invertible.
    """
    (F, x, y), (G, x2, y2) = first, second
    if (x, y) != (x2, y2):
        raise ValueError("1-morphisms have different completed endpoints")
    L = K.L
    eF, eG = K.identity(F, x, y), K.identity(G, x, y)
    if eF.is_zero() or eG.is_zero():
        both = eF.is_zero() and eG.is_zero()
        return both, {"zero": True}
    for H in (F, G):
        if K.end_dim(H, x, y) != 1:
            raise VerificationError(f"End of {H!r} is not one-dimensional")
    fwd, back = K.hom_basis(F, G, x, y), K.hom_basis(G, F, x, y)
    for f in fwd:
        for g in back:
            c = L.vcomp(g, f).ratio_to(eF)
            if c is None:
                raise VerificationError("composite left the one-dimensional End")
            if c:
                g = g / c
                if L.vcomp(g, f) != eF or L.vcomp(f, g) != eG:
                    raise VerificationError("inverse pair fails on one side")
                return True, {"forward": f, "backward": g}
    return False, {"pairs_checked": len(fwd) * len(back)}


# --------------------------------------------------------------- fiatness

@dataclass
class FiatReport:
    category: str
    n: int
    fiat: bool
    checks: list
    witness: object = None
    empirical: list = field(default_factory=list)

    def to_json(self):
        return {"category": self.category, "n": self.n, "fiat": self.fiat,
                "witness": jsonify(self.witness),
                "checks": [c.to_json() for c in self.checks],
                "empirical": [c.to_json() for c in self.empirical]}


def _inverse_1mor(C, f):
    one_s, one_t = C.id1(C.source(f)), C.id1(C.target(f))
    for g in C.one_mors(C.target(f), C.source(f)):
        if C.compose1(g, f) == one_s and C.compose1(f, g) == one_t:
            return g
    return None


def triangle_checks(C):
    """Adjunctions ``F -| F^-1`` with unit and counit the identity 2-morphisms."""
    inverse = AxiomResult("star_is_inverse")
    typing = AxiomResult("unit_counit_typing")
    tri1 = AxiomResult("triangle_F")
    tri2 = AxiomResult("triangle_F_star")
    for F in C.one_morphisms:
        Fs = _inverse_1mor(C, F)
        inverse.record(Fs is not None, dict(F=F))
        if Fs is None:
            continue
        one_i, one_j = C.id1(C.source(F)), C.id1(C.target(F))
        eta = C.id2(one_i)
        eps = C.id2(one_j)
        typing.record(C.in_hom(eta, one_i, C.compose1(Fs, F))
                      and C.in_hom(eps, C.compose1(F, Fs), one_j), dict(F=F))
        idF, idFs = C.id2(F), C.id2(Fs)
        lhs1 = C.vcomp(C.hcomp(eps, idF), C.hcomp(idF, eta))
        tri1.record(lhs1 == idF, dict(F=F, got=lhs1))
        lhs2 = C.vcomp(C.hcomp(idFs, eps), C.hcomp(eta, idFs))
        tri2.record(lhs2 == idFs, dict(F=F, got=lhs2))
    return [inverse, typing, tri1, tri2]


def completed_triangle_checks(K):
    """Triangle identities for every nonzero ``(sigma, x -> y)`` against ``(sigma^-1, y -> x)``."""
    C, L = K.base, K.L
    tri1 = AxiomResult("completed_triangle_F")
    tri2 = AxiomResult("completed_triangle_F_star")
    for F, x, y in K.nonzero_one_morphisms():
        Fs = _inverse_1mor(C, F)
        if Fs is None:
            tri1.record(False, dict(F=F, reason="no inverse"))
            continue
        idF, idFs = K.identity(F, x, y), K.identity(Fs, y, x)
        eta, eps = x.element, y.element
        lhs1 = L.vcomp(L.hcomp(eps, idF), L.hcomp(idF, eta))
        tri1.record(lhs1 == idF, dict(F=F, source=x, target=y))
        lhs2 = L.vcomp(L.hcomp(idFs, eps), L.hcomp(eta, idFs))
        tri2.record(lhs2 == idFs and not idFs.is_zero(), dict(F=F, source=x, target=y))
    return [K.locality_report(), tri1, tri2]


def star_checks(C, star):
    """Empirical contravariance of a candidate anti-involution on 2-morphisms."""
    typed = AxiomResult("star_reverses_2morphisms")
    invol = AxiomResult("star_involutive")
    hrev = AxiomResult("star_reverses_hcomp")
    vrev = AxiomResult("star_reverses_vcomp")
    mors = C.one_morphisms
    for f in mors:
        fs = star(f)
        for g in C.parallel(f):
            gs = star(g)
            for a in C.two_hom(f, g):
                typed.record(C.in_hom(star(a), gs, fs), dict(f=f, g=g, a=a))
                invol.record(star(star(a)) == a, dict(a=a))
                for h in C.parallel(f):
                    for b in C.two_hom(g, h):
                        vrev.record(star(C.vcomp(b, a)) == C.vcomp(star(a), star(b)),
                                    dict(a=a, b=b))
                for f2 in C.after(f):
                    for g2 in C.parallel(f2):
                        for b in C.two_hom(f2, g2):
                            hrev.record(star(C.hcomp(b, a)) == C.hcomp(star(a), star(b)),
                                        dict(a=a, b=b))
    return [typed, invol, hrev, vrev]


def _witness_order(elements):
    return sorted(elements, key=lambda s: (-s.size, s.sort_key()))


def ordered_monoid_checks(C):
    """Finitary but not fiat: find ``s`` with no adjoint among the 1-morphisms.

    For each non-invertible ``s`` and every candidate adjoint ``t`` we need a
    unit in ``Hom(1, t s)`` and a counit in ``Hom(s t, 1)``; hom-sets have at
    most one element, so failing either for all ``t`` rules ``s`` out.
    """
    one = C.id1(C.objects[0])
    finitary = AxiomResult("endomorphisms_one_dimensional")
    for s in C.one_morphisms:
        finitary.record(len(C.two_hom(s, s)) == 1, dict(s=s))
    witness = None
    for s in _witness_order(C.one_morphisms):
        if _inverse_1mor(C, s) is not None:
            continue
        adjoints = [t for t in C.one_morphisms
                    if C.two_hom(one, C.compose1(t, s)) and C.two_hom(C.compose1(s, t), one)]
        if not adjoints:
            no_unit = all(not C.two_hom(one, C.compose1(s, t)) and not C.two_hom(one, C.compose1(t, s))
                          for t in C.one_morphisms)
            no_counit = all(not C.two_hom(C.compose1(s, t), one) and not C.two_hom(C.compose1(t, s), one)
                            for t in C.one_morphisms)
            witness = {"s": s, "no_unit_2morphisms": no_unit, "no_counit_2morphisms": no_counit}
            break
    return finitary, witness


def fiat_check(C, star=None):
    """Fiatness verdict for ``cat_a``/``cat_b`` (via the completion) or an ordered monoid."""
    if C.name.startswith("ordered"):
        finitary, witness = ordered_monoid_checks(C)
        return FiatReport(C.name, C.n, witness is None and finitary.status == "pass",
                          [finitary], witness)
    star = star or C.star
    checks = triangle_checks(C)
    K = split_idempotents(linearize(C))
    checks += completed_triangle_checks(K)
    empirical = star_checks(C, star) if star is not None else []
    ok = all(c.status == "pass" for c in checks)
    return FiatReport(C.name, C.n, ok, checks, None, empirical)
