"""Grothendieck rings of the completed 2-categories and the semigroup algebras
Z[IS_n], Z[F*_n] with their Mobius bases.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ._json import jsonify
from .bicat import cat_a, cat_b, ordered_fstar, ordered_isn
from .errors import SizeGuardError, VerificationError
from .linear import linearize, split_idempotents
from .partitions import enumerate_fstar, mobius_of_poset, part_leq, part_product
from .relations import PartialBijection, enumerate_isn, rel_compose, subrelations


def _key(x):
    return x.sort_key() if hasattr(x, "sort_key") else x


@dataclass
class AlgebraPresentation:
    """A Z-algebra with basis ``basis`` and ``basis[a] * basis[b] = sum sc[a, b][c] basis[c]``."""

    basis: list
    sc: dict
    unit: list | None = None
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self._index = {b: i for i, b in enumerate(self.basis)}

    @property
    def rank(self):
        return len(self.basis)

    def index(self, b):
        return self._index[b]

    def product(self, a, b):
        """Product of two basis labels as ``{label: int}``."""
        out = self.sc.get((self._index[a], self._index[b]), {})
        return {self.basis[c]: v for c, v in out.items()}

    def mul(self, u, v):
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                for c, z in self.product(a, b).items():
                    out[c] = out.get(c, 0) + x * y * z
        return {c: v for c, v in out.items() if v}

    def unit_vector(self):
        if self.unit is None:
            return None
        return {b: v for b, v in zip(self.basis, self.unit) if v}

    def associativity_failures(self):
        bad = []
        for a, b, c in itertools.product(self.basis, repeat=3):
            if self.mul(self.product(a, b), {c: 1}) != self.mul({a: 1}, self.product(b, c)):
                bad.append((a, b, c))
        return bad

    def unit_failures(self):
        u = self.unit_vector()
        if u is None:
            return ["no unit"]
        return [b for b in self.basis if self.mul(u, {b: 1}) != {b: 1} or self.mul({b: 1}, u) != {b: 1}]

    def structure_constants(self):
        return sorted(set(v for out in self.sc.values() for v in out.values()) | {0})

    def to_json(self):
        triples = sorted([a, b, c, v] for (a, b), out in self.sc.items() for c, v in out.items())
        return {"rank": self.rank, "basis": [jsonify(b) for b in self.basis],
                "unit": self.unit, "sc": triples}


def semigroup_algebra(elements, product):
    """Z[S] in the standard basis; raises ValueError if ``product`` is not an associative operation."""
    elements = list(elements)
    members = set(elements)
    table = {}
    for a in elements:
        for b in elements:
            c = product(a, b)
            if c not in members:
                raise ValueError(f"product {a!r}*{b!r} leaves the element set")
            table[a, b] = c
    for a, b, c in itertools.product(elements, repeat=3):
        if table[table[a, b], c] != table[a, table[b, c]]:
            raise ValueError(f"product not associative at {a!r}, {b!r}, {c!r}")
    idx = {e: i for i, e in enumerate(elements)}
    sc = {(idx[a], idx[b]): {idx[c]: 1} for (a, b), c in table.items()}
    unit = None
    for e in elements:
        if all(table[e, x] == x == table[x, e] for x in elements):
            unit = [int(x == e) for x in elements]
            break
    return AlgebraPresentation(elements, sc, unit)


# ------------------------------------------------------------- Mobius bases

@dataclass
class MobiusBasisElement:
    element: object
    expansion: dict  # standard basis element -> int


def _check_unitriangular(mob, below):
    for m in mob:
        if m.expansion.get(m.element) != 1:
            raise VerificationError(f"Mobius element of {m.element!r} has diagonal != 1")
        for t in m.expansion:
            if not below(t, m.element):
                raise VerificationError(f"{t!r} outside the order ideal of {m.element!r}")


def mobius_basis_is(n):
    """``sum_{r <= s} (-1)^{|s|-|r|} r`` for each partial bijection ``s``."""
    if not 1 <= n <= 5:
        raise SizeGuardError(f"n={n} outside 1..5")
    out = []
    for s in enumerate_isn(n):
        exp = {}
        for r in subrelations(s.as_relation()):
            exp[PartialBijection.from_relation(r)] = (-1) ** (len(s) - r.size)
        out.append(MobiusBasisElement(s, exp))
    _check_unitriangular(out, lambda t, s: set(t.arrows) <= set(s.arrows))
    return out


def mobius_basis_fstar(n):
    """``sum_{t >= s} mu(s, t) t`` over F*_n with the refinement order."""
    if not 1 <= n <= 4:
        raise SizeGuardError(f"n={n} outside 1..4")
    elements = enumerate_fstar(n)
    mu = mobius_of_poset(elements, part_leq)
    out = []
    for s in elements:
        exp = {t: mu[s, t] for t in elements if mu.get((s, t))}
        out.append(MobiusBasisElement(s, exp))
    _check_unitriangular(out, lambda t, s: part_leq(s, t))
    return out


def determinant(rows):
    """Exact determinant of a square matrix of ints or Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def base_change_determinant(mob, basis):
    return determinant([[m.expansion.get(b, 0) for b in basis] for m in mob])


# ------------------------------------------------------- Grothendieck rings

def grothendieck_ring(K, labeler):
    """The split Grothendieck ring of a completion ``K``.

    Basis: isomorphism classes of nonzero indecomposable 1-morphisms, named by
    ``labeler(F, x, y)``. ``[a][b]`` composes "b then a" when the middle
    objects agree and is 0 otherwise. Returns ``(algebra, classes)``.
    """
    classes = K.indecomposables()
    names = []
    for cls in classes:
        labels = {labeler(F, cls.source, cls.target) for F in cls.members}
        if len(labels) != 1:
            raise VerificationError(f"class members carry different labels: {labels}")
        names.append(labels.pop())
    if len(set(names)) != len(names):
        raise VerificationError("two isomorphism classes share a label")
    order = sorted(range(len(classes)), key=lambda i: _key(names[i]))
    classes = [classes[i] for i in order]
    names = [names[i] for i in order]
    C = K.base
    sc = {}
    for ia, a in enumerate(classes):
        for ib, b in enumerate(classes):
            if b.target != a.source:
                continue
            H = C.compose1(a.rep, b.rep)
            x, y = b.source, a.target
            if K.is_zero(H, x, y):
                continue
            hit = [ic for ic, c in enumerate(classes)
                   if (c.source, c.target) == (x, y) and K.is_isomorphic(c.rep, H, x, y)[0]]
            if len(hit) != 1:
                raise VerificationError(f"composite {H!r}: {x} -> {y} matches {len(hit)} classes")
            sc[ia, ib] = {hit[0]: 1}
    unit = [0] * len(classes)
    for x in K.objects:
        one = C.id1(x.obj)
        hit = [ic for ic, c in enumerate(classes)
               if (c.source, c.target) == (x, x) and K.is_isomorphic(c.rep, one, x, x)[0]]
        if len(hit) != 1:
            raise VerificationError(f"identity at {x} is not a single class")
        unit[hit[0]] = 1
    return AlgebraPresentation(names, sc, unit), classes


def label_cat_a(F, x, y):
    """``sigma`` restricted to the subset generating ``x``."""
    p = PartialBijection.from_relation(rel_compose(F, x.generator))
    if p.image != frozenset(k for k, _ in y.generator.pairs):
        raise VerificationError(f"{p} does not land on the target object")
    return p


def label_cat_b(F, x, y):
    """``sigma`` times the idempotent generating ``x``."""
    s = part_product(F, x.generator)
    if s.image_quotient().idempotent() != y.generator:
        raise VerificationError(f"{s} does not land on the target object")
    return s


def completed(which, n):
    C = {"A": cat_a, "B": cat_b}[which](n)
    return split_idempotents(linearize(C))


@dataclass
class IsoReport:
    products_checked: int = 0
    mismatches: int = 0
    witness: object = None
    unit_ok: bool = False
    basis_det: int = 0
    rank: tuple = (0, 0)

    @property
    def passed(self):
        return self.mismatches == 0 and self.unit_ok and abs(self.basis_det) == 1

    def to_json(self):
        return {"passed": self.passed, "rank": list(self.rank),
                "products_checked": self.products_checked, "mismatches": self.mismatches,
                "unit_ok": self.unit_ok, "basis_det": self.basis_det,
                "witness": jsonify(self.witness)}


def verify_isomorphism(A, B, image):
    """Check that ``a -> image[a]`` is a ring isomorphism ``A -> B``.

    ``image`` maps each basis label of ``A`` to an integer vector over ``B``'s
    basis; the image vectors must form a Z-basis (determinant +-1).
    """
    rep = IsoReport(rank=(A.rank, B.rank))
    if A.rank == B.rank:
        rep.basis_det = int(determinant([[image[a].get(b, 0) for b in B.basis] for a in A.basis]))

    def push(u):
        out = {}
        for a, x in u.items():
            for b, y in image[a].items():
                out[b] = out.get(b, 0) + x * y
        return {b: v for b, v in out.items() if v}

    for a in A.basis:
        for b in A.basis:
            rep.products_checked += 1
            lhs = push(A.product(a, b))
            rhs = B.mul(image[a], image[b])
            if lhs != rhs:
                rep.mismatches += 1
                if rep.witness is None:
                    rep.witness = {"a": a, "b": b, "image_of_product": lhs, "product_of_images": rhs}
    rep.unit_ok = A.unit is not None and B.unit is not None and push(A.unit_vector()) == B.unit_vector()
    return rep


def ordered_monoid_decat(n, which):
    """Decategorification of the linearized ordered-monoid 2-category, standard basis."""
    if not 1 <= n <= 5:
        raise SizeGuardError(f"n={n} outside 1..5")
    if which == "ISn":
        C = ordered_isn(n)
        to_label = PartialBijection.from_relation
    elif which == "Fstar":
        C = ordered_fstar(n)
        to_label = lambda s: s  # noqa: E731
    else:
        raise ValueError(f"unknown monoid {which!r}")
    mors = C.one_morphisms
    for s in mors:
        if len(C.two_hom(s, s)) != 1:
            raise VerificationError(f"End({s!r}) is not one-dimensional")
    for s, t in itertools.combinations(mors, 2):
        if C.two_hom(s, t) and C.two_hom(t, s):
            raise VerificationError(f"{s!r} and {t!r} are isomorphic")
    labels = {s: to_label(s) for s in mors}
    back = {v: k for k, v in labels.items()}
    elements = sorted(labels.values(), key=_key)
    return semigroup_algebra(elements, lambda a, b: labels[C.compose1(back[a], back[b])])


def zis(n):
    return semigroup_algebra(enumerate_isn(n), PartialBijection.compose)


def zfstar(n):
    return semigroup_algebra(enumerate_fstar(n), part_product)


def decategorify_relations(n):
    """Grothendieck ring of the completed A_n against Z[IS_n] in the Mobius basis."""
    K = completed("A", n)
    G, _ = grothendieck_ring(K, label_cat_a)
    B = zis(n)
    image = {m.element: m.expansion for m in mobius_basis_is(n)}
    return verify_isomorphism(G, B, image), G, B, K


def decategorify_partitions(n):
    """Grothendieck ring of the completed B_n against Z[F*_n] in the Mobius basis."""
    K = completed("B", n)
    G, _ = grothendieck_ring(K, label_cat_b)
    B = zfstar(n)
    image = {m.element: m.expansion for m in mobius_basis_fstar(n)}
    return verify_isomorphism(G, B, image), G, B, K


__all__ = [
    "AlgebraPresentation", "MobiusBasisElement", "IsoReport", "semigroup_algebra",
    "mobius_basis_is", "mobius_basis_fstar", "grothendieck_ring", "verify_isomorphism",
    "ordered_monoid_decat", "label_cat_a", "label_cat_b", "completed", "decategorify_relations",
    "decategorify_partitions", "zis", "zfstar", "determinant", "base_change_determinant",
]
