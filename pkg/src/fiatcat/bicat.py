"""Finite strict 2-categories: a table-driven container and an axiom checker.

Two-morphisms are stored as bare values (relations, partitions, or pairs for
ordered monoids). Whether a value lies in ``Hom(f, g)`` is decided by
membership in the enumerated hom-set, so one value can live in many homs.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from ._json import jsonify
from .errors import OrderError, SizeGuardError
from .partitions import (SetPartition, coarsenings, enumerate_fstar, part_join,
                         part_leq, part_product, symmetric_group)
from .relations import (BinaryRelation, enumerate_isn, permutations, rel_compose,
                        rel_intersect, rel_leq, subrelations)

MAX_CAT_N = 4


class TwoCategory:
    """A finite strict 2-category given by enumerations and composition rules.

    ``hom1`` maps ``(i, j)`` to the 1-morphisms ``i -> j``; 1-morphism values
    must be unique across all pairs. ``compose1(g, f)`` is "f then g", and so
    are ``vcomp(b, a)`` and ``hcomp(b, a)``. Compositions are memoized.
    """

    def __init__(self, name, n, objects, hom1, compose1, id1, hom2, vcomp, hcomp, id2):
        self.name = name
        self.n = n
        self.objects = tuple(objects)
        self.hom1 = {k: tuple(v) for k, v in hom1.items()}
        self._compose1 = compose1
        self._id1 = id1
        self._hom2 = hom2
        self._vcomp = vcomp
        self._hcomp = hcomp
        self._id2 = id2
        self._ends = {}
        for (i, j), fs in self.hom1.items():
            for f in fs:
                if f in self._ends:
                    raise ValueError(f"1-morphism {f!r} listed twice")
                self._ends[f] = (i, j)
        self._homs = {}
        self._homsets = {}
        self._vtab = {}
        self._htab = {}
        self._ctab = {}
        self.star = None

    @property
    def one_morphisms(self):
        return [f for fs in self.hom1.values() for f in fs]

    def one_mors(self, i, j):
        return self.hom1.get((i, j), ())

    def source(self, f):
        return self._ends[f][0]

    def target(self, f):
        return self._ends[f][1]

    def compose1(self, g, f):
        key = (g, f)
        if key not in self._ctab:
            self._ctab[key] = self._compose1(g, f)
        return self._ctab[key]

    def id1(self, i):
        return self._id1(i)

    def id2(self, f):
        return self._id2(f)

    def two_hom(self, f, g):
        key = (f, g)
        if key not in self._homs:
            self._homs[key] = tuple(self._hom2(f, g))
            self._homsets[key] = frozenset(self._homs[key])
        return self._homs[key]

    def in_hom(self, a, f, g):
        self.two_hom(f, g)
        return a in self._homsets[f, g]

    def vcomp(self, b, a):
        key = (b, a)
        if key not in self._vtab:
            self._vtab[key] = self._vcomp(b, a)
        return self._vtab[key]

    def hcomp(self, b, a):
        key = (b, a)
        if key not in self._htab:
            self._htab[key] = self._hcomp(b, a)
        return self._htab[key]

    def after(self, f):
        """1-morphisms composable after ``f``."""
        j = self.target(f)
        return [g for k in self.objects for g in self.one_mors(j, k)]

    def parallel(self, f):
        return self.one_mors(self.source(f), self.target(f))

    def __repr__(self):
        return f"TwoCategory({self.name!r}, n={self.n})"


def _one_object(name, n, mors, compose1, unit, hom2, vcomp, hcomp, id2):
    return TwoCategory(name, n, ["i"], {("i", "i"): mors}, compose1, lambda i: unit,
                       hom2, vcomp, hcomp, id2)


def _guard(n):
    if not 1 <= n <= MAX_CAT_N:
        raise SizeGuardError(f"n={n} outside 1..{MAX_CAT_N}")


def cat_a(n):
    """S_n with 2-morphisms the subrelations of ``pi & sigma``."""
    _guard(n)
    mors = [p.as_relation() for p in permutations(n)]
    C = _one_object(
        "A", n, mors, rel_compose, BinaryRelation.identity(n),
        lambda f, g: subrelations(rel_intersect(f, g)),
        rel_intersect, rel_compose, lambda f: f)
    C.star = BinaryRelation.transpose
    return C


def cat_b(n):
    """S_n inside PP_n with 2-morphisms the coarsenings of ``pi v sigma``."""
    _guard(n)
    C = _one_object(
        "B", n, symmetric_group(n), part_product, SetPartition.identity(n),
        lambda f, g: coarsenings(part_join(f, g)),
        part_join, part_product, lambda f: f)
    C.star = SetPartition.flip
    return C


def ordered_monoid_2cat(elements, product, leq, unit, name="S", n=None):
    """One object, 1-morphisms ``elements``, ``Hom(s, t) = {(s, t)}`` iff ``s <= t``."""
    elements = list(elements)
    check_admissible(elements, product, leq)

    def hom2(s, t):
        return [(s, t)] if leq(s, t) else []

    def vcomp(b, a):
        if a[1] != b[0]:
            raise ValueError("2-morphisms not vertically composable")
        return (a[0], b[1])

    def hcomp(b, a):
        return (product(b[0], a[0]), product(b[1], a[1]))

    return _one_object(name, n, elements, product, unit, hom2, vcomp, hcomp, lambda s: (s, s))


def check_admissible(elements, product, leq):
    for s in elements:
        if not leq(s, s):
            raise OrderError(f"{s!r} is not <= itself")
    for s, t in itertools.permutations(elements, 2):
        if leq(s, t) and leq(t, s):
            raise OrderError(f"antisymmetry fails for {s!r}, {t!r}")
    for s, t in itertools.product(elements, repeat=2):
        if not leq(s, t):
            continue
        for x in elements:
            if not (leq(product(s, x), product(t, x)) and leq(product(x, s), product(x, t))):
                raise OrderError(f"order not admissible: {s!r} <= {t!r}, multiplier {x!r}")


def ordered_isn(n):
    elements = [p.as_relation() for p in enumerate_isn(n)]
    return ordered_monoid_2cat(elements, rel_compose, rel_leq,
                               BinaryRelation.identity(n), "ordered-ISn", n)


def ordered_fstar(n):
    return ordered_monoid_2cat(enumerate_fstar(n), part_product, part_leq,
                               SetPartition.identity(n), "ordered-Fstar", n)


# ---------------------------------------------------------------- checking

@dataclass
class AxiomResult:
    name: str
    status: str = "pass"
    checked: int = 0
    witness: object = None

    def record(self, ok, witness):
        self.checked += 1
        if not ok and self.status == "pass":
            self.status = "fail"
            self.witness = {k: jsonify(v) for k, v in witness.items()}

    def to_json(self):
        return {"name": self.name, "status": self.status,
                "checked": self.checked, "witness": self.witness}


@dataclass
class AxiomReport:
    category: str
    n: int
    mode: str
    seed: int | None
    axioms: list = field(default_factory=list)

    @property
    def passed(self):
        return all(a.status == "pass" for a in self.axioms)

    def to_json(self):
        return {"category": self.category, "n": self.n, "mode": self.mode,
                "seed": self.seed, "axioms": [a.to_json() for a in self.axioms]}


def _chains(C, length):
    """All composable chains ``f1, f2, ...`` (f1 first)."""
    if length == 1:
        for f in C.one_morphisms:
            yield (f,)
        return
    for chain in _chains(C, length - 1):
        for g in C.after(chain[-1]):
            yield chain + (g,)


def _random_chain(C, rng, length):
    chain = (rng.choice(C.one_morphisms),)
    while len(chain) < length:
        chain += (rng.choice(C.after(chain[-1])),)
    return chain


def _vchains(C, f):
    """Exhaustive ``(f, g, h)`` parallel triples starting at ``f``."""
    for g in C.parallel(f):
        for h in C.parallel(f):
            yield f, g, h


def _cases(C, rng, count, exhaustive, sampler):
    if rng is None:
        yield from exhaustive()
    else:
        for _ in range(count):
            case = sampler()
            if case is not None:
                yield case


def _pick(C, rng, f, g):
    hom = C.two_hom(f, g)
    return rng.choice(hom) if hom else None


def _axiom_compose1_assoc(C, rng, count, res):
    def ex():
        for f, g, h in _chains(C, 3):
            yield f, g, h

    def smp():
        return _random_chain(C, rng, 3)

    for f, g, h in _cases(C, rng, count, ex, smp):
        lhs = C.compose1(h, C.compose1(g, f))
        rhs = C.compose1(C.compose1(h, g), f)
        res.record(lhs == rhs, dict(f=f, g=g, h=h))


def _axiom_compose1_units(C, rng, count, res):
    def ex():
        return iter(C.one_morphisms)

    def smp():
        return rng.choice(C.one_morphisms)

    for f in _cases(C, rng, count, ex, smp):
        ok = (C.compose1(f, C.id1(C.source(f))) == f and C.compose1(C.id1(C.target(f)), f) == f)
        res.record(ok, dict(f=f))


def _vpairs(C, rng, count):
    """Cases ``(f, g, h, a, b)`` with ``a: f => g`` and ``b: g => h``."""
    def ex():
        for f in C.one_morphisms:
            for _, g, h in _vchains(C, f):
                for a in C.two_hom(f, g):
                    for b in C.two_hom(g, h):
                        yield f, g, h, a, b

    def smp():
        f = rng.choice(C.one_morphisms)
        g, h = rng.choice(C.parallel(f)), rng.choice(C.parallel(f))
        a, b = _pick(C, rng, f, g), _pick(C, rng, g, h)
        if a is None or b is None:
            return None
        return f, g, h, a, b

    return _cases(C, rng, count, ex, smp)


def _axiom_id2_typing(C, rng, count, res):
    def ex():
        return iter(C.one_morphisms)

    def smp():
        return rng.choice(C.one_morphisms)

    for f in _cases(C, rng, count, ex, smp):
        res.record(C.in_hom(C.id2(f), f, f), dict(f=f))


def _axiom_vcomp_typing(C, rng, count, res):
    for f, g, h, a, b in _vpairs(C, rng, count):
        res.record(C.in_hom(C.vcomp(b, a), f, h), dict(f=f, g=g, h=h, a=a, b=b))


def _axiom_vcomp_units(C, rng, count, res):
    def ex():
        for f in C.one_morphisms:
            for g in C.parallel(f):
                for a in C.two_hom(f, g):
                    yield f, g, a

    def smp():
        f = rng.choice(C.one_morphisms)
        g = rng.choice(C.parallel(f))
        a = _pick(C, rng, f, g)
        return None if a is None else (f, g, a)

    for f, g, a in _cases(C, rng, count, ex, smp):
        ok = C.vcomp(C.id2(g), a) == a and C.vcomp(a, C.id2(f)) == a
        res.record(ok, dict(f=f, g=g, a=a))


def _axiom_vcomp_assoc(C, rng, count, res):
    def ex():
        for f in C.one_morphisms:
            for _, g, h in _vchains(C, f):
                for k in C.parallel(f):
                    for a in C.two_hom(f, g):
                        for b in C.two_hom(g, h):
                            for c in C.two_hom(h, k):
                                yield a, b, c

    def smp():
        f = rng.choice(C.one_morphisms)
        g, h, k = (rng.choice(C.parallel(f)) for _ in range(3))
        a, b, c = _pick(C, rng, f, g), _pick(C, rng, g, h), _pick(C, rng, h, k)
        if a is None or b is None or c is None:
            return None
        return a, b, c

    for a, b, c in _cases(C, rng, count, ex, smp):
        lhs = C.vcomp(c, C.vcomp(b, a))
        rhs = C.vcomp(C.vcomp(c, b), a)
        res.record(lhs == rhs, dict(a=a, b=b, c=c))


def _hpairs(C, rng, count):
    """Cases ``(f, g, f2, g2, a, b)``: ``a: f => g``, ``b: f2 => g2``, f2 after f."""
    def ex():
        for f in C.one_morphisms:
            for g in C.parallel(f):
                for f2 in C.after(f):
                    for g2 in C.parallel(f2):
                        for a in C.two_hom(f, g):
                            for b in C.two_hom(f2, g2):
                                yield f, g, f2, g2, a, b

    def smp():
        f = rng.choice(C.one_morphisms)
        g = rng.choice(C.parallel(f))
        f2 = rng.choice(C.after(f))
        g2 = rng.choice(C.parallel(f2))
        a, b = _pick(C, rng, f, g), _pick(C, rng, f2, g2)
        if a is None or b is None:
            return None
        return f, g, f2, g2, a, b

    return _cases(C, rng, count, ex, smp)


def _axiom_hcomp_typing(C, rng, count, res):
    for f, g, f2, g2, a, b in _hpairs(C, rng, count):
        ok = C.in_hom(C.hcomp(b, a), C.compose1(f2, f), C.compose1(g2, g))
        res.record(ok, dict(f=f, g=g, f2=f2, g2=g2, a=a, b=b))


def _axiom_hcomp_units(C, rng, count, res):
    def ex():
        for f in C.one_morphisms:
            for g in C.parallel(f):
                for a in C.two_hom(f, g):
                    yield f, a

    def smp():
        f = rng.choice(C.one_morphisms)
        a = _pick(C, rng, f, rng.choice(C.parallel(f)))
        return None if a is None else (f, a)

    for f, a in _cases(C, rng, count, ex, smp):
        left = C.id2(C.id1(C.target(f)))
        right = C.id2(C.id1(C.source(f)))
        ok = C.hcomp(left, a) == a and C.hcomp(a, right) == a
        res.record(ok, dict(f=f, a=a))


def _axiom_hcomp_identities(C, rng, count, res):
    def ex():
        return _chains(C, 2)

    def smp():
        return _random_chain(C, rng, 2)

    for f, g in _cases(C, rng, count, ex, smp):
        ok = C.hcomp(C.id2(g), C.id2(f)) == C.id2(C.compose1(g, f))
        res.record(ok, dict(f=f, g=g))


def _axiom_hcomp_assoc(C, rng, count, res):
    def ex():
        for f1, f2, f3 in _chains(C, 3):
            for g1 in C.parallel(f1):
                for g2 in C.parallel(f2):
                    for g3 in C.parallel(f3):
                        for a in C.two_hom(f1, g1):
                            for b in C.two_hom(f2, g2):
                                for c in C.two_hom(f3, g3):
                                    yield a, b, c

    def smp():
        fs = _random_chain(C, rng, 3)
        picks = [_pick(C, rng, f, rng.choice(C.parallel(f))) for f in fs]
        return None if None in picks else tuple(picks)

    for a, b, c in _cases(C, rng, count, ex, smp):
        lhs = C.hcomp(c, C.hcomp(b, a))
        rhs = C.hcomp(C.hcomp(c, b), a)
        res.record(lhs == rhs, dict(a=a, b=b, c=c))


def _axiom_interchange(C, rng, count, res):
    def lower(f):
        # (a, c) with a: f => g, c: g => h, all parallel to f
        for g in C.parallel(f):
            for h in C.parallel(f):
                for a in C.two_hom(f, g):
                    for c in C.two_hom(g, h):
                        yield a, c

    def ex():
        for f in C.one_morphisms:
            bottoms = list(lower(f))
            for f2 in C.after(f):
                tops = list(lower(f2))
                for alpha, gamma in bottoms:
                    for beta, delta in tops:
                        yield alpha, beta, gamma, delta

    def smp():
        f, f2 = _random_chain(C, rng, 2)
        g, h = rng.choice(C.parallel(f)), rng.choice(C.parallel(f))
        g2, h2 = rng.choice(C.parallel(f2)), rng.choice(C.parallel(f2))
        picks = (_pick(C, rng, f, g), _pick(C, rng, f2, g2),
                 _pick(C, rng, g, h), _pick(C, rng, g2, h2))
        return None if None in picks else picks

    for alpha, beta, gamma, delta in _cases(C, rng, count, ex, smp):
        lhs = C.vcomp(C.hcomp(delta, gamma), C.hcomp(beta, alpha))
        rhs = C.hcomp(C.vcomp(delta, beta), C.vcomp(gamma, alpha))
        res.record(lhs == rhs, dict(alpha=alpha, beta=beta, gamma=gamma, delta=delta,
                                    lhs=lhs, rhs=rhs))


AXIOMS = [
    ("compose1_associativity", _axiom_compose1_assoc),
    ("compose1_units", _axiom_compose1_units),
    ("id2_typing", _axiom_id2_typing),
    ("vcomp_typing", _axiom_vcomp_typing),
    ("vcomp_associativity", _axiom_vcomp_assoc),
    ("vcomp_units", _axiom_vcomp_units),
    ("hcomp_typing", _axiom_hcomp_typing),
    ("hcomp_associativity", _axiom_hcomp_assoc),
    ("hcomp_units", _axiom_hcomp_units),
    ("hcomp_identities", _axiom_hcomp_identities),
    ("interchange", _axiom_interchange),
]


def _run(C, checks, mode, seed, count):
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "sampled" and seed is None:
        raise ValueError("sampled mode needs a seed")
    report = AxiomReport(C.name, C.n, mode, seed if mode == "sampled" else None)
    for name, fn in checks:
        # a fresh stream per axiom keeps each one replayable on its own
        rng = random.Random(f"{seed}:{name}") if mode == "sampled" else None
        res = AxiomResult(name)
        fn(C, rng, count, res)
        report.axioms.append(res)
    return report


def check_axioms(C, mode="exhaustive", seed=None, count=100_000):
    """Check the strict 2-category axioms, including the interchange law."""
    return _run(C, AXIOMS, mode, seed, count)


# ------------------------------------------------- translations

def _translations(C, side):
    def whisker(p, a):
        return C.hcomp(C.id2(p), a) if side == "left" else C.hcomp(a, C.id2(p))

    def shifted(p, f):
        return C.compose1(p, f) if side == "left" else C.compose1(f, p)

    def movers(f):
        return C.after(f) if side == "left" else [
            p for i in C.objects for p in C.one_mors(i, C.source(f))]

    def bijection(_C, rng, count, res):
        def ex():
            for f in C.one_morphisms:
                for g in C.parallel(f):
                    for p in movers(f):
                        yield f, g, p

        def smp():
            f = rng.choice(C.one_morphisms)
            return f, rng.choice(C.parallel(f)), rng.choice(movers(f))

        for f, g, p in _cases(C, rng, count, ex, smp):
            src = C.two_hom(f, g)
            image = [whisker(p, a) for a in src]
            target = set(C.two_hom(shifted(p, f), shifted(p, g)))
            ok = len(set(image)) == len(src) and set(image) == target
            res.record(ok, dict(f=f, g=g, p=p))

    def distributive(_C, rng, count, res):
        def ex():
            for f in C.one_morphisms:
                for _, g, h in _vchains(C, f):
                    for p in movers(f):
                        for a in C.two_hom(f, g):
                            for b in C.two_hom(g, h):
                                yield p, a, b

        def smp():
            f = rng.choice(C.one_morphisms)
            g, h = rng.choice(C.parallel(f)), rng.choice(C.parallel(f))
            a, b = _pick(C, rng, f, g), _pick(C, rng, g, h)
            if a is None or b is None:
                return None
            return rng.choice(movers(f)), a, b

        for p, a, b in _cases(C, rng, count, ex, smp):
            lhs = whisker(p, C.vcomp(b, a))
            rhs = C.vcomp(whisker(p, b), whisker(p, a))
            res.record(lhs == rhs, dict(p=p, a=a, b=b))

    return [(f"{side}_translation_bijection", bijection),
            (f"{side}_translation_distributes", distributive)]


def check_translations(C, mode="exhaustive", seed=None, count=100_000):
    """Whiskering by a 1-morphism is a bijection on hom-sets and respects vcomp."""
    return _run(C, _translations(C, "left") + _translations(C, "right"), mode, seed, count)
