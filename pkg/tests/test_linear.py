import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fiatcat.bicat import TwoCategory, cat_a, cat_b, ordered_fstar, ordered_isn
from fiatcat.errors import VerificationError
from fiatcat.linear import (Vec, completed_is_isomorphic, end_of_identity_algebra, fiat_check,
                            independent, linearize, primitive_idempotents, rank, sandwich,
                            split_idempotents, star_checks)
from fiatcat.partitions import SetPartition, coarsenings, mobius_of_poset, part_leq
from fiatcat.relations import BinaryRelation, Permutation, permutations
from oracles import subset_idempotent


def diag(n, xs):
    return BinaryRelation.from_pairs(n, [(k, k) for k in xs])


def idempotents(C):
    L = linearize(C)
    return L, dict(primitive_idempotents(end_of_identity_algebra(L, "i")))


def test_vec_arithmetic():
    a, b = "a", "b"
    u = Vec("f", "g", {a: 1, b: Fraction(1, 2)})
    v = Vec("f", "g", {b: Fraction(-1, 2)})
    assert (u + v).coeffs == {a: 1}
    assert (u - u).is_zero() and (-u + u).is_zero()
    assert (2 * u).coeff(b) == 1 and (u / 2).coeff(a) == Fraction(1, 2)
    assert (3 * u).ratio_to(u) == 3 and v.ratio_to(u) is None
    with pytest.raises(ValueError):
        u + Vec("f", "h", {a: 1})


def test_linear_composition_is_bilinear():
    L = linearize(cat_a(2))
    e = L.base.one_morphisms[0]
    basis = L.basis(e, e)
    x = L.vec(e, e, {basis[0]: 2, basis[1]: -1})
    y = L.vec(e, e, {basis[2]: 3, basis[3]: 1})
    z = L.vec(e, e, {basis[1]: 5})
    assert L.vcomp(x, y + z) == L.vcomp(x, y) + L.vcomp(x, z)
    assert L.hcomp(x + z, y) == L.hcomp(x, y) + L.hcomp(z, y)
    with pytest.raises(ValueError):
        L.vec(e, L.base.one_morphisms[1], {L.base.id2(e): 1})


def test_independent_and_rank():
    vs = [Vec(0, 0, {"a": 1, "b": 1}), Vec(0, 0, {"a": 2, "b": 2}), Vec(0, 0, {"b": 1})]
    assert independent(vs) == [vs[0], vs[2]]
    assert rank(vs) == 2 and rank([]) == 0


@pytest.mark.parametrize("build", [cat_a, cat_b])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_eckmann_hilton_on_identity(build, n):
    alg = end_of_identity_algebra(linearize(build(n)), "i")
    for x, y in itertools.product(alg.basis, repeat=2):
        assert alg.table[x, y] == alg.table[y, x]


def test_eckmann_hilton_failure_detected():
    # a one-object category whose End(1) has o1 = max, o0 = min is not a 2-category
    C = TwoCategory("bad", 1, ["i"], {("i", "i"): [0]}, lambda g, f: 0, lambda i: 0,
                    lambda f, g: [0, 1], max, min, lambda f: 0)
    with pytest.raises(VerificationError):
        end_of_identity_algebra(linearize(C), "i")


def test_primitive_idempotents_a2_exact():
    L, ids = idempotents(cat_a(2))
    names = {"ε": diag(2, [1, 2]), "α": diag(2, [1]), "δ": diag(2, [2]), "τ": diag(2, [])}
    got = sorted(sorted((k.pairs, v) for k, v in e.coeffs.items()) for e in ids.values())
    want = [{"τ": 1}, {"α": 1, "τ": -1}, {"δ": 1, "τ": -1}, {"ε": 1, "α": -1, "δ": -1, "τ": 1}]
    want = sorted(sorted((names[k].pairs, Fraction(v)) for k, v in w.items()) for w in want)
    assert got == want


def test_primitive_idempotents_b2_exact():
    L, ids = idempotents(cat_b(2))
    one, top = SetPartition.identity(2), SetPartition.top(2)
    assert sorted(ids.values(), key=lambda e: len(e.coeffs)) == [
        Vec(one, one, {top: 1}), Vec(one, one, {one: 1, top: -1})]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_catA_idempotents_closed_form(n):
    L, ids = idempotents(cat_a(n))
    assert len(ids) == 2 ** n
    for gen, e in ids.items():
        xs = {k for k, _ in gen.pairs}
        want = {diag(n, ys): c for ys, c in subset_idempotent(xs).items()}
        assert e.coeffs == want


@pytest.mark.parametrize("n", [1, 2, 3])
def test_catB_idempotents_dual_mobius(n):
    L, ids = idempotents(cat_b(n))
    ups = coarsenings(SetPartition.identity(n))
    mu = mobius_of_poset(ups, part_leq)
    assert set(ids) == set(ups)
    for gen, e in ids.items():
        assert e.coeffs == {t: Fraction(mu[gen, t]) for t in ups if mu.get((gen, t))}


@pytest.mark.parametrize("n", [2, 3])
def test_sandwich_vanishes_exactly_off_the_graph(n):
    L = linearize(cat_a(n))
    _, ids = idempotents(cat_a(n))
    for p in permutations(n):
        s = p.as_relation()
        for gx, ex in ids.items():
            for gy, ey in ids.items():
                X = {k for k, _ in gx.pairs}
                Y = {k for k, _ in gy.pairs}
                v = sandwich(L, s, ey, ex)
                assert v.is_zero() == ({p(x) for x in X} != Y)
                if not v.is_zero():
                    # the surviving element is the alternating sum over sub-maps of s on X
                    want = {}
                    for sub, c in subset_idempotent(X).items():
                        want[BinaryRelation.from_pairs(n, [(p(x), x) for x in sub])] = c
                    assert v.coeffs == want


@pytest.mark.parametrize("build,n,objects,classes", [
    (cat_a, 1, 2, 2), (cat_a, 2, 4, 7), (cat_a, 3, 8, 34),
    (cat_b, 1, 1, 1), (cat_b, 2, 2, 3), (cat_b, 3, 5, 16)])
def test_completion_counts(build, n, objects, classes):
    K = split_idempotents(linearize(build(n)))
    assert len(K.objects) == objects
    assert len(K.indecomposables()) == classes
    assert K.locality_report().status == "pass"


def test_isomorphism_witness_in_completion():
    K = split_idempotents(linearize(cat_a(2)))
    top = next(x for x in K.objects if x.generator.size == 0)
    e, s = K.base.one_morphisms
    ok, w = completed_is_isomorphic(K, (e, top, top), (s, top, top))
    assert ok
    L = K.L
    assert L.vcomp(w["backward"], w["forward"]) == K.identity(e, top, top)
    full = next(x for x in K.objects if x.generator.size == 2)
    ok, w = completed_is_isomorphic(K, (e, full, full), (s, full, full))
    assert not ok and w["pairs_checked"] == 0  # Hom(ε, σ) dies in the completion


@pytest.mark.parametrize("build", [cat_a, cat_b])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_fiat_for_extended_categories(build, n):
    rep = fiat_check(build(n))
    assert rep.fiat and rep.witness is None
    assert all(c.status == "pass" for c in rep.checks + rep.empirical)


@pytest.mark.parametrize("n", [2, 3])
def test_ordered_isn_not_fiat(n):
    rep = fiat_check(ordered_isn(n))
    assert not rep.fiat
    s = rep.witness["s"]
    assert s.size == n - 1 and rep.witness["no_unit_2morphisms"]


@pytest.mark.parametrize("n", [2, 3])
def test_ordered_fstar_not_fiat(n):
    rep = fiat_check(ordered_fstar(n))
    assert not rep.fiat
    assert rep.witness["s"].size == n - 1 and rep.witness["no_counit_2morphisms"]


def test_ordered_witnesses_n2():
    assert fiat_check(ordered_isn(2)).witness["s"] == diag(2, [1])
    assert fiat_check(ordered_fstar(2)).witness["s"] == SetPartition.top(2)


def test_trivial_monoid_is_fiat():
    # F*_1 is the one-element group: nothing is non-invertible
    rep = fiat_check(ordered_fstar(1))
    assert rep.fiat and rep.witness is None
    assert fiat_check(ordered_isn(1)).witness["s"] == BinaryRelation.empty(1)


def test_star_check_detects_wrong_involution():
    C = cat_a(3)
    bad = star_checks(C, lambda r: r)
    assert {c.name: c.status for c in bad}["star_reverses_hcomp"] == "fail"


@given(st.permutations([1, 2, 3]))
def test_inverse_is_adjoint_in_base(images):
    C = cat_a(3)
    f = Permutation(3, tuple(images)).as_relation()
    inv = Permutation(3, tuple(images)).inverse().as_relation()
    assert C.compose1(inv, f) == C.id1("i") == C.compose1(f, inv)
    assert C.star(f) == inv
