import itertools

import pytest

from fiatcat.bicat import cat_a, cat_b
from fiatcat.errors import SizeGuardError
from fiatcat.partitions import SetPartition
from fiatcat.relations import BinaryRelation
from fiatcat.tables import Namer, hom_entries, hom_table, monoid_elements


@pytest.mark.parametrize("cat,build", [("A", cat_a), ("B", cat_b)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_table_restricted_to_group_is_the_2category(cat, build, n):
    C = build(n)
    for f, g in itertools.product(C.one_morphisms, repeat=2):
        assert set(hom_entries(cat, f, g)) == set(C.two_hom(f, g))


@pytest.mark.parametrize("cat,sizes", [("A", [2, 7, 34]), ("B", [1, 3, 16])])
def test_table_dimensions(cat, sizes):
    for n, size in zip((1, 2, 3), sizes):
        assert len(monoid_elements(cat, n)) == size
        t = hom_table(cat, n)
        assert len(t.rows) == len(t.cols) == size
        assert len(t.text().splitlines()) == size + 3


def test_namer_renders_signed_sums():
    nm = Namer("A", 2)
    rel = lambda *ks: BinaryRelation.from_pairs(2, [(k, k) for k in ks])  # noqa: E731
    assert nm.vec({rel(): 1, rel(2): -1, rel(1): -1, rel(1, 2): 1}) == "ε-α-δ+τ"
    assert nm.vec({rel(): -2, rel(1): 1}) == "α-2*τ"
    assert nm.vec({}) == "0"
    assert Namer("A", 3).name(BinaryRelation.identity(3)) == '{"n":3,"pairs":[[1,1],[2,2],[3,3]]}'


def test_partition_names():
    nm = Namer("B", 2)
    assert nm.name(SetPartition.top(2)) == "τ"
    assert nm.vec({SetPartition.identity(2): 1, SetPartition.top(2): -1}) == "ε-τ"


def test_ordered_table_marks_the_order():
    t = hom_table("ordered-Fstar", 2)
    # ε <= τ and σ <= τ only
    assert t.cells == [[["≤"], [], []], [[], ["≤"], []], [["≤"], ["≤"], ["≤"]]]


def test_guards_and_unknown_category():
    with pytest.raises(SizeGuardError):
        hom_table("A", 4)
    with pytest.raises(ValueError):
        hom_table("C", 2)
