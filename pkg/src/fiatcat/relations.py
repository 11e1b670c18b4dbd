"""Binary relations on {1..n}, permutations and partial bijections.

Pairs are written ``(y, x)`` meaning "x is sent to y", so composition reads
right to left: ``rel_compose(a, b)`` applies ``b`` first and equals the
boolean matrix product ``a @ b`` of adjacency matrices.

A relation is stored as one bit row per target point: bit ``x-1`` of
``rows[y-1]`` is set iff ``(y, x)`` belongs to the relation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial

from .errors import SizeGuardError, check_same_n

MAX_SUBSET_PAIRS = 24
MAX_ISN = 6


@dataclass(frozen=True)
class BinaryRelation:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.rows) != self.n or any(r < 0 or r >> self.n for r in self.rows):
            raise ValueError("rows do not describe a relation on {1..n}")

    @classmethod
    def from_pairs(cls, n, pairs):
        rows = [0] * n
        for y, x in pairs:
            if not (1 <= x <= n and 1 <= y <= n):
                raise ValueError(f"pair {(y, x)} outside 1..{n}")
            rows[y - 1] |= 1 << (x - 1)
        return cls(n, tuple(rows))

    @classmethod
    def identity(cls, n):
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def empty(cls, n):
        return cls(n, (0,) * n)

    @property
    def pairs(self):
        return [(y + 1, x + 1) for y in range(self.n) for x in range(self.n)
                if self.rows[y] >> x & 1]

    @property
    def size(self):
        return sum(bin(r).count("1") for r in self.rows)

    def sort_key(self):
        return (self.n, self.pairs)

    def transpose(self):
        return BinaryRelation.from_pairs(self.n, [(x, y) for y, x in self.pairs])

    def is_partial_bijection(self):
        cols = 0
        for r in self.rows:
            if r & (r - 1) or r & cols:
                return False
            cols |= r
        return True

    def to_json(self):
        return {"n": self.n, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, data):
        return cls.from_pairs(data["n"], [tuple(p) for p in data["pairs"]])

    def __repr__(self):
        return f"BinaryRelation({self.n}, {self.pairs})"


def rel_compose(a, b):
    """``a . b``: first ``b`` then ``a``."""
    check_same_n(a, b)
    rows = []
    for row in a.rows:
        out = 0
        y = 0
        while row:
            if row & 1:
                out |= b.rows[y]
            row >>= 1
            y += 1
        rows.append(out)
    return BinaryRelation(a.n, tuple(rows))


def rel_intersect(a, b):
    check_same_n(a, b)
    return BinaryRelation(a.n, tuple(x & y for x, y in zip(a.rows, b.rows)))


def rel_union(a, b):
    check_same_n(a, b)
    return BinaryRelation(a.n, tuple(x | y for x, y in zip(a.rows, b.rows)))


def rel_leq(a, b):
    check_same_n(a, b)
    return all(x & ~y == 0 for x, y in zip(a.rows, b.rows))


def subrelations(a):
    """All subsets of ``a``'s pairs, sorted by ``sort_key``."""
    pairs = a.pairs
    if len(pairs) > MAX_SUBSET_PAIRS:
        raise SizeGuardError(f"{len(pairs)} pairs exceeds guard {MAX_SUBSET_PAIRS}")
    out = []
    for mask in range(1 << len(pairs)):
        chosen = [p for i, p in enumerate(pairs) if mask >> i & 1]
        out.append(BinaryRelation.from_pairs(a.n, chosen))
    out.sort(key=BinaryRelation.sort_key)
    return out


def lower_set_closure(xs):
    xs = list(xs)
    if len({x.n for x in xs}) > 1:
        raise ValueError("elements must share n")
    out = set()
    for x in xs:
        out.update(subrelations(x))
    return out


@dataclass(frozen=True)
class Permutation:
    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{self.n}")

    @classmethod
    def identity(cls, n):
        return cls(n, tuple(range(1, n + 1)))

    def __call__(self, x):
        return self.images[x - 1]

    def as_relation(self):
        return BinaryRelation.from_pairs(self.n, [(y, x) for x, y in enumerate(self.images, 1)])

    def inverse(self):
        inv = [0] * self.n
        for x, y in enumerate(self.images, 1):
            inv[y - 1] = x
        return Permutation(self.n, tuple(inv))

    def compose(self, other):
        """``self . other``."""
        return Permutation(self.n, tuple(self(other(x)) for x in range(1, self.n + 1)))


def permutations(n):
    return [Permutation(n, p) for p in itertools.permutations(range(1, n + 1))]


@dataclass(frozen=True)
class PartialBijection:
    """A bijection between subsets of {1..n}, kept as sorted ``(x, y)`` arrows."""

    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        xs = [x for x, _ in self.arrows]
        ys = [y for _, y in self.arrows]
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise ValueError("map is not injective / not a function")
        if list(self.arrows) != sorted(self.arrows):
            raise ValueError("arrows must be sorted")
        if any(not (1 <= v <= self.n) for v in xs + ys):
            raise ValueError("point outside 1..n")

    @classmethod
    def from_map(cls, n, mapping):
        return cls(n, tuple(sorted(mapping.items())))

    @classmethod
    def from_relation(cls, rel):
        if not rel.is_partial_bijection():
            raise ValueError(f"{rel} is not a partial bijection")
        return cls(rel.n, tuple(sorted((x, y) for y, x in rel.pairs)))

    @property
    def dom(self):
        return frozenset(x for x, _ in self.arrows)

    @property
    def image(self):
        return frozenset(y for _, y in self.arrows)

    def __len__(self):
        return len(self.arrows)

    def as_relation(self):
        return BinaryRelation.from_pairs(self.n, [(y, x) for x, y in self.arrows])

    def compose(self, other):
        """``self . other`` as partial maps."""
        mine = dict(self.arrows)
        return PartialBijection(self.n, tuple(sorted(
            (x, mine[y]) for x, y in other.arrows if y in mine)))

    def sort_key(self):
        return self.as_relation().sort_key()

    def to_json(self):
        return {"n": self.n, "map": {str(x): str(y) for x, y in self.arrows}}

    @classmethod
    def from_json(cls, data):
        return cls.from_map(data["n"], {int(x): int(y) for x, y in data["map"].items()})


def domain_image(p):
    return p.dom, p.image


def restrict_permutation(sigma, xs):
    xs = set(xs)
    if not xs <= set(range(1, sigma.n + 1)):
        raise ValueError(f"{xs} is not a subset of 1..{sigma.n}")
    return PartialBijection(sigma.n, tuple(sorted((x, sigma(x)) for x in xs)))


def isn_order(n):
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def enumerate_isn(n):
    """All partial bijections of {1..n}, ordered by relation ``sort_key``."""
    if not 1 <= n <= MAX_ISN:
        raise SizeGuardError(f"n={n} outside 1..{MAX_ISN}")
    out = []
    pts = range(1, n + 1)
    for k in range(n + 1):
        for dom in itertools.combinations(pts, k):
            for img in itertools.permutations(pts, k):
                out.append(PartialBijection(n, tuple(zip(dom, img))))
    out.sort(key=PartialBijection.sort_key)
    return out
