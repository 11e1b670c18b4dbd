"""Set partitions of {1..n, 1'..n'} and the partition monoid P_n.

Points are indexed ``0..2n-1`` internally: ``k-1`` is the unprimed point
``k`` and ``n+k-1`` is ``k'``. Unprimed points are the input side, so
``part_product(rho, pi)`` runs ``pi`` first, matching relation composition.
A permutation ``s`` becomes the partition with blocks ``{x, s(x)'}``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OrderError, SizeGuardError, VerificationError, check_same_n
from .relations import permutations

MAX_COARSEN_BLOCKS = 12
MAX_FSTAR = 5


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)

    def classes(self, points):
        groups = {}
        for p in points:
            groups.setdefault(self.find(p), []).append(p)
        return list(groups.values())


def _canon(blocks):
    return tuple(sorted(tuple(sorted(b)) for b in blocks if b))


@dataclass(frozen=True, eq=False)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        # partitions are hashed constantly by the memo tables
        try:
            return self._hash
        except AttributeError:
            h = hash((self.n, self.blocks))
            object.__setattr__(self, "_hash", h)
            return h

    @classmethod
    def _trusted(cls, n, blocks):
        """Skip validation; ``blocks`` must already be canonical."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "blocks", blocks)
        return obj

    def __post_init__(self):
        flat = sorted(p for b in self.blocks for p in b)
        if flat != list(range(2 * self.n)):
            raise ValueError("blocks must partition 0..2n-1")
        if self.blocks != _canon(self.blocks):
            raise ValueError("blocks not in canonical form; use SetPartition.of")

    @classmethod
    def of(cls, n, blocks):
        return cls(n, _canon(blocks))

    @classmethod
    def from_labels(cls, n, blocks):
        """Build from human labels such as ``[[1, "2'"], [2, "1'"]]``."""
        return cls.of(n, [[parse_point(n, p) for p in b] for b in blocks])

    @classmethod
    def identity(cls, n):
        return cls.of(n, [(k, n + k) for k in range(n)])

    @classmethod
    def top(cls, n):
        return cls(n, (tuple(range(2 * n)),))

    @classmethod
    def from_permutation(cls, perm):
        n = perm.n
        return cls.of(n, [(x - 1, n + perm(x) - 1) for x in range(1, n + 1)])

    @property
    def size(self):
        """Number of blocks."""
        return len(self.blocks)

    def block_of(self):
        out = [0] * (2 * self.n)
        for i, b in enumerate(self.blocks):
            for p in b:
                out[p] = i
        return out

    def sort_key(self):
        return (self.n, self.blocks)

    def flip(self):
        """Swap primed and unprimed points (the diagram upside down)."""
        n = self.n
        return SetPartition.of(n, [[(p + n) % (2 * n) for p in b] for b in self.blocks])

    def domain_quotient(self):
        return QuotientPartition.of(self.n, [[p for p in b if p < self.n] for b in self.blocks])

    def image_quotient(self):
        n = self.n
        return QuotientPartition.of(n, [[p - n for p in b if p >= n] for b in self.blocks])

    def to_json(self):
        return {"n": self.n, "blocks": [[point_label(self.n, p) for p in b] for b in self.blocks]}

    @classmethod
    def from_json(cls, data):
        return cls.from_labels(data["n"], data["blocks"])

    def __repr__(self):
        return f"SetPartition({self.n}, {self.to_json()['blocks']})"


@dataclass(frozen=True)
class QuotientPartition:
    """A partition of {1..n} alone, stored on points ``0..n-1``."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, n, blocks):
        canon = _canon(blocks)
        if sorted(p for b in canon for p in b) != list(range(n)):
            raise ValueError("blocks must partition 0..n-1")
        return cls(n, canon)

    def idempotent(self):
        """The partition with blocks ``B u B'``, an idempotent above the identity."""
        return SetPartition.of(self.n, [list(b) + [p + self.n for p in b] for b in self.blocks])

    def to_json(self):
        return {"n": self.n, "blocks": [[p + 1 for p in b] for b in self.blocks]}


def point_label(n, p):
    return str(p + 1) if p < n else f"{p - n + 1}'"


def parse_point(n, label):
    s = str(label)
    k = int(s.rstrip("'"))
    if not 1 <= k <= n:
        raise ValueError(f"point {label!r} outside 1..{n}")
    return k - 1 + (n if s.endswith("'") else 0)


def part_product(rho, pi):
    """Mini-max product ``rho . pi``: ``pi`` on levels 0/1, ``rho`` on levels 1/2."""
    check_same_n(rho, pi)
    n = rho.n
    uf = UnionFind(3 * n)
    for b in pi.blocks:
        for p in b[1:]:
            uf.union(b[0], p)
    for b in rho.blocks:
        for p in b[1:]:
            uf.union(b[0] + n, p + n)
    outer = list(range(n)) + list(range(2 * n, 3 * n))
    # classes come out sorted internally and ordered by their least point
    return SetPartition._trusted(n, tuple(tuple(p if p < n else p - n for p in c)
                                          for c in uf.classes(outer)))


def part_product_closure(rho, pi):
    """Independent check of ``part_product`` by boolean transitive closure."""
    check_same_n(rho, pi)
    n = rho.n
    adj = np.eye(3 * n, dtype=bool)
    for part, shift in ((pi, 0), (rho, n)):
        for b in part.blocks:
            for p in b:
                for q in b:
                    adj[p + shift, q + shift] = True
    while True:
        nxt = (adj.astype(np.int64) @ adj.astype(np.int64)) > 0
        if (nxt == adj).all():
            break
        adj = nxt
    keep = list(range(n)) + list(range(2 * n, 3 * n))
    sub = adj[np.ix_(keep, keep)]
    seen = set()
    blocks = []
    for i in range(2 * n):
        if i in seen:
            continue
        cls = [j for j in range(2 * n) if sub[i, j]]
        seen.update(cls)
        blocks.append(cls)
    return SetPartition.of(n, blocks)


def is_propagating(p):
    return all(b[0] < p.n <= b[-1] for b in p.blocks)


def part_leq(a, b):
    """``a`` refines ``b``."""
    check_same_n(a, b)
    where = b.block_of()
    return all(len({where[p] for p in blk}) == 1 for blk in a.blocks)


def part_join(a, b):
    check_same_n(a, b)
    uf = UnionFind(2 * a.n)
    for blk in a.blocks + b.blocks:
        for p in blk[1:]:
            uf.union(blk[0], p)
    return SetPartition.of(a.n, uf.classes(range(2 * a.n)))


def part_meet(a, b):
    check_same_n(a, b)
    ia, ib = a.block_of(), b.block_of()
    groups = {}
    for p in range(2 * a.n):
        groups.setdefault((ia[p], ib[p]), []).append(p)
    return SetPartition.of(a.n, groups.values())


def restricted_growth_strings(k):
    """All set partitions of ``k`` labelled items as RGS tuples, in RGS order."""
    if k == 0:
        yield ()
        return
    a = [0] * k

    def rec(i, top):
        if i == k:
            yield tuple(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    a[0] = 0
    yield from rec(1, 0)


def set_partitions(points):
    points = list(points)
    for rgs in restricted_growth_strings(len(points)):
        groups = {}
        for p, g in zip(points, rgs):
            groups.setdefault(g, []).append(p)
        yield list(groups.values())


def coarsenings(a):
    """Every ``b`` with ``a <= b``, in restricted-growth order on ``a``'s blocks."""
    if a.size > MAX_COARSEN_BLOCKS:
        raise SizeGuardError(f"{a.size} blocks exceeds guard {MAX_COARSEN_BLOCKS}")
    out = []
    for merge in set_partitions(range(a.size)):
        out.append(SetPartition.of(a.n, [[p for i in grp for p in a.blocks[i]] for grp in merge]))
    return out


def quotient_partitions(n):
    return [QuotientPartition.of(n, g) for g in set_partitions(range(n))]


def symmetric_group(n):
    return [SetPartition.from_permutation(s) for s in permutations(n)]


def all_partitions(n):
    return [SetPartition.of(n, g) for g in set_partitions(range(2 * n))]


def propagating_partitions(n):
    return [p for p in all_partitions(n) if is_propagating(p)]


def upper_set_closure(xs):
    xs = list(xs)
    if len({x.n for x in xs}) > 1:
        raise ValueError("elements must share n")
    out = set()
    for x in xs:
        out.update(c for c in coarsenings(x) if is_propagating(c))
    return out


def _inverse(s):
    return s.flip()


def enumerate_fstar(n):
    """F*_n as the upper set of S_n, with both factorizations checked."""
    if not 1 <= n <= MAX_FSTAR:
        raise SizeGuardError(f"n={n} outside 1..{MAX_FSTAR}")
    group = symmetric_group(n)
    ident = SetPartition.identity(n)
    out = sorted(upper_set_closure(group), key=SetPartition.sort_key)
    for rho in out:
        sigma = next(s for s in group if part_leq(s, rho))
        left = part_product(rho, _inverse(sigma))
        right = part_product(_inverse(sigma), rho)
        if not (part_leq(ident, left) and part_product(left, sigma) == rho
                and part_leq(ident, right) and part_product(sigma, right) == rho):
            raise VerificationError(f"{rho} does not factor through {sigma}")
    return out


def mobius_of_poset(elements, leq):
    """Mobius function of a finite poset as ``{(x, y): mu}``; absent pairs are 0."""
    elements = list(elements)
    m = len(elements)
    below = [[leq(elements[i], elements[j]) for j in range(m)] for i in range(m)]
    for i in range(m):
        if not below[i][i]:
            raise OrderError(f"{elements[i]!r} is not <= itself")
        for j in range(i + 1, m):
            if below[i][j] and below[j][i]:
                raise OrderError(f"antisymmetry fails for {elements[i]!r}, {elements[j]!r}")
    height = [sum(below[k][j] for k in range(m)) for j in range(m)]
    mu = {}
    for i in range(m):
        ups = sorted((j for j in range(m) if below[i][j]), key=lambda j: height[j])
        local = {}
        for j in ups:
            if j == i:
                local[j] = 1
            else:
                local[j] = -sum(v for k, v in local.items() if below[k][j])
        for j, v in local.items():
            if v:
                mu[elements[i], elements[j]] = v
    return mu
