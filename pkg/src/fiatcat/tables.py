"""Hom tables of the four 2-categories and of the completions, as text or JSON.

For ``n = 2`` text output uses the Greek names ε, σ, τ, α, β, γ, δ for the
monoid elements; every other size uses compact canonical JSON labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._json import jsonify, label
from .errors import SizeGuardError
from .partitions import (SetPartition, coarsenings, enumerate_fstar, part_join, part_leq,
                         part_product)
from .relations import (BinaryRelation, PartialBijection, enumerate_isn, rel_compose,
                        rel_intersect, rel_leq, subrelations)

CATEGORIES = ("A", "B", "ordered-ISn", "ordered-Fstar")
NAME_ORDER = "εσταβγδ"
MAX_TEXT_N = 3


def _family(cat):
    return "A" if cat in ("A", "ordered-ISn") else "B"


def small_names(cat):
    """Greek names of the n = 2 monoid elements."""
    if _family(cat) == "A":
        rel = lambda *pairs: BinaryRelation.from_pairs(2, pairs)  # noqa: E731
        return {rel((1, 1), (2, 2)): "ε", rel((2, 1), (1, 2)): "σ", rel(): "τ",
                rel((1, 1)): "α", rel((2, 1)): "β", rel((1, 2)): "γ", rel((2, 2)): "δ"}
    part = lambda *bs: SetPartition.from_labels(2, bs)  # noqa: E731
    return {part([1, "1'"], [2, "2'"]): "ε", part([1, "2'"], [2, "1'"]): "σ",
            part([1, 2, "1'", "2'"]): "τ"}


class Namer:
    """Display names and display order for monoid elements of one size."""

    def __init__(self, cat, n, greek=True):
        self.names = small_names(cat) if greek and n == 2 else {}

    @staticmethod
    def _norm(x):
        return x.as_relation() if isinstance(x, PartialBijection) else x

    def name(self, x):
        x = self._norm(x)
        if x in self.names:
            return self.names[x]
        return label(x)

    def key(self, x):
        """Descending size, then Greek order (or canonical order)."""
        x = self._norm(x)
        size = x.size
        if x in self.names:
            return (-size, 0, NAME_ORDER.index(self.names[x]), ())
        return (-size, 1, 0, x.sort_key())

    def listing_key(self, x):
        """Row and column order of hom tables: Greek order when named."""
        x = self._norm(x)
        if x in self.names:
            return (0, NAME_ORDER.index(self.names[x]))
        return (1, x.sort_key())

    def vec(self, coeffs):
        """Signed sum such as ``ε-α-δ+τ``; ``0`` for the empty sum."""
        out = []
        for x in sorted(coeffs, key=self.key):
            c = Fraction(coeffs[x])
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = self.name(x) if mag == 1 else f"{mag}*{self.name(x)}"
            out.append(term if not out and sign == "+" else sign + term)
        return "".join(out) or "0"


def monoid_elements(cat, n):
    if _family(cat) == "A":
        return [p.as_relation() for p in enumerate_isn(n)]
    return enumerate_fstar(n)


def hom_entries(cat, x, y):
    """2-morphisms from ``x`` to ``y``; ordered categories give ``[(x, y)]`` or ``[]``."""
    if cat == "A":
        return subrelations(rel_intersect(x, y))
    if cat == "B":
        return coarsenings(part_join(x, y))
    leq = rel_leq if cat == "ordered-ISn" else part_leq
    return [(x, y)] if leq(x, y) else []


@dataclass
class Table:
    title: str
    cols: list
    rows: list
    cells: list  # cells[i][j]: list of display strings for row i, column j
    data: dict

    def text(self):
        head = ["y\\x"] + self.cols
        body = [[r] + [",".join(c) if c else "∅" for c in row]
                for r, row in zip(self.rows, self.cells)]
        widths = [max(len(line[k]) for line in [head] + body) for k in range(len(head))]

        def fmt(line):
            return " | ".join(s.ljust(w) for s, w in zip(line, widths)).rstrip()

        rule = "-+-".join("-" * w for w in widths)
        return "\n".join([self.title, fmt(head), rule] + [fmt(line) for line in body]) + "\n"


def hom_table(cat, n, greek=True):
    if cat not in CATEGORIES:
        raise ValueError(f"unknown category {cat!r}")
    if not 1 <= n <= MAX_TEXT_N:
        raise SizeGuardError(f"n={n} outside 1..{MAX_TEXT_N}")
    nm = Namer(cat, n, greek)
    elems = sorted(monoid_elements(cat, n), key=nm.listing_key)
    cells, data_cells = [], []
    for y in elems:
        row, drow = [], []
        for x in elems:
            hom = hom_entries(cat, x, y)
            if cat.startswith("ordered"):
                row.append(["≤"] if hom else [])
                drow.append(bool(hom))
            else:
                hom = sorted(hom, key=nm.key)
                row.append([nm.name(a) for a in hom])
                drow.append([jsonify(a) for a in hom])
        cells.append(row)
        data_cells.append(drow)
    names = [nm.name(e) for e in elems]
    data = {"category": cat, "n": n, "completed": False,
            "elements": [jsonify(e) for e in elems], "cells": data_cells}
    return Table(f"2-morphisms x -> y in {cat}_{n}", names, names, cells, data)


def _generator_applied(cat, F, x):
    return rel_compose(F, x.generator) if cat == "A" else part_product(F, x.generator)


def completed_objects(K, nm):
    return sorted(K.objects, key=lambda x: nm.key(x.generator))


def object_name(x, nm):
    return "i_{" + nm.vec(x.element.coeffs) + "}"


def completed_table(K, cat, greek=True):
    """Indecomposable 1-morphisms of the completion between each pair of objects."""
    n = K.base.n
    nm = Namer(cat, n, greek)
    objs = completed_objects(K, nm)
    names = [object_name(x, nm) for x in objs]
    cells, data_cells = [], []
    for y in objs:
        row, drow = [], []
        for x in objs:
            classes = sorted(K.classes_between(x, y),
                             key=lambda c: nm.key(_generator_applied(cat, c.rep, x)))
            row.append([nm.vec(c.identity.coeffs) for c in classes])
            drow.append([{"members": jsonify(c.members),
                          "identity": {label(k): jsonify(v) for k, v in
                                       sorted(c.identity.coeffs.items(), key=lambda kv: nm.key(kv[0]))}}
                         for c in classes])
        cells.append(row)
        data_cells.append(drow)
    data = {"category": cat, "n": n, "completed": True,
            "objects": [x.to_json() | {"idempotent": {label(k): jsonify(v) for k, v in
                                                      sorted(x.element.coeffs.items(),
                                                             key=lambda kv: nm.key(kv[0]))}}
                        for x in objs],
            "cells": data_cells}
    return Table(f"indecomposable 1-morphisms x -> y in the completion of {cat}_{n}",
                 names, names, cells, data)
