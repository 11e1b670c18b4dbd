"""Finite 2-categories built from binary relations and set partitions, with
exhaustive checks of their axioms, idempotent completions, Grothendieck rings
and fiatness."""

__version__ = "0.1.0"
