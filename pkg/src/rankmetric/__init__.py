"""Rank-metric codes over small finite fields: constructions, predicates and
invariants, each computable both by formula and by exhaustive search."""

__version__ = "0.1.0"
