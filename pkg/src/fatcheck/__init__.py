"""Exact Weinstein invariants and topological fatness obstructions."""

__version__ = "0.1.0"
