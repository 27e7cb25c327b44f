"""Artin presentations of pure braids: free-group words, the braid action, group analysis, knot and form invariants."""

__version__ = "0.1.0"
