"""Turaev surface invariants of link diagrams."""

__version__ = "0.1.0"
