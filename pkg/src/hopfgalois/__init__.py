"""Exact workbench for Hopf-Galois extensions, bialgebroids and gauge groups."""

__version__ = "0.1.0"
