"""Exact computations with braid-like webs, foams and singular Bott-Samelson bimodules."""

__version__ = "0.1.0"
