"""Numerical toolkit for nonrational Fano threefolds with class-group rank two."""

__version__ = "0.1.0"
