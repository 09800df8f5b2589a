"""Finite 2-group symmetric polytopes: constructions and verification."""
__version__ = "0.1.0"
