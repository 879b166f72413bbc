"""Cycle lengths of automorphisms and affine maps of finite groups."""

__version__ = "0.1.0"
