"""Exact order computations on simple-module labels of small diagram-like algebras."""

__version__ = "0.1.0"
