"""Recurrent-spinor lines: exact Clifford and holonomy computations."""

__version__ = "0.1.0"
