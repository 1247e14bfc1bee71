"""Exact linear algebra over the Gaussian rationals Q(i)."""

from .matrix import MatrixGR, SubspaceGR, intersect, kernel, rank, rref, solve, span, stacked_kernel
from .poly import PolyGR, char_poly, gaussian_roots, poly_from_roots
from .scalar import I, ONE, ZERO, GaussianRational, gr

__all__ = [
    "GaussianRational",
    "MatrixGR",
    "SubspaceGR",
    "PolyGR",
    "I",
    "ONE",
    "ZERO",
    "gr",
    "rref",
    "rank",
    "kernel",
    "stacked_kernel",
    "intersect",
    "span",
    "solve",
    "char_poly",
    "gaussian_roots",
    "poly_from_roots",
]
